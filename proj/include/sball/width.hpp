// Copyright 2026 The sball Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Lunes (intersections of two hemispheres), lune thickness, the width of a
// body determined by a supporting hemisphere, minimal width, and the
// constant-width predicate.

#ifndef SBALL_WIDTH_HPP_
#define SBALL_WIDTH_HPP_

#include <utility>
#include <vector>

#include "sball/body.hpp"
#include "sball/report.hpp"
#include "sball/sphere.hpp"

namespace sball {

// Intersection of the hemispheres around pole_g and pole_h. Valid when the
// poles are neither equal nor antipodal.
struct Lune {
  SpherePoint pole_g;
  SpherePoint pole_h;
};

// Centers of the two semicircles bounding the lune: m_g lies on bd(G) inside
// H (midpoint of the semicircle G/H), and symmetrically for m_h.
// Throws kDegenerateLune for equal or antipodal poles.
std::pair<SpherePoint, SpherePoint> semicircle_centers(const Lune& lune,
                                                       const Tolerances& tol = {});

// Spherical distance of the two semicircle centers. Equals pi minus the
// angle between the poles.
double lune_thickness(const Lune& lune, const Tolerances& tol = {});

// One supporting hemisphere of the body: its pole and the boundary point it
// touches. Fan entries are ordered along the boundary; `segment` and `param`
// locate the entry in the piecewise parametrization for refinement.
struct FanEntry {
  SpherePoint pole;
  SpherePoint touch;
  int segment = 0;
  double param = 0.0;
};

// The one-parameter family of supporting-hemisphere poles, sampled at
// arc-length resolution `spacing`: arc-interior outward normals plus the
// normal intervals swept at each vertex.
std::vector<FanEntry> supporting_pole_fan(const BallPolygon& body,
                                          double spacing);

struct WidthResult {
  double width = 0.0;          // radians
  SpherePoint opposite_pole;   // pole of the second hemisphere of the lune
};

// Width of the body determined by the hemisphere with pole u: the minimum
// thickness over lunes (u, u') containing the body. u must support the body
// (support_min zero within eps_geo), else kNotSupporting.
WidthResult width_at(const BallPolygon& body, const SpherePoint& u);

// Same, against a precomputed fan (avoids rebuilding it per query).
WidthResult width_at(const BallPolygon& body, const SpherePoint& u,
                     const std::vector<FanEntry>& fan);

struct MinWidthResult {
  double width = 0.0;
  Lune lune;  // minimal lune: pole_g supports, pole_h is the opposite pole
};

// Minimum of width_at over all supporting poles, with local refinement.
MinWidthResult min_width(const BallPolygon& body);

struct WidthProfileEntry {
  SpherePoint pole;
  SpherePoint touch;
  double width = 0.0;
};

struct WidthProfile {
  std::vector<WidthProfileEntry> entries;
};

// Width at every fan pole sampled at `spacing` (defaults to tol.h when <= 0).
WidthProfile width_profile(const BallPolygon& body, double spacing = 0.0);

// Passes iff every sampled width lies in [delta - tol_width, delta + tol_width].
// Worst entry = largest deviation from delta.
VerificationReport is_constant_width(const BallPolygon& body, double delta,
                                     double tol_width);

// Claim-2 style check: both semicircle centers of the minimal-width lune must
// lie in the body within tol_margin.
VerificationReport check_claim2(const BallPolygon& body, double tol_margin);

}  // namespace sball

#endif  // SBALL_WIDTH_HPP_
