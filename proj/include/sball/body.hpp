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
// Spherical convex bodies represented as intersections of balls ("ball
// polygons"). The boundary is a closed chain of small-circle arcs meeting at
// vertices, cached at construction; every body carries a witness pole of an
// open hemisphere containing it.

#ifndef SBALL_BODY_HPP_
#define SBALL_BODY_HPP_

#include <cstddef>
#include <vector>

#include "sball/kernels.hpp"
#include "sball/sphere.hpp"

namespace sball {

// One boundary piece: the part of ball `ball_index`'s boundary circle from
// angle phi_start sweeping phi_extent counterclockwise around the circle's
// center (seen from outside the sphere at the center). A full circle has
// phi_extent == 2*pi and no vertices (v_start == v_end == -1).
struct CircleArc {
  int ball_index = -1;
  SpherePoint center;
  double radius = 0.0;
  Vec3 e1, e2;  // circle frame: point(phi) = cos(r)*c + sin(r)*(cos(phi)*e1 + sin(phi)*e2)
  double phi_start = 0.0;
  double phi_extent = 0.0;
  int v_start = -1;
  int v_end = -1;

  SpherePoint point_at(double phi) const;
  SpherePoint start_point() const { return point_at(phi_start); }
  SpherePoint end_point() const { return point_at(phi_start + phi_extent); }
  double arc_length() const { return phi_extent * std::sin(radius); }
  // Angle of x in the circle frame, in [0, 2*pi).
  double angle_of(const SpherePoint& x) const;
  // True iff the angle phi falls inside [phi_start, phi_start + phi_extent]
  // modulo 2*pi, with slack in angle units.
  bool angle_in_range(double phi, double slack = 0.0) const;

  static CircleArc on_circle(int ball_index, const SpherePoint& center,
                             double radius);
};

// Convex body given as the intersection of finitely many balls, with cached
// boundary structure. Immutable after make_body; all queries are pure.
struct BallPolygon {
  std::vector<Ball> balls;   // canonical: deduplicated, no redundant ball
  double delta = 0.0;        // nominal diameter tag; 0 when untagged
  SpherePoint witness_pole;  // body lies in the open hemisphere around it
  std::vector<SpherePoint> vertices;
  std::vector<CircleArc> arcs;  // boundary in cyclic order
  kern::PointsSoA vertex_cloud;  // vertices again, laid out for the kernels
  Tolerances tol;
};

inline constexpr double kHemisphereMarginMin = 1e-6;

// Builds the canonical body: validates balls, drops duplicates and redundant
// constraints, assembles the boundary chain and finds a hemisphere witness.
// Throws kEmptyBody when the intersection has empty interior and
// kNoEnclosingHemisphere when no pole reaches the minimum support margin.
BallPolygon make_body(std::vector<Ball> balls, const Tolerances& tol = {},
                      double delta_tag = 0.0);

// Signed membership margin: min over balls of (radius - distance(x, center)).
// Nonnegative iff x lies in the body (up to eps_geo).
double contains(const BallPolygon& body, const SpherePoint& x);

struct SupportResult {
  double value = 0.0;     // min over the body of x . u
  SpherePoint argmin;
};

// Minimum of the linear functional x . u over the body, evaluated exactly
// over boundary candidates (vertices plus arc-interior critical points).
SupportResult support_min(const BallPolygon& body, const SpherePoint& u);

struct FarthestResult {
  double value = 0.0;  // radians
  SpherePoint witness;
};

// Max over the body of distance(x, .) = arccos(support_min(body, x).value).
FarthestResult farthest_distance(const BallPolygon& body, const SpherePoint& x);

struct DiameterResult {
  double value = 0.0;  // radians
  SpherePoint a, b;    // realizing pair
};

// Diameter by exact candidate enumeration: vertex-vertex pairs, vertex-arc
// critical points, and arc-arc pairs aligned with the great circle through
// the two circle centers (same-circle pairs contribute 2*radius).
DiameterResult diameter(const BallPolygon& body);

struct HemisphereResult {
  SpherePoint pole;
  double margin = 0.0;  // support_min value at the pole
};

// Pole of an open hemisphere containing the body with margin at least
// kHemisphereMarginMin; normalized center sum followed by local ascent.
HemisphereResult enclosing_hemisphere(const BallPolygon& body);

// Boundary samples at arc-length spacing <= `spacing`, vertices included,
// arcs visited in cyclic order and sampled start to end. Deterministic.
std::vector<SpherePoint> sample_boundary(const BallPolygon& body,
                                         double spacing);

}  // namespace sball

#endif  // SBALL_BODY_HPP_
