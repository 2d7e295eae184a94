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

#ifndef SBALL_GENERATORS_HPP_
#define SBALL_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "sball/body.hpp"
#include "sball/sphere.hpp"

namespace sball {

// Reuleaux odd-gon of width delta: the delta-hull of k points equally spaced
// on a circle around `pole` whose long diagonals measure exactly delta (the
// circumradius is solved by bisection to 1e-12). Canonical constant-width
// body. Throws kEvenK unless k is odd and >= 3, kDeltaOutOfRange otherwise.
BallPolygon reuleaux_odd_gon(int k, double delta,
                             const SpherePoint& pole = {0.0, 0.0, 1.0},
                             const Tolerances& tol = {});

// Regular geodesic triangle with side `side` centered at `pole`, encoded as
// the intersection of three hemispheres. Constant-width negative control.
BallPolygon geodesic_triangle(double side,
                              const SpherePoint& pole = {0.0, 0.0, 1.0},
                              const Tolerances& tol = {});

// Lens: intersection of two delta-balls whose centers are delta apart, in
// the plane through `pole` (centers symmetric about it). Negative control.
BallPolygon lens_body(double delta, const SpherePoint& pole = {0.0, 0.0, 1.0},
                      const Tolerances& tol = {});

// n points uniform in the cap, rejection-sampled to pairwise distances
// <= max_diam. Deterministic for a fixed rng_seed (own bit-to-double
// mapping, independent of the standard library's distributions).
// Throws kSamplingStalled after 10000*n failed attempts.
std::vector<SpherePoint> random_cap_points(int n, const SpherePoint& cap_pole,
                                           double cap_radius, double max_diam,
                                           std::uint64_t rng_seed);

}  // namespace sball

#endif  // SBALL_GENERATORS_HPP_
