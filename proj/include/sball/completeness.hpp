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
// Completeness machinery: the delta-hull operator, the greedy grid
// completion, the completeness and constant-diameter predicates, and
// piece-of-circle containment.

#ifndef SBALL_COMPLETENESS_HPP_
#define SBALL_COMPLETENESS_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "sball/body.hpp"
#include "sball/report.hpp"
#include "sball/sphere.hpp"

namespace sball {

// Seeds completed inside the cap around cap_pole of radius
// pi/2 - delta - kCompletionCapMargin keep the whole output body inside the
// open hemisphere around cap_pole.
inline constexpr double kCompletionCapMargin = 0.05;

struct CompletionConfig {
  double delta = 0.0;          // target diameter, in (0, pi/2)
  double resolution = 0.01;    // grid spacing, radians
  SpherePoint cap_pole{0.0, 0.0, 1.0};
  std::uint64_t seed_order = 0;  // start offset into the lattice enumeration
  Tolerances tol;
};

// Deterministic near-uniform grid: spherical Fibonacci lattice with mean
// spacing `spacing`, restricted to the cap of radius cap_radius around pole,
// enumerated in lattice order starting at index `offset`.
std::vector<SpherePoint> fibonacci_cap_grid(const SpherePoint& pole,
                                            double cap_radius, double spacing,
                                            std::uint64_t offset = 0);

// Intersection of the balls of radius delta centered at the points:
// the delta-hull. Requires the point set diameter <= delta + diam_slack
// (default eps_geo) and containment in an open hemisphere.
// Throws kDiameterExceeded / kNoEnclosingHemisphere / kDeltaOutOfRange.
BallPolygon delta_hull(const std::vector<SpherePoint>& points, double delta,
                       const Tolerances& tol = {}, double diam_slack = -1.0);

// Definitional completeness check: (i) |diameter - delta| <= tol_check, and
// (ii) every grid point of the witness hemisphere that is exterior by more
// than tol_check has farthest distance > delta - tol_check. grid_h <= 0
// defaults to tol.h.
VerificationReport is_complete(const BallPolygon& body, double delta,
                               double tol_check, double grid_h = 0.0);

// Greedy Lebesgue-style completion: enumerate the lattice over the working
// cap in fixed order, accept every point within delta of all accepted
// points, then return the delta-hull of the accepted set pruned to
// non-redundant centers. Deterministic for a fixed config.
// Throws kSeedDiameterExceeded / kSeedOutsideCap / kDeltaOutOfRange.
BallPolygon complete(const std::vector<SpherePoint>& seed,
                     const CompletionConfig& cfg);

// Constant-diameter check: |diameter - delta| <= tol_check and every
// boundary sample (spacing tol.h) has a partner at distance
// >= delta - tol_check.
VerificationReport is_constant_diameter(const BallPolygon& body, double delta,
                                        double tol_check);

// Piece of circle P_c(a, b): the arc of the circle of radius delta around c
// with endpoints a and b, spanning the directions from c that cross the arc
// ab. Throws kEqualEndpoints / kNotOnCircle / kDegeneratePiece.
CircleArc piece_of_circle(const SpherePoint& a, const SpherePoint& b,
                          const SpherePoint& c, double delta,
                          const Tolerances& tol = {});

// Samples P_c(a, b) at spacing tol.h and verifies containment in the body
// within tol_check. Throws kEndpointsOutsideBody when a or b is outside.
VerificationReport check_piece_containment(const BallPolygon& body,
                                           const SpherePoint& a,
                                           const SpherePoint& b,
                                           const SpherePoint& c, double delta,
                                           double tol_check);

// Admissible piece triples (a, b, c) read off the body structure: a, b in
// the body with |ac| = |bc| = delta. Sources: ball centers meeting at a
// vertex, arc endpoints around the arc's center, and delta-apart vertex
// pairs with their two equidistant centers.
std::vector<std::array<SpherePoint, 3>> admissible_piece_triples(
    const BallPolygon& body, double delta);

// Runs check_piece_containment over up to n_triples admissible triples,
// drawn deterministically from rng_seed. Vacuously passes when the body
// admits no triple.
VerificationReport check_pieces_random(const BallPolygon& body, double delta,
                                       double tol_check, int n_triples,
                                       std::uint64_t rng_seed);

}  // namespace sball

#endif  // SBALL_COMPLETENESS_HPP_
