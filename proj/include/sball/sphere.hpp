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
// Primitives on the unit sphere S^2: points, spherical distance, geodesic
// arcs, spherical balls (caps) and the intersections of their boundary
// circles. All angles are radians, all points are unit vectors in E^3.

#ifndef SBALL_SPHERE_HPP_
#define SBALL_SPHERE_HPP_

#include <numbers>
#include <utility>
#include <vector>

#include "sball/error.hpp"
#include "sball/vec3.hpp"

namespace sball {

inline constexpr double kPi = std::numbers::pi;

// A point of S^2, represented by its unit embedding vector.
using SpherePoint = Vec3;

// Tolerance policy shared across the library.
//   eps_alg -- algebraic identities (unit norms, residuals of exact solves)
//   eps_geo -- geometric predicates (degeneracy tests, membership)
//   h       -- sampling resolution for grids, boundaries and normal fans
// Invariant: 0 < eps_alg <= eps_geo <= h.
struct Tolerances {
  double eps_alg = 1e-12;
  double eps_geo = 1e-9;
  double h = 0.01;

  void validate() const;
};

// Spherical cap: all points within `radius` of `center`. A radius of pi/2
// encodes a hemisphere.
struct Ball {
  SpherePoint center;
  double radius = 0.0;

  Ball() = default;
  Ball(const SpherePoint& c, double r) : center(c), radius(r) {}
};

// Hemisphere with the given pole.
inline Ball hemisphere(const SpherePoint& pole) { return Ball(pole, kPi / 2); }

bool is_unit(const Vec3& v, double eps = 1e-12);

// Normalizes v; throws kInvalidArgument on (near-)zero input.
SpherePoint normalized(const Vec3& v);

inline SpherePoint antipode(const SpherePoint& p) { return -p; }

// Spherical (great-circle) distance, in [0, pi]. The inner product is
// clamped to [-1, 1] before arccos so roundoff near 0 and pi is harmless.
double distance(const SpherePoint& a, const SpherePoint& b);

// Point at fraction t in [0, 1] along the shorter arc from a to b.
// Throws kDegenerateArc when a, b are equal or antipodal within eps_geo.
SpherePoint geodesic_point(const SpherePoint& a, const SpherePoint& b, double t,
                           const Tolerances& tol = {});

// Deterministic orthonormal frame (e1, e2) of the plane orthogonal to u,
// with e1 x e2 = u.
std::pair<Vec3, Vec3> frame_perp(const SpherePoint& u);

// Intersection points of the boundary circles of b1 and b2, solved from
// x . c_i = cos(rho_i), |x| = 1. Returns 0, 1 (tangency within eps_geo) or
// 2 points. Throws kIdenticalCircles when the circles coincide within
// eps_geo.
std::vector<SpherePoint> circle_intersections(const Ball& b1, const Ball& b2,
                                              const Tolerances& tol = {});

// Rotation taking (0,0,1) to `pole` by the minimal rotation (deterministic
// choice for pole = -z), applied to v.
Vec3 rotate_frame_to_pole(const Vec3& v, const SpherePoint& pole);

}  // namespace sball

#endif  // SBALL_SPHERE_HPP_
