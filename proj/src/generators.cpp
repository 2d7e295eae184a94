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

#include "sball/generators.hpp"

#include <cmath>
#include <random>

#include "sball/completeness.hpp"

namespace sball {

namespace {

// Distance between two points on the circle of spherical radius r separated
// by the central angle dphi; increasing in r for fixed dphi.
double chord_distance(double r, double dphi) {
  const double cr = std::cos(r), sr = std::sin(r);
  return std::acos(std::clamp(cr * cr + sr * sr * std::cos(dphi), -1.0, 1.0));
}

// Solves chord_distance(r, dphi) == target by bisection on (0, pi/2).
double solve_circumradius(double dphi, double target) {
  double lo = 1e-12, hi = kPi / 2;
  if (chord_distance(hi, dphi) < target) {
    throw Error(ErrorKind::kDeltaOutOfRange,
                "no circumradius reaches the requested distance");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (chord_distance(mid, dphi) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<SpherePoint> regular_polygon(int k, double circumradius,
                                         const SpherePoint& pole) {
  const auto [e1, e2] = frame_perp(pole);
  const double cr = std::cos(circumradius), sr = std::sin(circumradius);
  std::vector<SpherePoint> v;
  v.reserve(k);
  for (int i = 0; i < k; ++i) {
    const double phi = 2.0 * kPi * i / k;
    v.push_back(normalized(pole * cr +
                           (e1 * std::cos(phi) + e2 * std::sin(phi)) * sr));
  }
  return v;
}

}  // namespace

BallPolygon reuleaux_odd_gon(int k, double delta, const SpherePoint& pole,
                             const Tolerances& tol) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorKind::kEvenK, "k must be an odd integer >= 3");
  }
  if (!(delta > 0.0 && delta < kPi / 2)) {
    throw Error(ErrorKind::kDeltaOutOfRange, "delta must lie in (0, pi/2)");
  }
  const int m = (k - 1) / 2;
  const double dphi = 2.0 * kPi * m / k;  // long diagonal central angle
  const double r = solve_circumradius(dphi, delta);
  return delta_hull(regular_polygon(k, r, normalized(pole)), delta, tol);
}

BallPolygon geodesic_triangle(double side, const SpherePoint& pole,
                              const Tolerances& tol) {
  if (!(side > 0.0 && side < kPi / 2)) {
    throw Error(ErrorKind::kDeltaOutOfRange, "side must lie in (0, pi/2)");
  }
  const double r = solve_circumradius(2.0 * kPi / 3, side);
  const std::vector<SpherePoint> v = regular_polygon(3, r, normalized(pole));
  std::vector<Ball> halves;
  for (int i = 0; i < 3; ++i) {
    Vec3 n = cross(v[i], v[(i + 1) % 3]);
    if (dot(n, v[(i + 2) % 3]) < 0.0) n = -n;
    halves.push_back(hemisphere(normalized(n)));
  }
  return make_body(std::move(halves), tol, side);
}

BallPolygon lens_body(double delta, const SpherePoint& pole,
                      const Tolerances& tol) {
  if (!(delta > 0.0 && delta < kPi / 2)) {
    throw Error(ErrorKind::kDeltaOutOfRange, "delta must lie in (0, pi/2)");
  }
  const auto [e1, e2] = frame_perp(normalized(pole));
  (void)e2;
  const SpherePoint a = normalized(pole * std::cos(delta / 2) + e1 * std::sin(delta / 2));
  const SpherePoint b = normalized(pole * std::cos(delta / 2) - e1 * std::sin(delta / 2));
  return delta_hull({a, b}, delta, tol);
}

std::vector<SpherePoint> random_cap_points(int n, const SpherePoint& cap_pole,
                                           double cap_radius, double max_diam,
                                           std::uint64_t rng_seed) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need at least one point");
  }
  if (!(cap_radius > 0.0 && cap_radius < kPi / 2)) {
    throw Error(ErrorKind::kInvalidArgument, "cap radius must lie in (0, pi/2)");
  }
  if (!(max_diam > 0.0 && max_diam < kPi / 2)) {
    throw Error(ErrorKind::kInvalidArgument, "max_diam must lie in (0, pi/2)");
  }
  const SpherePoint pole = normalized(cap_pole);
  const auto [e1, e2] = frame_perp(pole);

  std::mt19937_64 rng(rng_seed);
  // Fixed 53-bit mapping so outputs do not depend on the standard library's
  // distribution implementations.
  auto next_unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<SpherePoint> out;
  out.reserve(n);
  const double zmin = std::cos(cap_radius);
  std::int64_t budget = 10000 * static_cast<std::int64_t>(n);
  while (static_cast<int>(out.size()) < n && budget-- > 0) {
    const double z = 1.0 - next_unit() * (1.0 - zmin);  // uniform in cap area
    const double phi = 2.0 * kPi * next_unit();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const SpherePoint p = normalized(
        pole * z + (e1 * std::cos(phi) + e2 * std::sin(phi)) * s);
    bool ok = true;
    for (const SpherePoint& q : out) {
      if (distance(p, q) > max_diam) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  }
  if (static_cast<int>(out.size()) < n) {
    throw Error(ErrorKind::kSamplingStalled,
                "rejection sampling exhausted its retry budget");
  }
  return out;
}

}  // namespace sball
