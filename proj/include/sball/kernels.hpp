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
// Batch inner-product kernels over structure-of-arrays point sets. These are
// the arithmetic inner loops of the library: membership sweeps, completion
// acceptance tests and pairwise diameter scans all reduce to dot products
// against many unit vectors at once.
//
// Two backends are provided: a scalar reference and an AVX2 variant selected
// at runtime on x86-64. Both evaluate each dot product as
// ((x*qx) + (y*qy)) + (z*qz) with contraction disabled, so results are
// bitwise identical across backends; the equivalence suite asserts this.

#ifndef SBALL_KERNELS_HPP_
#define SBALL_KERNELS_HPP_

#include <cstddef>
#include <vector>

#include "sball/vec3.hpp"

namespace sball::kern {

// Coordinates of a point set, one contiguous array per component.
struct PointsSoA {
  std::vector<double> x, y, z;

  PointsSoA() = default;
  explicit PointsSoA(const std::vector<Vec3>& pts) {
    reserve(pts.size());
    for (const Vec3& p : pts) push_back(p);
  }

  std::size_t size() const { return x.size(); }
  bool empty() const { return x.empty(); }

  void reserve(std::size_t n) {
    x.reserve(n);
    y.reserve(n);
    z.reserve(n);
  }

  void push_back(const Vec3& p) {
    x.push_back(p.x);
    y.push_back(p.y);
    z.push_back(p.z);
  }

  Vec3 at(std::size_t i) const { return {x[i], y[i], z[i]}; }
};

struct MinDot {
  double value = 0.0;
  std::size_t index = 0;  // first index attaining the minimum
};

struct MinDotPair {
  double value = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;  // first (i, j), i < j, in scan order
};

enum class Backend { kScalar, kAvx2 };

Backend active_backend();
const char* backend_name(Backend b);
bool backend_supported(Backend b);
// Overrides the dispatch choice; throws kInvalidArgument if unsupported on
// this machine. Intended for the equivalence tests.
void set_backend(Backend b);

// out[i] = pts[i] . q for all i.
void dots(const PointsSoA& pts, const Vec3& q, double* out);

// Minimum of pts[i] . q; pts must be nonempty.
MinDot min_dot(const PointsSoA& pts, const Vec3& q);

// True iff pts[i] . q >= threshold for all i (early exit on violation).
bool all_dots_at_least(const PointsSoA& pts, const Vec3& q, double threshold);

// Per-point thresholds variant: pts[i] . q >= thresholds[i] for all i.
bool all_dots_at_least(const PointsSoA& pts, const Vec3& q,
                       const double* thresholds);

// Minimum of pts[i] . pts[j] over all pairs i < j; needs size >= 2.
// This is the pairwise diameter scan: min dot = max spherical distance.
MinDotPair pairwise_min_dot(const PointsSoA& pts);

}  // namespace sball::kern

#endif  // SBALL_KERNELS_HPP_
