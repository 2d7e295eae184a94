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
// Scalar reference kernels. Compiled with contraction disabled; the AVX2
// backend reproduces these results bit for bit.

#include "kernels_impl.hpp"

namespace sball::kern {

namespace {

inline double dot1(const PointsSoA& p, std::size_t i, const Vec3& q) {
  return ((p.x[i] * q.x) + (p.y[i] * q.y)) + (p.z[i] * q.z);
}

void dots_scalar(const PointsSoA& pts, const Vec3& q, double* out) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = dot1(pts, i, q);
}

MinDot min_dot_scalar(const PointsSoA& pts, const Vec3& q) {
  MinDot best{dot1(pts, 0, q), 0};
  const std::size_t n = pts.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double d = dot1(pts, i, q);
    if (d < best.value) {
      best.value = d;
      best.index = i;
    }
  }
  return best;
}

bool all_at_least_scalar_thresh(const PointsSoA& pts, const Vec3& q,
                                double threshold) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dot1(pts, i, q) < threshold) return false;
  }
  return true;
}

bool all_at_least_array_thresh(const PointsSoA& pts, const Vec3& q,
                               const double* thresholds) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dot1(pts, i, q) < thresholds[i]) return false;
  }
  return true;
}

MinDotPair pairwise_min_dot_scalar(const PointsSoA& pts) {
  const std::size_t n = pts.size();
  MinDotPair best{dot1(pts, 1, {pts.x[0], pts.y[0], pts.z[0]}), 0, 1};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 q{pts.x[i], pts.y[i], pts.z[i]};
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dot1(pts, j, q);
      if (d < best.value) {
        best.value = d;
        best.i = i;
        best.j = j;
      }
    }
  }
  return best;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{dots_scalar, min_dot_scalar, all_at_least_scalar_thresh,
                       all_at_least_array_thresh, pairwise_min_dot_scalar};
  return ops;
}

}  // namespace sball::kern
