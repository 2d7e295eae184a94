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
// AVX2 kernels, 4 doubles per lane. mul/add only (no FMA) so every element
// matches the scalar backend bitwise. Tie-breaking follows scan order: a
// block that improves on the running minimum is rescanned lane by lane.

#include "kernels_impl.hpp"

#if defined(SBALL_KERNELS_AVX2)

#include <immintrin.h>

namespace sball::kern {

namespace {

inline double dot1(const PointsSoA& p, std::size_t i, const Vec3& q) {
  return ((p.x[i] * q.x) + (p.y[i] * q.y)) + (p.z[i] * q.z);
}

inline __m256d dot4(const double* px, const double* py, const double* pz,
                    __m256d qx, __m256d qy, __m256d qz) {
  const __m256d mx = _mm256_mul_pd(_mm256_loadu_pd(px), qx);
  const __m256d my = _mm256_mul_pd(_mm256_loadu_pd(py), qy);
  const __m256d mz = _mm256_mul_pd(_mm256_loadu_pd(pz), qz);
  return _mm256_add_pd(_mm256_add_pd(mx, my), mz);
}

inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m2 = _mm_min_pd(lo, hi);
  const __m128d m1 = _mm_min_sd(m2, _mm_unpackhi_pd(m2, m2));
  return _mm_cvtsd_f64(m1);
}

void dots_avx2(const PointsSoA& pts, const Vec3& q, double* out) {
  const std::size_t n = pts.size();
  const __m256d qx = _mm256_set1_pd(q.x);
  const __m256d qy = _mm256_set1_pd(q.y);
  const __m256d qz = _mm256_set1_pd(q.z);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     dot4(&pts.x[i], &pts.y[i], &pts.z[i], qx, qy, qz));
  }
  for (; i < n; ++i) out[i] = dot1(pts, i, q);
}

MinDot min_dot_avx2(const PointsSoA& pts, const Vec3& q) {
  const std::size_t n = pts.size();
  MinDot best{dot1(pts, 0, q), 0};
  const __m256d qx = _mm256_set1_pd(q.x);
  const __m256d qy = _mm256_set1_pd(q.y);
  const __m256d qz = _mm256_set1_pd(q.z);
  std::size_t i = 1;
  for (; i + 4 <= n; i += 4) {
    const __m256d d4 = dot4(&pts.x[i], &pts.y[i], &pts.z[i], qx, qy, qz);
    if (hmin(d4) < best.value) {
      alignas(32) double lane[4];
      _mm256_store_pd(lane, d4);
      for (int k = 0; k < 4; ++k) {
        if (lane[k] < best.value) {
          best.value = lane[k];
          best.index = i + static_cast<std::size_t>(k);
        }
      }
    }
  }
  for (; i < n; ++i) {
    const double d = dot1(pts, i, q);
    if (d < best.value) {
      best.value = d;
      best.index = i;
    }
  }
  return best;
}

bool all_at_least_scalar_thresh_avx2(const PointsSoA& pts, const Vec3& q,
                                     double threshold) {
  const std::size_t n = pts.size();
  const __m256d qx = _mm256_set1_pd(q.x);
  const __m256d qy = _mm256_set1_pd(q.y);
  const __m256d qz = _mm256_set1_pd(q.z);
  const __m256d t4 = _mm256_set1_pd(threshold);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d4 = dot4(&pts.x[i], &pts.y[i], &pts.z[i], qx, qy, qz);
    if (_mm256_movemask_pd(_mm256_cmp_pd(d4, t4, _CMP_LT_OQ)) != 0) {
      return false;
    }
  }
  for (; i < n; ++i) {
    if (dot1(pts, i, q) < threshold) return false;
  }
  return true;
}

bool all_at_least_array_thresh_avx2(const PointsSoA& pts, const Vec3& q,
                                    const double* thresholds) {
  const std::size_t n = pts.size();
  const __m256d qx = _mm256_set1_pd(q.x);
  const __m256d qy = _mm256_set1_pd(q.y);
  const __m256d qz = _mm256_set1_pd(q.z);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d4 = dot4(&pts.x[i], &pts.y[i], &pts.z[i], qx, qy, qz);
    const __m256d t4 = _mm256_loadu_pd(thresholds + i);
    if (_mm256_movemask_pd(_mm256_cmp_pd(d4, t4, _CMP_LT_OQ)) != 0) {
      return false;
    }
  }
  for (; i < n; ++i) {
    if (dot1(pts, i, q) < thresholds[i]) return false;
  }
  return true;
}

MinDotPair pairwise_min_dot_avx2(const PointsSoA& pts) {
  const std::size_t n = pts.size();
  MinDotPair best{dot1(pts, 1, {pts.x[0], pts.y[0], pts.z[0]}), 0, 1};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 q{pts.x[i], pts.y[i], pts.z[i]};
    const __m256d qx = _mm256_set1_pd(q.x);
    const __m256d qy = _mm256_set1_pd(q.y);
    const __m256d qz = _mm256_set1_pd(q.z);
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) {
      const __m256d d4 = dot4(&pts.x[j], &pts.y[j], &pts.z[j], qx, qy, qz);
      if (hmin(d4) < best.value) {
        alignas(32) double lane[4];
        _mm256_store_pd(lane, d4);
        for (int k = 0; k < 4; ++k) {
          if (lane[k] < best.value) {
            best.value = lane[k];
            best.i = i;
            best.j = j + static_cast<std::size_t>(k);
          }
        }
      }
    }
    for (; j < n; ++j) {
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

const Ops& avx2_ops() {
  static const Ops ops{dots_avx2, min_dot_avx2, all_at_least_scalar_thresh_avx2,
                       all_at_least_array_thresh_avx2, pairwise_min_dot_avx2};
  return ops;
}

}  // namespace sball::kern

#endif  // SBALL_KERNELS_AVX2
