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

#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "sball/error.hpp"

namespace sball::kern {

namespace {

bool cpu_has_avx2() {
#if defined(SBALL_KERNELS_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect_backend() {
  // SBALL_KERNEL_BACKEND=scalar|avx2 overrides the CPU-feature choice.
  if (const char* env = std::getenv("SBALL_KERNEL_BACKEND")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::kAvx2;
  }
  return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend> g_backend{detect_backend()};

const Ops& ops_for(Backend b) {
#if defined(SBALL_KERNELS_AVX2)
  if (b == Backend::kAvx2) return avx2_ops();
#endif
  (void)b;
  return scalar_ops();
}

const Ops& ops() { return ops_for(g_backend.load(std::memory_order_relaxed)); }

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::kScalar: return true;
    case Backend::kAvx2: return cpu_has_avx2();
  }
  return false;
}

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("backend not supported here: ") + backend_name(b));
  }
  g_backend.store(b, std::memory_order_relaxed);
}

void dots(const PointsSoA& pts, const Vec3& q, double* out) {
  if (pts.empty()) return;
  ops().dots(pts, q, out);
}

MinDot min_dot(const PointsSoA& pts, const Vec3& q) {
  if (pts.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "min_dot over empty point set");
  }
  return ops().min_dot(pts, q);
}

bool all_dots_at_least(const PointsSoA& pts, const Vec3& q, double threshold) {
  if (pts.empty()) return true;
  return ops().all_at_least_scalar(pts, q, threshold);
}

bool all_dots_at_least(const PointsSoA& pts, const Vec3& q,
                       const double* thresholds) {
  if (pts.empty()) return true;
  return ops().all_at_least_array(pts, q, thresholds);
}

MinDotPair pairwise_min_dot(const PointsSoA& pts) {
  if (pts.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "pairwise_min_dot needs at least two points");
  }
  return ops().pairwise_min_dot(pts);
}

}  // namespace sball::kern
