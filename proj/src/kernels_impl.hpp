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
// Backend function table. Each backend translation unit fills one of these.

#ifndef SBALL_KERNELS_IMPL_HPP_
#define SBALL_KERNELS_IMPL_HPP_

#include "sball/kernels.hpp"

namespace sball::kern {

struct Ops {
  void (*dots)(const PointsSoA&, const Vec3&, double*);
  MinDot (*min_dot)(const PointsSoA&, const Vec3&);
  bool (*all_at_least_scalar)(const PointsSoA&, const Vec3&, double);
  bool (*all_at_least_array)(const PointsSoA&, const Vec3&, const double*);
  MinDotPair (*pairwise_min_dot)(const PointsSoA&);
};

const Ops& scalar_ops();

#if defined(SBALL_KERNELS_AVX2)
const Ops& avx2_ops();
#endif

}  // namespace sball::kern

#endif  // SBALL_KERNELS_IMPL_HPP_
