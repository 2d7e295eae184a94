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

#ifndef SBALL_REPORT_HPP_
#define SBALL_REPORT_HPP_

#include <string>
#include <vector>

#include "sball/sphere.hpp"

namespace sball {

struct MarginWitness {
  SpherePoint point;
  double margin = 0.0;  // signed, radians; negative means violation
};

// Outcome of a numeric predicate: pass/fail plus the witnesses that drove
// the verdict. `worst` is the extreme entry; `violations` lists every sample
// that broke the declared tolerance.
struct VerificationReport {
  std::string check;
  bool passed = false;
  double tol = 0.0;
  std::size_t n_samples = 0;
  MarginWitness worst;
  std::vector<MarginWitness> violations;
};

}  // namespace sball

#endif  // SBALL_REPORT_HPP_
