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
// File formats. Bodies travel as "sball-1" records, point sets as "spts-1",
// verification results as JSON records and width profiles as CSV. Numbers
// are serialized with 17 significant digits, which round-trips doubles
// exactly; writers emit a fixed field order so identical inputs produce
// byte-identical files.

#ifndef SBALL_IO_HPP_
#define SBALL_IO_HPP_

#include <string>
#include <vector>

#include "sball/body.hpp"
#include "sball/report.hpp"
#include "sball/width.hpp"

namespace sball {

struct SeedSet {
  double delta = 0.0;
  SpherePoint cap_pole{0.0, 0.0, 1.0};
  std::vector<SpherePoint> points;
};

std::string body_to_string(const BallPolygon& body);
// Parses and re-validates: rebuilds the boundary through make_body and keeps
// the stored witness pole when it is still valid. Throws kFormatError.
BallPolygon body_from_string(const std::string& text, const Tolerances& tol = {});

std::string seeds_to_string(const SeedSet& seeds);
SeedSet seeds_from_string(const std::string& text);

std::string reports_to_string(const std::vector<VerificationReport>& reports);
std::string profile_to_csv(const WidthProfile& profile);

// Whole-file helpers; writes go through a temp file + rename.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

BallPolygon read_body_file(const std::string& path, const Tolerances& tol = {});
void write_body_file(const std::string& path, const BallPolygon& body);
SeedSet read_seeds_file(const std::string& path);
void write_seeds_file(const std::string& path, const SeedSet& seeds);

// 17-significant-digit decimal form used by every writer.
std::string format_double(double v);

}  // namespace sball

#endif  // SBALL_IO_HPP_
