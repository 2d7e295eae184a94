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

#include "sball/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sball {

namespace {

using nlohmann::json;

Vec3 parse_vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() ||
      !j[1].is_number() || !j[2].is_number()) {
    throw Error(ErrorKind::kFormatError,
                std::string(what) + " must be an array of three numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void append_vec3(std::string* out, const Vec3& v) {
  *out += '[';
  *out += format_double(v.x);
  *out += ',';
  *out += format_double(v.y);
  *out += ',';
  *out += format_double(v.z);
  *out += ']';
}

json parse_document(const std::string& text, const char* expected_format) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorKind::kFormatError, "input is not a JSON object");
  }
  if (!doc.contains("format") || !doc["format"].is_string() ||
      doc["format"].get<std::string>() != expected_format) {
    throw Error(ErrorKind::kFormatError,
                std::string("expected format \"") + expected_format + "\"");
  }
  return doc;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string body_to_string(const BallPolygon& body) {
  std::string out;
  out += "{\"format\":\"sball-1\",\"delta\":";
  out += format_double(body.delta);
  out += ",\"witness_pole\":";
  append_vec3(&out, body.witness_pole);
  out += ",\"balls\":[";
  for (std::size_t i = 0; i < body.balls.size(); ++i) {
    if (i) out += ',';
    out += "\n{\"center\":";
    append_vec3(&out, body.balls[i].center);
    out += ",\"radius\":";
    out += format_double(body.balls[i].radius);
    out += '}';
  }
  out += "]}\n";
  return out;
}

BallPolygon body_from_string(const std::string& text, const Tolerances& tol) {
  const json doc = parse_document(text, "sball-1");
  if (!doc.contains("balls") || !doc["balls"].is_array() ||
      doc["balls"].empty()) {
    throw Error(ErrorKind::kFormatError, "body needs a nonempty balls array");
  }
  std::vector<Ball> balls;
  balls.reserve(doc["balls"].size());
  for (const json& jb : doc["balls"]) {
    if (!jb.is_object() || !jb.contains("center") || !jb.contains("radius") ||
        !jb["radius"].is_number()) {
      throw Error(ErrorKind::kFormatError, "ball needs center and radius");
    }
    balls.emplace_back(parse_vec3(jb["center"], "center"),
                       jb["radius"].get<double>());
  }
  double delta = 0.0;
  if (doc.contains("delta") && doc["delta"].is_number()) {
    delta = doc["delta"].get<double>();
    if (delta != 0.0 && !(delta > 0.0 && delta < kPi / 2)) {
      throw Error(ErrorKind::kFormatError, "delta must lie in (0, pi/2)");
    }
  }

  BallPolygon body = make_body(std::move(balls), tol, delta);
  if (doc.contains("witness_pole")) {
    const SpherePoint stored = parse_vec3(doc["witness_pole"], "witness_pole");
    if (!is_unit(stored, 1e-9)) {
      throw Error(ErrorKind::kFormatError, "witness_pole is not a unit vector");
    }
    if (support_min(body, stored).value >= kHemisphereMarginMin) {
      body.witness_pole = stored;  // keep the author's witness when valid
    }
  }
  return body;
}

std::string seeds_to_string(const SeedSet& seeds) {
  std::string out;
  out += "{\"format\":\"spts-1\",\"delta\":";
  out += format_double(seeds.delta);
  out += ",\"cap_pole\":";
  append_vec3(&out, seeds.cap_pole);
  out += ",\"points\":[";
  for (std::size_t i = 0; i < seeds.points.size(); ++i) {
    if (i) out += ',';
    out += '\n';
    append_vec3(&out, seeds.points[i]);
  }
  out += "]}\n";
  return out;
}

SeedSet seeds_from_string(const std::string& text) {
  const json doc = parse_document(text, "spts-1");
  SeedSet s;
  if (doc.contains("delta") && doc["delta"].is_number()) {
    s.delta = doc["delta"].get<double>();
  }
  if (doc.contains("cap_pole")) {
    s.cap_pole = parse_vec3(doc["cap_pole"], "cap_pole");
    if (!is_unit(s.cap_pole, 1e-9)) {
      throw Error(ErrorKind::kFormatError, "cap_pole is not a unit vector");
    }
  }
  if (!doc.contains("points") || !doc["points"].is_array() ||
      doc["points"].empty()) {
    throw Error(ErrorKind::kFormatError, "seed set needs a nonempty points array");
  }
  for (const json& jp : doc["points"]) {
    const Vec3 p = parse_vec3(jp, "point");
    if (!is_unit(p, 1e-9)) {
      throw Error(ErrorKind::kFormatError, "seed point is not a unit vector");
    }
    s.points.push_back(normalized(p));
  }
  return s;
}

std::string reports_to_string(const std::vector<VerificationReport>& reports) {
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    if (i) out += ',';
    out += "\n{\"check\":\"";
    out += r.check;
    out += "\",\"passed\":";
    out += r.passed ? "true" : "false";
    out += ",\"tol\":";
    out += format_double(r.tol);
    out += ",\"worst_margin\":";
    out += format_double(r.worst.margin);
    out += ",\"worst_witness\":";
    append_vec3(&out, r.worst.point);
    out += ",\"n_samples\":";
    out += std::to_string(r.n_samples);
    out += '}';
  }
  out += "]\n";
  return out;
}

std::string profile_to_csv(const WidthProfile& profile) {
  std::string out = "pole_x,pole_y,pole_z,touch_x,touch_y,touch_z,width\n";
  for (const WidthProfileEntry& e : profile.entries) {
    out += format_double(e.pole.x);
    out += ',';
    out += format_double(e.pole.y);
    out += ',';
    out += format_double(e.pole.z);
    out += ',';
    out += format_double(e.touch.x);
    out += ',';
    out += format_double(e.touch.y);
    out += ',';
    out += format_double(e.touch.z);
    out += ',';
    out += format_double(e.width);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIoError, "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorKind::kIoError, "cannot open " + tmp + " for writing");
    }
    out << content;
    if (!out.good()) {
      throw Error(ErrorKind::kIoError, "write failed for " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorKind::kIoError, "rename failed for " + path);
  }
}

BallPolygon read_body_file(const std::string& path, const Tolerances& tol) {
  return body_from_string(read_file(path), tol);
}

void write_body_file(const std::string& path, const BallPolygon& body) {
  write_file_atomic(path, body_to_string(body));
}

SeedSet read_seeds_file(const std::string& path) {
  return seeds_from_string(read_file(path));
}

void write_seeds_file(const std::string& path, const SeedSet& seeds) {
  write_file_atomic(path, seeds_to_string(seeds));
}

}  // namespace sball
