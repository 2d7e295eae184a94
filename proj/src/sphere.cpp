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

#include "sball/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace sball {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegenerateArc: return "DegenerateArc";
    case ErrorKind::kIdenticalCircles: return "IdenticalCircles";
    case ErrorKind::kEmptyBody: return "EmptyBody";
    case ErrorKind::kNoEnclosingHemisphere: return "NoEnclosingHemisphere";
    case ErrorKind::kDegenerateBoundary: return "DegenerateBoundary";
    case ErrorKind::kDegenerateLune: return "DegenerateLune";
    case ErrorKind::kNotSupporting: return "NotSupporting";
    case ErrorKind::kDiameterExceeded: return "DiameterExceeded";
    case ErrorKind::kSeedDiameterExceeded: return "SeedDiameterExceeded";
    case ErrorKind::kSeedOutsideCap: return "SeedOutsideCap";
    case ErrorKind::kEqualEndpoints: return "EqualEndpoints";
    case ErrorKind::kNotOnCircle: return "NotOnCircle";
    case ErrorKind::kDegeneratePiece: return "DegeneratePiece";
    case ErrorKind::kEndpointsOutsideBody: return "EndpointsOutsideBody";
    case ErrorKind::kEvenK: return "EvenK";
    case ErrorKind::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorKind::kSamplingStalled: return "SamplingStalled";
    case ErrorKind::kBackHemisphere: return "BackHemisphere";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kFormatError: return "FormatError";
  }
  return "UnknownError";
}

void Tolerances::validate() const {
  if (!(eps_alg > 0.0 && eps_alg <= eps_geo && eps_geo <= h)) {
    throw Error(ErrorKind::kInvalidArgument,
                "tolerances must satisfy 0 < eps_alg <= eps_geo <= h");
  }
}

bool is_unit(const Vec3& v, double eps) {
  return std::abs(v.norm() - 1.0) <= eps;
}

SpherePoint normalized(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300)) {
    throw Error(ErrorKind::kInvalidArgument, "cannot normalize zero vector");
  }
  return v / n;
}

double distance(const SpherePoint& a, const SpherePoint& b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

SpherePoint geodesic_point(const SpherePoint& a, const SpherePoint& b, double t,
                           const Tolerances& tol) {
  const double theta = distance(a, b);
  if (theta < tol.eps_geo || theta > kPi - tol.eps_geo) {
    throw Error(ErrorKind::kDegenerateArc, "arc endpoints equal or antipodal");
  }
  const double s = std::sin(theta);
  return normalized(a * (std::sin((1.0 - t) * theta) / s) +
                    b * (std::sin(t * theta) / s));
}

std::pair<Vec3, Vec3> frame_perp(const SpherePoint& u) {
  // Axis least aligned with u, first index on ties.
  const double ax = std::abs(u.x), ay = std::abs(u.y), az = std::abs(u.z);
  Vec3 t;
  if (ax <= ay && ax <= az) {
    t = {1.0, 0.0, 0.0};
  } else if (ay <= az) {
    t = {0.0, 1.0, 0.0};
  } else {
    t = {0.0, 0.0, 1.0};
  }
  const Vec3 e1 = normalized(cross(u, t));
  const Vec3 e2 = cross(u, e1);
  return {e1, e2};
}

std::vector<SpherePoint> circle_intersections(const Ball& b1, const Ball& b2,
                                              const Tolerances& tol) {
  const SpherePoint& c1 = b1.center;
  const SpherePoint& c2 = b2.center;
  const double ang = distance(c1, c2);

  if (ang < tol.eps_geo) {
    if (std::abs(b1.radius - b2.radius) <= tol.eps_geo) {
      throw Error(ErrorKind::kIdenticalCircles, "coincident centers and radii");
    }
    return {};  // concentric, distinct radii
  }
  if (ang > kPi - tol.eps_geo) {
    // Antipodal centers: circles coincide iff radii are complementary.
    if (std::abs(b1.radius + b2.radius - kPi) <= tol.eps_geo) {
      throw Error(ErrorKind::kIdenticalCircles,
                  "antipodal centers with complementary radii");
    }
    return {};
  }

  // Tangency first, so near-tangent configurations return the midpoint
  // solution instead of a spurious pair.
  const bool tangent_ext = std::abs(ang - (b1.radius + b2.radius)) <= tol.eps_geo;
  const bool tangent_int =
      std::abs(ang - std::abs(b1.radius - b2.radius)) <= tol.eps_geo;
  if (tangent_ext || tangent_int) {
    const double d = dot(c1, c2);
    const Vec3 toward = normalized(c2 - c1 * d);
    return {normalized(c1 * std::cos(b1.radius) + toward * std::sin(b1.radius))};
  }

  const double d = dot(c1, c2);
  const double denom = 1.0 - d * d;
  const double k1 = std::cos(b1.radius);
  const double k2 = std::cos(b2.radius);
  const double alpha = (k1 - d * k2) / denom;
  const double beta = (k2 - d * k1) / denom;
  const Vec3 p0 = c1 * alpha + c2 * beta;
  const double disc = 1.0 - p0.norm2();
  if (disc <= 0.0) {
    return {};
  }
  const Vec3 n = cross(c1, c2);  // |n|^2 == denom, p0 . n == 0
  const double s = std::sqrt(disc / denom);
  return {normalized(p0 + n * s), normalized(p0 - n * s)};
}

Vec3 rotate_frame_to_pole(const Vec3& v, const SpherePoint& pole) {
  const double c = pole.z;
  if (c > 1.0 - 1e-14) return v;
  if (c < -1.0 + 1e-14) return {v.x, -v.y, -v.z};  // half turn about x
  // Rodrigues about axis = z x pole.
  const Vec3 axis = normalized(Vec3{-pole.y, pole.x, 0.0});
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
}

}  // namespace sball
