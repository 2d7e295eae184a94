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

#include "sball/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sball/kernels.hpp"

namespace sball {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < kPi / 2)) {
    throw Error(ErrorKind::kDeltaOutOfRange, "delta must lie in (0, pi/2)");
  }
}

double wrap_angle(double phi) {
  double a = std::fmod(phi, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

double set_diameter(const std::vector<SpherePoint>& points) {
  if (points.size() < 2) return 0.0;
  const kern::PointsSoA soa(points);
  const kern::MinDotPair p = kern::pairwise_min_dot(soa);
  return std::acos(std::clamp(p.value, -1.0, 1.0));
}

}  // namespace

std::vector<SpherePoint> fibonacci_cap_grid(const SpherePoint& pole,
                                            double cap_radius, double spacing,
                                            std::uint64_t offset) {
  if (!(spacing > 0.0 && cap_radius > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "grid spacing and cap radius must be positive");
  }
  // Mean cell area spacing^2 over the whole sphere.
  const std::uint64_t n =
      static_cast<std::uint64_t>(std::ceil(4.0 * kPi / (spacing * spacing)));
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const double z_min = std::cos(cap_radius);
  std::vector<SpherePoint> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t k = (i + offset) % n;
    const double z = 1.0 - (2.0 * k + 1.0) / static_cast<double>(n);
    if (z < z_min) continue;
    const double frac = std::fmod(static_cast<double>(k) / golden, 1.0);
    const double phi = kTwoPi * frac;
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 local{s * std::cos(phi), s * std::sin(phi), z};
    out.push_back(normalized(rotate_frame_to_pole(local, pole)));
  }
  return out;
}

BallPolygon delta_hull(const std::vector<SpherePoint>& points, double delta,
                       const Tolerances& tol, double diam_slack) {
  check_delta(delta);
  if (points.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "point set must be nonempty");
  }
  const double slack = diam_slack >= 0.0 ? diam_slack : tol.eps_geo;
  if (set_diameter(points) > delta + slack) {
    throw Error(ErrorKind::kDiameterExceeded,
                "point set is wider than the requested delta");
  }
  std::vector<Ball> balls;
  balls.reserve(points.size());
  for (const SpherePoint& p : points) balls.emplace_back(normalized(p), delta);
  return make_body(std::move(balls), tol, delta);
}

VerificationReport is_complete(const BallPolygon& body, double delta,
                               double tol_check, double grid_h) {
  check_delta(delta);
  const double h = grid_h > 0.0 ? grid_h : body.tol.h;

  VerificationReport rep;
  rep.check = "complete";
  rep.tol = tol_check;
  rep.worst.margin = std::numeric_limits<double>::infinity();

  const DiameterResult diam = diameter(body);
  const double diam_margin = tol_check - std::abs(diam.value - delta);
  rep.worst = {diam.a, diam_margin};
  if (diam_margin < 0.0) rep.violations.push_back({diam.a, diam_margin});

  // Exterior grid points of the witness hemisphere must push the diameter
  // past delta. Points within tol_check of the boundary are not decided.
  const std::vector<SpherePoint> grid =
      fibonacci_cap_grid(body.witness_pole, kPi / 2, h);
  rep.n_samples = grid.size() + 1;

  kern::PointsSoA centers;
  std::vector<double> outside_thresh;  // dot below this for some ball => exterior
  centers.reserve(body.balls.size());
  for (const Ball& b : body.balls) {
    centers.push_back(b.center);
    outside_thresh.push_back(std::cos(std::min(b.radius + tol_check, kPi)));
  }

  // Coarse boundary probes give a lower bound on the farthest distance; grid
  // points that clearly pass skip the exact support scan.
  double perimeter = 0.0;
  for (const CircleArc& a : body.arcs) perimeter += a.arc_length();
  const kern::PointsSoA probes(
      sample_boundary(body, std::max(h, perimeter / 64)));

  for (const SpherePoint& x : grid) {
    if (kern::all_dots_at_least(centers, x, outside_thresh.data())) {
      continue;  // inside or within the tolerance band
    }
    const double bound =
        std::acos(std::clamp(kern::min_dot(probes, x).value, -1.0, 1.0));
    if (bound - (delta - tol_check) >= 0.05) continue;
    const double far = farthest_distance(body, x).value;
    const double margin = far - (delta - tol_check);
    if (margin < rep.worst.margin) rep.worst = {x, margin};
    if (margin <= 0.0) rep.violations.push_back({x, margin});
  }
  rep.passed = diam_margin >= 0.0 && rep.violations.empty();
  return rep;
}

BallPolygon complete(const std::vector<SpherePoint>& seed,
                     const CompletionConfig& cfg) {
  check_delta(cfg.delta);
  cfg.tol.validate();
  if (!(cfg.resolution > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "resolution must be positive");
  }
  if (seed.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "seed must be nonempty");
  }
  if (set_diameter(seed) > cfg.delta + cfg.tol.eps_geo) {
    throw Error(ErrorKind::kSeedDiameterExceeded,
                "seed set is wider than delta");
  }
  const double cap_limit = kPi / 2 - cfg.delta - kCompletionCapMargin;
  if (cap_limit <= 0.0) {
    throw Error(ErrorKind::kSeedOutsideCap,
                "delta leaves no room inside the working cap");
  }
  // The output is contained in B_delta(p) for every seed point p, so one
  // seed within cap_limit of the pole pins the whole body inside the open
  // hemisphere; the rest only need to stay inside the working cap.
  double min_reach = kPi;
  for (const SpherePoint& p : seed) {
    const double d = distance(p, cfg.cap_pole);
    min_reach = std::min(min_reach, d);
    if (d > kPi / 2 - kCompletionCapMargin) {
      throw Error(ErrorKind::kSeedOutsideCap,
                  "seed point too close to the hemisphere rim");
    }
  }
  if (min_reach > cap_limit) {
    throw Error(ErrorKind::kSeedOutsideCap,
                "no seed point deep enough inside the working cap");
  }

  // Any acceptable point stays within delta of the innermost seed point.
  const double grid_radius =
      std::min(kPi / 2 - kCompletionCapMargin, min_reach + cfg.delta);
  const std::vector<SpherePoint> grid = fibonacci_cap_grid(
      cfg.cap_pole, grid_radius, cfg.resolution, cfg.seed_order);

  kern::PointsSoA accepted;
  accepted.reserve(seed.size() + grid.size() / 8);
  for (const SpherePoint& p : seed) accepted.push_back(normalized(p));
  const double cos_delta = std::cos(cfg.delta);  // acceptance is exact: <= delta
  for (const SpherePoint& x : grid) {
    if (kern::all_dots_at_least(accepted, x, cos_delta)) {
      accepted.push_back(x);
    }
  }

  // Keep only near-boundary points: a ball whose center has no partner at
  // distance >= delta - 2*resolution is inactive on the hull (the accepted
  // cloud covers the hull to within the lattice covering radius). Clamped
  // at delta/2 so an oversized resolution cannot hollow out the threshold.
  const double keep_thresh =
      std::cos(std::max(cfg.delta - 2.0 * cfg.resolution, cfg.delta / 2));
  std::vector<SpherePoint> centers;
  const std::size_t na = accepted.size();
  for (std::size_t i = 0; i < na; ++i) {
    const kern::MinDot md = kern::min_dot(accepted, accepted.at(i));
    if (md.value <= keep_thresh) centers.push_back(accepted.at(i));
  }
  if (centers.empty()) centers.push_back(accepted.at(0));

  return delta_hull(centers, cfg.delta, cfg.tol);
}

VerificationReport is_constant_diameter(const BallPolygon& body, double delta,
                                        double tol_check) {
  check_delta(delta);
  VerificationReport rep;
  rep.check = "diameter";
  rep.tol = tol_check;
  rep.worst.margin = std::numeric_limits<double>::infinity();

  const DiameterResult diam = diameter(body);
  const double diam_margin = tol_check - std::abs(diam.value - delta);
  rep.worst = {diam.a, diam_margin};
  if (diam_margin < 0.0) rep.violations.push_back({diam.a, diam_margin});

  const std::vector<SpherePoint> samples = sample_boundary(body, body.tol.h);
  rep.n_samples = samples.size() + 1;
  for (const SpherePoint& p : samples) {
    const double far = farthest_distance(body, p).value;
    const double margin = far - (delta - tol_check);
    if (margin < rep.worst.margin) rep.worst = {p, margin};
    if (margin < 0.0) rep.violations.push_back({p, margin});
  }
  rep.passed = diam_margin >= 0.0 && rep.violations.empty();
  return rep;
}

CircleArc piece_of_circle(const SpherePoint& a, const SpherePoint& b,
                          const SpherePoint& c, double delta,
                          const Tolerances& tol) {
  if (!(delta > 0.0 && delta < kPi - tol.eps_geo)) {
    throw Error(ErrorKind::kInvalidArgument, "piece radius must lie in (0, pi)");
  }
  if (distance(a, b) <= tol.eps_geo) {
    throw Error(ErrorKind::kEqualEndpoints, "piece endpoints coincide");
  }
  if (std::abs(distance(a, c) - delta) > tol.eps_geo ||
      std::abs(distance(b, c) - delta) > tol.eps_geo) {
    throw Error(ErrorKind::kNotOnCircle,
                "endpoint not at distance delta from the center");
  }

  CircleArc arc = CircleArc::on_circle(-1, normalized(c), delta);
  const double phi_a = arc.angle_of(a);
  const double phi_b = arc.angle_of(b);

  // The direction angle from c agrees with the circle angle for points on
  // the circle; the arc midpoint picks the side whose directions cross ab.
  const SpherePoint mid = geodesic_point(a, b, 0.5, tol);
  const double dmid = distance(mid, c);
  if (dmid <= tol.eps_geo || dmid >= kPi - tol.eps_geo) {
    throw Error(ErrorKind::kDegeneratePiece,
                "arc ab passes through the circle center");
  }
  const Vec3 t = mid - c * std::cos(dmid);
  const double phi_m = wrap_angle(std::atan2(dot(t, arc.e2), dot(t, arc.e1)));

  const double sweep_ab = wrap_angle(phi_b - phi_a);
  const bool mid_on_ccw = wrap_angle(phi_m - phi_a) <= sweep_ab;
  if (mid_on_ccw) {
    arc.phi_start = phi_a;
    arc.phi_extent = sweep_ab;
  } else {
    arc.phi_start = phi_b;
    arc.phi_extent = kTwoPi - sweep_ab;
  }
  return arc;
}

VerificationReport check_piece_containment(const BallPolygon& body,
                                           const SpherePoint& a,
                                           const SpherePoint& b,
                                           const SpherePoint& c, double delta,
                                           double tol_check) {
  if (contains(body, a) < -body.tol.eps_geo ||
      contains(body, b) < -body.tol.eps_geo) {
    throw Error(ErrorKind::kEndpointsOutsideBody,
                "piece endpoints must lie in the body");
  }
  const CircleArc arc = piece_of_circle(a, b, c, delta, body.tol);

  VerificationReport rep;
  rep.check = "piece";
  rep.tol = tol_check;
  rep.worst.margin = std::numeric_limits<double>::infinity();
  const int n =
      std::max(2, static_cast<int>(std::ceil(arc.arc_length() / body.tol.h)));
  rep.n_samples = static_cast<std::size_t>(n) + 1;
  for (int k = 0; k <= n; ++k) {
    const SpherePoint x = arc.point_at(arc.phi_start + arc.phi_extent * k / n);
    const double margin = contains(body, x) + tol_check;
    if (margin < rep.worst.margin) rep.worst = {x, margin};
    if (margin < 0.0) rep.violations.push_back({x, margin});
  }
  rep.passed = rep.violations.empty();
  return rep;
}

std::vector<std::array<SpherePoint, 3>> admissible_piece_triples(
    const BallPolygon& body, double delta) {
  std::vector<std::array<SpherePoint, 3>> out;
  const Tolerances& tol = body.tol;
  auto on_delta = [&](const SpherePoint& p, const SpherePoint& c) {
    return std::abs(distance(p, c) - delta) <= tol.eps_geo;
  };
  // A vertex together with the two ball centers whose circles cross there.
  for (std::size_t i = 0; i < body.arcs.size(); ++i) {
    const CircleArc& inc = body.arcs[i];
    const CircleArc& outg = body.arcs[(i + 1) % body.arcs.size()];
    if (inc.v_end < 0) continue;
    const SpherePoint v = body.vertices[inc.v_end];
    if (on_delta(inc.center, v) && on_delta(outg.center, v) &&
        distance(inc.center, outg.center) > tol.eps_geo) {
      out.push_back({inc.center, outg.center, v});
    }
  }
  // An arc's endpoints around its own center (the piece is the arc itself).
  for (const CircleArc& arc : body.arcs) {
    if (arc.v_start < 0 || arc.v_start == arc.v_end) continue;
    const SpherePoint a = body.vertices[arc.v_start];
    const SpherePoint b = body.vertices[arc.v_end];
    if (on_delta(a, arc.center) && on_delta(b, arc.center)) {
      out.push_back({a, b, arc.center});
    }
  }
  // Delta-apart vertex pairs with the centers equidistant from both.
  for (std::size_t i = 0; i < body.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < body.vertices.size(); ++j) {
      const SpherePoint& a = body.vertices[i];
      const SpherePoint& b = body.vertices[j];
      if (std::abs(distance(a, b) - delta) > tol.eps_geo) continue;
      try {
        for (const SpherePoint& c :
             circle_intersections(Ball(a, delta), Ball(b, delta), tol)) {
          out.push_back({a, b, c});
        }
      } catch (const Error&) {
      }
    }
  }
  return out;
}

VerificationReport check_pieces_random(const BallPolygon& body, double delta,
                                       double tol_check, int n_triples,
                                       std::uint64_t rng_seed) {
  std::vector<std::array<SpherePoint, 3>> triples =
      admissible_piece_triples(body, delta);
  std::mt19937_64 rng(rng_seed);
  std::shuffle(triples.begin(), triples.end(), rng);
  if (static_cast<int>(triples.size()) > n_triples) triples.resize(n_triples);

  VerificationReport rep;
  rep.check = "piece";
  rep.tol = tol_check;
  rep.passed = true;
  rep.worst.margin = std::numeric_limits<double>::infinity();
  for (const auto& [a, b, c] : triples) {
    const VerificationReport r =
        check_piece_containment(body, a, b, c, delta, tol_check);
    rep.n_samples += r.n_samples;
    if (r.worst.margin < rep.worst.margin) rep.worst = r.worst;
    for (const MarginWitness& w : r.violations) rep.violations.push_back(w);
    rep.passed = rep.passed && r.passed;
  }
  return rep;
}

}  // namespace sball
