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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sball/completeness.hpp"
#include "sball/generators.hpp"
#include "sball/io.hpp"
#include "sball/width.hpp"
#include "test_util.hpp"

using namespace sball;
using test::random_unit;

namespace {

// Equilateral spherical triangle vertices with the given side, around pole.
std::vector<SpherePoint> equilateral_points(double side, const SpherePoint& pole) {
  double lo = 1e-9, hi = kPi / 2;
  auto side_at = [](double r) {
    const double c = std::cos(r), s = std::sin(r);
    return std::acos(std::clamp(c * c + s * s * std::cos(2 * kPi / 3), -1.0, 1.0));
  };
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (side_at(mid) < side ? lo : hi) = mid;
  }
  const double r = 0.5 * (lo + hi);
  const auto [e1, e2] = frame_perp(pole);
  std::vector<SpherePoint> v;
  for (int i = 0; i < 3; ++i) {
    const double phi = 2 * kPi * i / 3;
    v.push_back(normalized(pole * std::cos(r) +
                           (e1 * std::cos(phi) + e2 * std::sin(phi)) * std::sin(r)));
  }
  return v;
}

}  // namespace

TEST_CASE("fibonacci grid is deterministic and near-uniform") {
  const SpherePoint pole{0, 0, 1};
  const auto g1 = fibonacci_cap_grid(pole, 0.5, 0.05);
  const auto g2 = fibonacci_cap_grid(pole, 0.5, 0.05);
  REQUIRE(g1.size() == g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    CHECK((g1[i] - g2[i]).norm() == 0.0);
  }
  // Count roughly matches cap area / spacing^2.
  const double expected = 2 * kPi * (1 - std::cos(0.5)) / (0.05 * 0.05);
  CHECK(g1.size() > expected * 0.8);
  CHECK(g1.size() < expected * 1.2);
  for (const SpherePoint& p : g1) {
    CHECK(distance(p, pole) <= 0.5 + 1e-12);
    CHECK(is_unit(p));
  }
}

TEST_CASE("delta_hull of one point is the ball around it") {
  std::mt19937_64 rng(61);
  const SpherePoint p = random_unit(rng);
  const BallPolygon body = delta_hull({p}, 0.8);
  CHECK(body.balls.size() == 1);
  CHECK((body.balls[0].center - p).norm() < 1e-12);
  CHECK(body.balls[0].radius == doctest::Approx(0.8));
  CHECK(body.delta == doctest::Approx(0.8));
  CHECK(contains(body, p) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("delta_hull of two delta-apart points is the lens") {
  std::mt19937_64 rng(62);
  const double delta = 1.0;
  const SpherePoint a = random_unit(rng);
  const SpherePoint b = test::random_at_distance(rng, a, delta);
  const BallPolygon body = delta_hull({a, b}, delta);
  CHECK(body.balls.size() == 2);
  CHECK(body.vertices.size() == 2);
  CHECK(contains(body, a) >= -1e-12);
  CHECK(contains(body, b) >= -1e-12);
}

TEST_CASE("delta_hull rejects wide sets and bad delta") {
  std::mt19937_64 rng(63);
  const SpherePoint a = random_unit(rng);
  const SpherePoint b = test::random_at_distance(rng, a, 1.1);
  CHECK_THROWS_AS(delta_hull({a, b}, 1.0), Error);
  try {
    delta_hull({a, b}, 1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDiameterExceeded);
  }
  CHECK_THROWS_AS(delta_hull({a}, kPi / 2), Error);
  CHECK_THROWS_AS(delta_hull({a}, 0.0), Error);
}

TEST_CASE("delta_hull is antitone in the point set") {
  // More centers mean more constraints, hence a smaller hull.
  std::mt19937_64 rng(64);
  const double delta = 0.9;
  const SpherePoint pole = random_unit(rng);
  std::vector<SpherePoint> small_set, large_set;
  for (int i = 0; i < 3; ++i) {
    small_set.push_back(test::random_at_distance(
        rng, pole, test::unit_double(rng) * delta / 3));
  }
  large_set = small_set;
  for (int i = 0; i < 3; ++i) {
    large_set.push_back(test::random_at_distance(
        rng, pole, test::unit_double(rng) * delta / 3));
  }
  const BallPolygon hull_small = delta_hull(small_set, delta);
  const BallPolygon hull_large = delta_hull(large_set, delta);
  for (const SpherePoint& x : sample_boundary(hull_large, 0.05)) {
    CHECK(contains(hull_small, x) >= -1e-9);
  }
  // Extensivity: the set lies in its own hull.
  for (const SpherePoint& p : large_set) {
    CHECK(contains(hull_large, p) >= -1e-12);
  }
}

TEST_CASE("is_complete: cap passes, geodesic triangle fails") {
  std::mt19937_64 rng(65);
  const double delta = 1.0;
  const BallPolygon cap = make_body({Ball(random_unit(rng), delta / 2)});
  const VerificationReport good = is_complete(cap, delta, 0.03, 0.02);
  CHECK(good.passed);
  CHECK(good.n_samples > 1000);

  const BallPolygon tri = geodesic_triangle(delta);
  const VerificationReport bad = is_complete(tri, delta, 0.03, 0.02);
  CHECK_FALSE(bad.passed);
  REQUIRE(!bad.violations.empty());
  // Witness: an exterior point whose farthest body point stays within delta;
  // it sits beyond an edge, across from the opposite vertex.
  const MarginWitness& w = bad.worst;
  CHECK(contains(tri, w.point) < -0.03);
  CHECK(farthest_distance(tri, w.point).value < delta + 0.03);
}

TEST_CASE("is_complete: Reuleaux gon passes") {
  const BallPolygon r3 = reuleaux_odd_gon(3, 1.0);
  CHECK(is_complete(r3, 1.0, 0.03, 0.02).passed);
}

TEST_CASE("complete grows a two-point seed to a complete body") {
  const double delta = 0.9;
  CompletionConfig cfg;
  cfg.delta = delta;
  cfg.resolution = 0.02;
  // Seed pair exactly delta apart, symmetric about the working pole.
  const auto [e1, e2] = frame_perp(cfg.cap_pole);
  (void)e2;
  const SpherePoint a =
      normalized(cfg.cap_pole * std::cos(delta / 2) + e1 * std::sin(delta / 2));
  const SpherePoint b =
      normalized(cfg.cap_pole * std::cos(delta / 2) - e1 * std::sin(delta / 2));
  REQUIRE(distance(a, b) == doctest::Approx(delta).epsilon(1e-12));
  REQUIRE(distance(b, cfg.cap_pole) < kPi / 2 - delta - kCompletionCapMargin);

  const BallPolygon body = complete({a, b}, cfg);
  CHECK(contains(body, a) >= -1e-9);
  CHECK(contains(body, b) >= -1e-9);
  CHECK(body.delta == delta);
  const VerificationReport rep = is_complete(body, delta, 3 * cfg.resolution, cfg.resolution);
  CHECK(rep.passed);
}

TEST_CASE("completion of an equilateral seed has constant width") {
  const double delta = 0.8;
  CompletionConfig cfg;
  cfg.delta = delta;
  cfg.resolution = 0.02;
  const BallPolygon body = complete(equilateral_points(delta, cfg.cap_pole), cfg);
  const VerificationReport rep = is_constant_width(body, delta, 3 * cfg.resolution);
  CHECK(rep.passed);
}

TEST_CASE("completion of a single point reaches diameter delta") {
  const double delta = 0.8;
  CompletionConfig cfg;
  cfg.delta = delta;
  cfg.resolution = 0.02;
  const BallPolygon body = complete({SpherePoint{0, 0, 1}}, cfg);
  const double d = diameter(body).value;
  CHECK(std::abs(d - delta) <= 3 * cfg.resolution);
}

TEST_CASE("complete is deterministic, including its serialized form") {
  const double delta = 0.9;
  CompletionConfig cfg;
  cfg.delta = delta;
  cfg.resolution = 0.025;
  const std::vector<SpherePoint> seed = {SpherePoint{0, 0, 1},
                                         SpherePoint{std::sin(0.5), 0, std::cos(0.5)}};
  const BallPolygon b1 = complete(seed, cfg);
  const BallPolygon b2 = complete(seed, cfg);
  CHECK(body_to_string(b1) == body_to_string(b2));
}

TEST_CASE("seed_order offsets the enumeration but keeps outputs valid") {
  const double delta = 0.8;
  CompletionConfig cfg;
  cfg.delta = delta;
  cfg.resolution = 0.025;
  const std::vector<SpherePoint> seed = {SpherePoint{0, 0, 1}};
  cfg.seed_order = 0;
  const BallPolygon b0 = complete(seed, cfg);
  cfg.seed_order = 1234;
  const BallPolygon b1 = complete(seed, cfg);
  CHECK(is_complete(b0, delta, 3 * cfg.resolution, cfg.resolution).passed);
  CHECK(is_complete(b1, delta, 3 * cfg.resolution, cfg.resolution).passed);
  // Same offset, same bytes.
  const BallPolygon b1_again = complete(seed, cfg);
  CHECK(body_to_string(b1) == body_to_string(b1_again));
}

TEST_CASE("complete validates its preconditions") {
  CompletionConfig cfg;
  cfg.delta = 1.0;
  cfg.resolution = 0.02;
  std::mt19937_64 rng(67);
  const SpherePoint a{0, 0, 1};
  const SpherePoint far = test::random_at_distance(rng, a, 1.2);
  CHECK_THROWS_AS(complete({a, far}, cfg), Error);
  try {
    complete({a, far}, cfg);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSeedDiameterExceeded);
  }
  const SpherePoint rim = test::random_at_distance(rng, a, kPi / 2 - 0.2);
  try {
    complete({rim}, cfg);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSeedOutsideCap);
  }
  cfg.delta = 2.0;
  CHECK_THROWS_AS(complete({a}, cfg), Error);
}

TEST_CASE("is_constant_diameter: Reuleaux and cap pass, triangle fails") {
  const double delta = 1.0;
  const BallPolygon r3 = reuleaux_odd_gon(3, delta);
  CHECK(is_constant_diameter(r3, delta, 0.03).passed);

  const BallPolygon cap = make_body({Ball({0, 0, 1}, delta / 2)});
  CHECK(is_constant_diameter(cap, delta, 0.03).passed);

  const BallPolygon tri = geodesic_triangle(delta);
  const VerificationReport bad = is_constant_diameter(tri, delta, 0.03);
  CHECK_FALSE(bad.passed);
  REQUIRE(!bad.violations.empty());
  // Edge-interior points have no delta-partner inside a geodesic triangle.
  CHECK(farthest_distance(tri, bad.worst.point).value < delta - 0.03);
}

TEST_CASE("piece_of_circle spans the directions crossing ab") {
  const SpherePoint c{0, 0, 1};
  const double delta = 0.9;
  const double lon = 40.0 * kPi / 180.0;
  const SpherePoint a{std::sin(delta), 0, std::cos(delta)};
  const SpherePoint b{std::sin(delta) * std::cos(lon), std::sin(delta) * std::sin(lon),
                      std::cos(delta)};
  const CircleArc arc = piece_of_circle(a, b, c, delta);
  CHECK(arc.phi_extent == doctest::Approx(lon).epsilon(1e-10));
  const bool fwd = (arc.start_point() - a).norm() < 1e-9 &&
                   (arc.end_point() - b).norm() < 1e-9;
  const bool rev = (arc.start_point() - b).norm() < 1e-9 &&
                   (arc.end_point() - a).norm() < 1e-9;
  CHECK((fwd || rev));
}

TEST_CASE("piece_of_circle rejects degenerate input") {
  const SpherePoint c{0, 0, 1};
  const double delta = 0.9;
  const SpherePoint a{std::sin(delta), 0, std::cos(delta)};
  CHECK_THROWS_AS(piece_of_circle(a, a, c, delta), Error);
  try {
    piece_of_circle(a, a, c, delta);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEqualEndpoints);
  }
  const SpherePoint close{std::sin(delta - 0.1), 0, std::cos(delta - 0.1)};
  const SpherePoint b{0, std::sin(delta), std::cos(delta)};
  try {
    piece_of_circle(close, b, c, delta);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotOnCircle);
  }
}

TEST_CASE("piece containment: Reuleaux vertices pass with near-zero margins") {
  const double delta = 1.0;
  const BallPolygon r3 = reuleaux_odd_gon(3, delta);
  REQUIRE(r3.vertices.size() == 3);
  const VerificationReport rep = check_piece_containment(
      r3, r3.vertices[0], r3.vertices[1], r3.vertices[2], delta, 0.03);
  CHECK(rep.passed);
  CHECK(std::abs(rep.worst.margin - 0.03) < 1e-6);  // margins ~ 0 before tol
}

TEST_CASE("piece containment fails on the geodesic triangle") {
  const double delta = 1.0;
  const BallPolygon tri = geodesic_triangle(delta);
  // Triangle corners: endpoints of the boundary chain arcs.
  REQUIRE(tri.vertices.size() == 3);
  const VerificationReport rep = check_piece_containment(
      tri, tri.vertices[0], tri.vertices[1], tri.vertices[2], delta, 0.03);
  CHECK_FALSE(rep.passed);
  CHECK(rep.worst.margin < 0.0);
}

TEST_CASE("piece containment rejects exterior endpoints") {
  const double delta = 1.0;
  const BallPolygon r3 = reuleaux_odd_gon(3, delta);
  std::mt19937_64 rng(68);
  const SpherePoint outside =
      test::random_at_distance(rng, r3.witness_pole, kPi / 2 - 0.01);
  CHECK_THROWS_AS(check_piece_containment(r3, outside, r3.vertices[1],
                                          r3.vertices[2], delta, 0.03),
                  Error);
}

TEST_CASE("piece containment holds on a completed body") {
  const double delta = 0.8;
  CompletionConfig cfg;
  cfg.delta = delta;
  cfg.resolution = 0.02;
  const BallPolygon body = complete(equilateral_points(delta, cfg.cap_pole), cfg);
  // Triples from the structure: a vertex and its two adjacent ball centers.
  int tested = 0;
  for (std::size_t i = 0; i < body.arcs.size() && tested < 10; i += 7) {
    const CircleArc& inc = body.arcs[i];
    const CircleArc& outg = body.arcs[(i + 1) % body.arcs.size()];
    if (inc.v_end < 0) continue;
    const SpherePoint v = body.vertices[inc.v_end];
    if (distance(inc.center, outg.center) <= body.tol.eps_geo) continue;
    const VerificationReport rep = check_piece_containment(
        body, inc.center, outg.center, v, delta, 3 * cfg.resolution);
    CHECK(rep.passed);
    ++tested;
  }
  CHECK(tested > 0);
}

TEST_CASE("delta-hull of boundary samples reproduces a complete body") {
  // Lemma-2 style fixed point, at unit-test resolution.
  const double delta = 0.8;
  CompletionConfig cfg;
  cfg.delta = delta;
  cfg.resolution = 0.02;
  const BallPolygon body = complete(equilateral_points(delta, cfg.cap_pole), cfg);
  const std::vector<SpherePoint> samples = sample_boundary(body, 0.02);
  const BallPolygon hull = delta_hull(samples, delta, body.tol, 0.06);
  double worst = 0.0;
  for (const SpherePoint& x : sample_boundary(hull, 0.02)) {
    worst = std::max(worst, -contains(body, x));
  }
  CHECK(worst <= 3 * 0.02);
}
