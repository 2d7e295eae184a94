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

#include <algorithm>
#include <cmath>

#include "sball/body.hpp"
#include "sball/generators.hpp"
#include "test_util.hpp"

using namespace sball;
using test::random_unit;

namespace {

// Brute-force boundary oracles, independent of the candidate enumeration.
double bf_support_min(const BallPolygon& body, const SpherePoint& u,
                      double spacing) {
  double best = 2.0;
  for (const SpherePoint& p : sample_boundary(body, spacing)) {
    best = std::min(best, dot(p, u));
  }
  if (contains(body, antipode(u)) >= 0.0) best = std::min(best, -1.0);
  return best;
}

double bf_diameter(const BallPolygon& body, double spacing) {
  const auto pts = sample_boundary(body, spacing);
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, distance(pts[i], pts[j]));
    }
  }
  return best;
}

double bf_farthest(const BallPolygon& body, const SpherePoint& x,
                   double spacing) {
  double best = 0.0;
  for (const SpherePoint& p : sample_boundary(body, spacing)) {
    best = std::max(best, distance(x, p));
  }
  return best;
}

BallPolygon lens(double delta, std::mt19937_64& rng) {
  const SpherePoint a = random_unit(rng);
  const SpherePoint b = test::random_at_distance(rng, a, delta);
  return make_body({Ball(a, delta), Ball(b, delta)}, {}, delta);
}

}  // namespace

TEST_CASE("make_body of a single cap is one full circle") {
  const SpherePoint c{0, 0, 1};
  const BallPolygon body = make_body({Ball(c, 0.4)});
  CHECK(body.balls.size() == 1);
  CHECK(body.vertices.empty());
  REQUIRE(body.arcs.size() == 1);
  CHECK(body.arcs[0].phi_extent == doctest::Approx(2 * kPi));
  CHECK(body.witness_pole.z == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("make_body of a lens has two vertices and two arcs") {
  std::mt19937_64 rng(31);
  const double delta = 1.0;
  const SpherePoint a = random_unit(rng);
  const SpherePoint b = test::random_at_distance(rng, a, delta);
  const BallPolygon body = make_body({Ball(a, delta), Ball(b, delta)});
  CHECK(body.balls.size() == 2);
  CHECK(body.vertices.size() == 2);
  CHECK(body.arcs.size() == 2);
  // The vertices are the circle intersections: both defining equations hold.
  for (const SpherePoint& v : body.vertices) {
    CHECK(std::abs(dot(v, a) - std::cos(delta)) <= 1e-10);
    CHECK(std::abs(dot(v, b) - std::cos(delta)) <= 1e-10);
  }
  // Boundary chain closes: each arc ends where the next starts.
  for (std::size_t i = 0; i < body.arcs.size(); ++i) {
    const CircleArc& cur = body.arcs[i];
    const CircleArc& nxt = body.arcs[(i + 1) % body.arcs.size()];
    CHECK(cur.v_end == nxt.v_start);
  }
}

TEST_CASE("make_body drops a redundant hemisphere") {
  std::mt19937_64 rng(32);
  const double delta = 1.0;
  const SpherePoint a = random_unit(rng);
  const SpherePoint b = test::random_at_distance(rng, a, delta);
  const BallPolygon lens2 = make_body({Ball(a, delta), Ball(b, delta)});
  const SpherePoint mid = geodesic_point(a, b, 0.5);
  const BallPolygon body =
      make_body({Ball(a, delta), Ball(b, delta), hemisphere(mid)});
  CHECK(body.balls.size() == 2);  // hemisphere is a superset constraint
  CHECK(body.vertices.size() == lens2.vertices.size());
  CHECK(body.arcs.size() == lens2.arcs.size());
}

TEST_CASE("make_body rejects empty intersections and lone hemispheres") {
  const SpherePoint c{0, 0, 1};
  const SpherePoint d{1, 0, 0};
  CHECK_THROWS_AS(make_body({Ball(c, 0.3), Ball(d, 0.3)}), Error);
  try {
    make_body({Ball(c, 0.3), Ball(d, 0.3)});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyBody);
  }
  try {
    make_body({hemisphere(c)});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoEnclosingHemisphere);
  }
}

TEST_CASE("contains measures the signed margin") {
  std::mt19937_64 rng(33);
  const SpherePoint c = random_unit(rng);
  const BallPolygon body = make_body({Ball(c, 0.4)});
  CHECK(contains(body, c) == doctest::Approx(0.4).epsilon(1e-12));
  const SpherePoint on = test::random_at_distance(rng, c, 0.4);
  CHECK(std::abs(contains(body, on)) <= 1e-12);
  const SpherePoint outside = test::random_at_distance(rng, c, 0.6);
  CHECK(contains(body, outside) == doctest::Approx(-0.2).epsilon(1e-10));
}

TEST_CASE("support_min of a cap matches the closed form and the oracle") {
  std::mt19937_64 rng(34);
  const double rho = 0.7;
  const SpherePoint c = random_unit(rng);
  const BallPolygon body = make_body({Ball(c, rho)});

  // u = center: min over the cap of x.u is cos(rho), on the boundary circle.
  const SupportResult at_center = support_min(body, c);
  CHECK(at_center.value == doctest::Approx(std::cos(rho)).epsilon(1e-12));
  CHECK(std::abs(contains(body, at_center.argmin)) <= 1e-9);

  for (int i = 0; i < 25; ++i) {
    const SpherePoint u = random_unit(rng);
    const double closed_form = std::cos(std::min(distance(c, u) + rho, kPi));
    const SupportResult s = support_min(body, u);
    if (contains(body, antipode(u)) < 0.0) {
      CHECK(s.value == doctest::Approx(closed_form).epsilon(1e-9));
    }
    CHECK(s.value <= bf_support_min(body, u, 0.001) + 1e-12);
    CHECK(s.value >= bf_support_min(body, u, 0.001) - 1e-5);
  }
}

TEST_CASE("support_min at a lens vertex agrees with dense sampling") {
  std::mt19937_64 rng(35);
  const BallPolygon body = lens(1.0, rng);
  for (const SpherePoint& v : body.vertices) {
    const SupportResult s = support_min(body, v);
    const double oracle = bf_support_min(body, v, 0.001);
    CHECK(s.value <= oracle + 1e-12);
    CHECK(s.value >= oracle - 1e-5);
  }
}

TEST_CASE("farthest_distance equals arccos of support_min") {
  std::mt19937_64 rng(36);
  const BallPolygon body = lens(0.9, rng);
  for (int i = 0; i < 50; ++i) {
    const SpherePoint x = random_unit(rng);
    const FarthestResult f = farthest_distance(body, x);
    const SupportResult s = support_min(body, x);
    CHECK(f.value == std::acos(std::clamp(s.value, -1.0, 1.0)));
    CHECK((f.witness - s.argmin).norm() == 0.0);
  }
}

TEST_CASE("farthest_distance on a cap") {
  std::mt19937_64 rng(37);
  const double rho = 0.45;
  const SpherePoint c = random_unit(rng);
  const BallPolygon body = make_body({Ball(c, rho)});
  CHECK(farthest_distance(body, c).value == doctest::Approx(rho).epsilon(1e-12));
  const SpherePoint on = test::random_at_distance(rng, c, rho);
  CHECK(farthest_distance(body, on).value ==
        doctest::Approx(2 * rho).epsilon(1e-10));
  CHECK(bf_farthest(body, on, 0.001) <= farthest_distance(body, on).value + 1e-12);
}

TEST_CASE("diameter of a cap is twice the radius") {
  std::mt19937_64 rng(38);
  const double rho = 0.45;
  const BallPolygon body = make_body({Ball(random_unit(rng), rho)});
  const DiameterResult d = diameter(body);
  CHECK(d.value == doctest::Approx(2 * rho).epsilon(1e-12));
  CHECK(distance(d.a, d.b) == d.value);
  CHECK(d.value >= bf_diameter(body, 0.001) - 1e-12);
  CHECK(d.value - bf_diameter(body, 0.001) <= 2 * 0.001 * 0.001);
}

TEST_CASE("diameter of a lens exceeds delta at the vertex pair") {
  std::mt19937_64 rng(39);
  const double delta = 1.0;
  const BallPolygon body = lens(delta, rng);
  const DiameterResult d = diameter(body);
  CHECK(d.value > delta + 0.1);
  const double oracle = bf_diameter(body, 0.001);
  CHECK(d.value >= oracle - 1e-12);
  CHECK(d.value - oracle <= 2 * 0.001 * 0.001);
  // Realized at the two lens corners.
  const double corner_dist = distance(body.vertices[0], body.vertices[1]);
  CHECK(d.value == doctest::Approx(corner_dist).epsilon(1e-12));
  // The farthest sweep from a diameter witness recovers the diameter.
  CHECK(farthest_distance(body, d.a).value ==
        doctest::Approx(d.value).epsilon(1e-10));
}

TEST_CASE("diameter of a Reuleaux 3-gon is its width") {
  const BallPolygon body = reuleaux_odd_gon(3, 1.0);
  const DiameterResult d = diameter(body);
  CHECK(d.value == doctest::Approx(1.0).epsilon(1e-9));
  const double oracle = bf_diameter(body, 0.002);
  CHECK(d.value >= oracle - 1e-12);
  CHECK(d.value - oracle <= 2 * 0.002 * 0.002);
}

TEST_CASE("diameter candidates dominate sampling on random hull bodies") {
  std::mt19937_64 rng(40);
  const double h = 0.01;
  for (int trial = 0; trial < 8; ++trial) {
    const double delta = 0.5 + 0.8 * test::unit_double(rng);
    const SpherePoint pole = random_unit(rng);
    std::vector<Ball> balls;
    const int n = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      balls.emplace_back(
          test::random_at_distance(rng, pole, test::unit_double(rng) * delta / 2),
          delta);
    }
    BallPolygon body;
    try {
      body = make_body(balls);
    } catch (const Error&) {
      continue;
    }
    const double enumerated = diameter(body).value;
    const double sampled = bf_diameter(body, h);
    CHECK(enumerated >= sampled - 1e-12);
    CHECK(enumerated - sampled <= 2 * h * h);
  }
}

TEST_CASE("enclosing hemisphere of a cap is its center") {
  std::mt19937_64 rng(41);
  const SpherePoint c = random_unit(rng);
  const double rho = 0.8;
  const BallPolygon body = make_body({Ball(c, rho)});
  const HemisphereResult h = enclosing_hemisphere(body);
  CHECK((h.pole - c).norm() < 1e-9);
  CHECK(h.margin == doctest::Approx(std::cos(rho)).epsilon(1e-9));
}

TEST_CASE("enclosing hemisphere of a Reuleaux gon sits at its pole") {
  std::mt19937_64 rng(42);
  const SpherePoint pole = random_unit(rng);
  const BallPolygon body = reuleaux_odd_gon(3, 1.0, pole);
  const HemisphereResult h = enclosing_hemisphere(body);
  CHECK(h.margin > 0.0);
  CHECK(distance(h.pole, pole) < 0.2);
  CHECK(support_min(body, body.witness_pole).value >= kHemisphereMarginMin);
}

TEST_CASE("sample_boundary spacing, vertices and membership") {
  std::mt19937_64 rng(43);
  const double rho = 0.5;
  const BallPolygon cap = make_body({Ball(random_unit(rng), rho)});
  const double circumference = 2 * kPi * std::sin(rho);
  CHECK(sample_boundary(cap, circumference / 4).size() == 4);

  const BallPolygon body = lens(1.0, rng);
  const auto pts = sample_boundary(body, body.tol.h);
  for (const SpherePoint& v : body.vertices) {
    const bool present = std::any_of(pts.begin(), pts.end(), [&](const SpherePoint& p) {
      return (p - v).norm() < 1e-12;
    });
    CHECK(present);
  }
  for (const SpherePoint& p : pts) {
    CHECK(std::abs(contains(body, p)) <= body.tol.eps_geo);
  }
  CHECK(contains(body, body.vertices[0]) >= -body.tol.eps_geo);
}

TEST_CASE("make_body is idempotent on its canonical ball list") {
  std::mt19937_64 rng(44);
  const BallPolygon body = reuleaux_odd_gon(5, 1.1, random_unit(rng));
  const BallPolygon again = make_body(body.balls, body.tol, body.delta);
  REQUIRE(again.balls.size() == body.balls.size());
  REQUIRE(again.vertices.size() == body.vertices.size());
  REQUIRE(again.arcs.size() == body.arcs.size());
  for (std::size_t i = 0; i < body.vertices.size(); ++i) {
    double best = 10.0;
    for (const SpherePoint& w : again.vertices) {
      best = std::min(best, (body.vertices[i] - w).norm());
    }
    CHECK(best <= body.tol.eps_geo);
  }
}

TEST_CASE("random hulls build consistent boundaries") {
  std::mt19937_64 rng(46);
  int built = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const double delta = 0.3 + 1.0 * test::unit_double(rng);
    const SpherePoint pole = random_unit(rng);
    std::vector<Ball> balls;
    const int n = 2 + static_cast<int>(rng() % 24);
    for (int i = 0; i < n; ++i) {
      balls.emplace_back(
          test::random_at_distance(rng, pole, test::unit_double(rng) * delta / 2),
          delta);
    }
    BallPolygon body;
    try {
      body = make_body(balls);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kEmptyBody);  // only legal failure here
      continue;
    }
    ++built;
    for (std::size_t i = 0; i < body.arcs.size(); ++i) {
      const CircleArc& cur = body.arcs[i];
      if (cur.v_start < 0) continue;
      CHECK(cur.v_end == body.arcs[(i + 1) % body.arcs.size()].v_start);
    }
    for (const SpherePoint& v : body.vertices) {
      CHECK(contains(body, v) >= -body.tol.eps_geo);
    }
    for (const SpherePoint& p : sample_boundary(body, 0.05)) {
      CHECK(std::abs(contains(body, p)) <= 1e-7);
    }
  }
  CHECK(built >= 35);
}

TEST_CASE("supporting argmin lies on the boundary") {
  std::mt19937_64 rng(45);
  const BallPolygon body = reuleaux_odd_gon(3, 0.9, random_unit(rng));
  // Build supporting poles from boundary touch points of one arc.
  const CircleArc& arc = body.arcs[0];
  for (int i = 0; i < 10; ++i) {
    const double phi = arc.phi_start + arc.phi_extent * i / 10;
    const SpherePoint x = arc.point_at(phi);
    const SpherePoint u = normalized(arc.center - x * std::cos(arc.radius));
    const SupportResult s = support_min(body, u);
    CHECK(std::abs(s.value) <= 1e-9);
    CHECK(std::abs(contains(body, s.argmin)) <= 1e-9);
  }
}
