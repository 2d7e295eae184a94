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

#include "sball/sphere.hpp"
#include "test_util.hpp"

using namespace sball;
using test::random_unit;

TEST_CASE("distance on axis points") {
  const SpherePoint ex{1, 0, 0}, ey{0, 1, 0};
  CHECK(distance(ex, ey) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(distance(ex, ex) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(distance(ex, antipode(ex)) == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const SpherePoint a = random_unit(rng);
    const SpherePoint b = random_unit(rng);
    const SpherePoint c = random_unit(rng);
    CHECK(distance(a, b) == distance(b, a));  // bitwise: IEEE mul commutes
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
  }
}

TEST_CASE("geodesic_point endpoints and midpoint") {
  std::mt19937_64 rng(8);
  const SpherePoint a = random_unit(rng);
  const SpherePoint b = test::random_at_distance(rng, a, 1.1);
  CHECK((geodesic_point(a, b, 0.0) - a).norm() < 1e-12);
  CHECK((geodesic_point(a, b, 1.0) - b).norm() < 1e-12);

  const SpherePoint mid =
      geodesic_point(SpherePoint{1, 0, 0}, SpherePoint{0, 1, 0}, 0.5);
  const double s = std::sqrt(2.0) / 2.0;
  CHECK(mid.x == doctest::Approx(s).epsilon(1e-14));
  CHECK(mid.y == doctest::Approx(s).epsilon(1e-14));
  CHECK(mid.z == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("geodesic_point lies at the right fraction of the arc") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const SpherePoint a = random_unit(rng);
    const double ang = 0.05 + 3.0 * test::unit_double(rng);
    const SpherePoint b = test::random_at_distance(rng, a, std::min(ang, kPi - 0.05));
    const double t = test::unit_double(rng);
    const SpherePoint p = geodesic_point(a, b, t);
    CHECK(std::abs(distance(a, p) - t * distance(a, b)) < 1e-9);
    CHECK(is_unit(p));
  }
}

TEST_CASE("geodesic_point rejects degenerate arcs") {
  const SpherePoint a{0, 0, 1};
  CHECK_THROWS_AS(geodesic_point(a, a, 0.5), Error);
  CHECK_THROWS_AS(geodesic_point(a, antipode(a), 0.5), Error);
  try {
    geodesic_point(a, a, 0.5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDegenerateArc);
  }
}

TEST_CASE("circle_intersections of two coordinate hemispheres") {
  const auto pts = circle_intersections(hemisphere({1, 0, 0}), hemisphere({0, 1, 0}));
  REQUIRE(pts.size() == 2);
  CHECK((pts[0] - SpherePoint{0, 0, 1}).norm() < 1e-14);
  CHECK((pts[1] - SpherePoint{0, 0, -1}).norm() < 1e-14);
}

TEST_CASE("circle_intersections of disjoint caps is empty") {
  const Ball b1({0, 0, 1}, 0.3);
  const Ball b2({1, 0, 0}, 0.3);  // centers pi/2 apart > 0.6
  CHECK(circle_intersections(b1, b2).empty());
}

TEST_CASE("circle_intersections satisfies the defining equations") {
  // Two balls of radius delta with centers delta apart, delta = 1.0: the
  // intersection points must satisfy both circle equations to 1e-10.
  std::mt19937_64 rng(10);
  const double delta = 1.0;
  const SpherePoint a = random_unit(rng);
  const SpherePoint b = test::random_at_distance(rng, a, delta);
  const auto pts = circle_intersections(Ball(a, delta), Ball(b, delta));
  REQUIRE(pts.size() == 2);
  for (const SpherePoint& x : pts) {
    CHECK(std::abs(dot(x, a) - std::cos(delta)) <= 1e-10);
    CHECK(std::abs(dot(x, b) - std::cos(delta)) <= 1e-10);
    CHECK(std::abs(x.norm() - 1.0) <= 1e-12);
    CHECK(distance(x, a) == doctest::Approx(delta).epsilon(1e-10));
    CHECK(distance(x, b) == doctest::Approx(delta).epsilon(1e-10));
  }
}

TEST_CASE("circle_intersections residuals on random transversal pairs") {
  std::mt19937_64 rng(11);
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    const double r1 = 0.1 + 1.3 * test::unit_double(rng);
    const double r2 = 0.1 + 1.3 * test::unit_double(rng);
    const SpherePoint c1 = random_unit(rng);
    const SpherePoint c2 = random_unit(rng);
    std::vector<SpherePoint> pts;
    try {
      pts = circle_intersections(Ball(c1, std::min(r1, kPi / 2)),
                                 Ball(c2, std::min(r2, kPi / 2)));
    } catch (const Error&) {
      continue;
    }
    for (const SpherePoint& x : pts) {
      ++found;
      CHECK(std::abs(dot(x, c1) - std::cos(std::min(r1, kPi / 2))) <= 1e-9);
      CHECK(std::abs(dot(x, c2) - std::cos(std::min(r2, kPi / 2))) <= 1e-9);
      CHECK(is_unit(x));
    }
  }
  CHECK(found > 100);  // the sweep must actually exercise intersections
}

TEST_CASE("circle_intersections tangency and identity") {
  const SpherePoint c1{0, 0, 1};
  std::mt19937_64 rng(12);
  const SpherePoint c2 = test::random_at_distance(rng, c1, 0.8);

  // External tangency: radii sum to the center distance.
  const auto pts = circle_intersections(Ball(c1, 0.5), Ball(c2, 0.3));
  REQUIRE(pts.size() == 1);
  CHECK(distance(pts[0], c1) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(distance(pts[0], c2) == doctest::Approx(0.3).epsilon(1e-9));

  CHECK_THROWS_AS(circle_intersections(Ball(c1, 0.4), Ball(c1, 0.4)), Error);
  try {
    circle_intersections(Ball(c1, 0.4), Ball(c1, 0.4));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIdenticalCircles);
  }
  // Opposite hemispheres share their boundary great circle.
  CHECK_THROWS_AS(
      circle_intersections(hemisphere(c1), hemisphere(antipode(c1))), Error);
}

TEST_CASE("tolerances validate their ordering") {
  Tolerances t;
  CHECK_NOTHROW(t.validate());
  t.eps_geo = 1e-14;  // below eps_alg
  CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("frame_perp is orthonormal and right-handed") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const SpherePoint u = random_unit(rng);
    const auto [e1, e2] = frame_perp(u);
    CHECK(std::abs(dot(e1, u)) < 1e-14);
    CHECK(std::abs(dot(e2, u)) < 1e-14);
    CHECK(std::abs(dot(e1, e2)) < 1e-14);
    CHECK((cross(e1, e2) - u).norm() < 1e-13);
  }
}
