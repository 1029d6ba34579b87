#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gconf/geometry.hpp"

using namespace gconf;

namespace {

bool near(const Point& a, const Point& b, double tol = 1e-9) { return distance(a, b) <= tol; }

bool has_point(const Intersection& x, const Point& p) {
  return std::any_of(x.points.begin(), x.points.end(), [&](const Point& q) { return near(q, p); });
}

template <typename E>
ErrorCode code_of(E&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("points carry their dimension and reject non-finite coordinates") {
  const Point p(1, 2);
  const Point q(1, 2, 3);
  CHECK(p.dim() == 2);
  CHECK(q.dim() == 3);
  CHECK(q.z() == 3);
  CHECK(code_of([] { Point(std::nan(""), 0); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { Point(0, 0, INFINITY); }) == ErrorCode::InvalidParams);
}

TEST_CASE("tolerance") {
  const Tolerance t;
  CHECK(t.eps == 1e-9);
  CHECK(t.within(1.0 + 5e-10, 1.0));
  CHECK_FALSE(t.within(1.0 + 2e-9, 1.0));
  CHECK(t.within(1e6 + 5e-4, 1e6));
  CHECK(code_of([] { Tolerance(0.0); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { Tolerance(1.0); }) == ErrorCode::InvalidParams);
}

TEST_CASE("alpha lines") {
  SUBCASE("vertical") {
    const Line2 l = alpha_line(Point(1, 0), 2);
    CHECK(dot(Point(1, 0), l.anchor) == doctest::Approx(2));
    CHECK(std::abs(l.direction.x()) == doctest::Approx(0));
    CHECK(l.anchor.x() == doctest::Approx(2));
  }
  SUBCASE("horizontal") {
    const Line2 l = alpha_line(Point(0, 3), 6);
    CHECK(l.anchor.y() == doctest::Approx(2));
    CHECK(std::abs(l.direction.y()) == doctest::Approx(0));
  }
  SUBCASE("diagonal") {
    const Line2 l = alpha_line(Point(1, 1), 2);
    CHECK(near(l.anchor, Point(1, 1)));
    CHECK(std::abs(l.direction.x() + l.direction.y()) < 1e-12);
    CHECK(norm(l.direction) == doctest::Approx(1));
    for (double t : {-3.0, 0.5, 10.0}) CHECK(dot(Point(1, 1), l.anchor + t * l.direction) == doctest::Approx(2));
  }
  CHECK(code_of([] { alpha_line(Point(0, 0), 1); }) == ErrorCode::OriginAnchor);
  CHECK(code_of([] { alpha_line(Point(1, 0), 0); }) == ErrorCode::ZeroWeight);
  CHECK(code_of([] { alpha_line(Point(1, 0, 0), 1); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("classify alpha-line pairs") {
  const auto unique = classify_alpha_lines(Point(1, 0), 3, Point(0, 1), 5);
  REQUIRE(std::holds_alternative<lines::UniquePoint>(unique));
  CHECK(near(std::get<lines::UniquePoint>(unique).q, Point(3, 5)));

  const auto same = classify_alpha_lines(Point(1, 0), 2, Point(2, 0), 4);
  REQUIRE(std::holds_alternative<lines::Coincident>(same));
  CHECK(std::get<lines::Coincident>(same).line.anchor.x() == doctest::Approx(2));

  CHECK(std::holds_alternative<lines::ParallelDisjoint>(classify_alpha_lines(Point(1, 0), 2, Point(2, 0), 3)));
  CHECK(std::holds_alternative<lines::ParallelDisjoint>(classify_alpha_lines(Point(1, 0), 1, Point(-1, 0), 1)));
  // Opposite rays with opposite weights describe the same line.
  CHECK(std::holds_alternative<lines::Coincident>(classify_alpha_lines(Point(1, 0), 1, Point(-2, 0), -2)));

  CHECK(code_of([] { classify_alpha_lines(Point(0, 0), 1, Point(1, 0), 1); }) == ErrorCode::OriginAnchor);
  CHECK(code_of([] { classify_alpha_lines(Point(1, 0), 1, Point(1, 1), 0); }) == ErrorCode::ZeroWeight);
}

TEST_CASE("random distinct radial lines always cross once") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5, 5);
  int checked = 0;
  while (checked < 2000) {
    const Point p(u(rng), u(rng));
    const Point r(u(rng), u(rng));
    if (std::abs(p.x() * r.y() - p.y() * r.x()) < 1e-3 * norm(p) * norm(r)) continue;
    const double a = u(rng);
    const double b = u(rng);
    if (std::abs(a) < 1e-3 || std::abs(b) < 1e-3) continue;
    const auto cls = classify_alpha_lines(p, a, r, b);
    REQUIRE(std::holds_alternative<lines::UniquePoint>(cls));
    const Point q = std::get<lines::UniquePoint>(cls).q;
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    CHECK(std::abs(dot(p, q) - a) <= 1e-9 * scale * std::max(1.0, norm(p) * norm(q)));
    CHECK(std::abs(dot(r, q) - b) <= 1e-9 * scale * std::max(1.0, norm(r) * norm(q)));
    ++checked;
  }
}

TEST_CASE("circle intersections") {
  const auto tangent = circle_circle(Point(0, 0), 1, Point(2, 0), 1);
  REQUIRE(tangent.points.size() == 1);
  CHECK(near(tangent.points[0], Point(1, 0)));

  const auto two = circle_circle(Point(0, 0), std::sqrt(2.0), Point(2, 0), std::sqrt(2.0));
  REQUIRE(two.points.size() == 2);
  CHECK(has_point(two, Point(1, 1)));
  CHECK(has_point(two, Point(1, -1)));

  CHECK(circle_circle(Point(0, 0), 1, Point(4, 0), 1).empty());
  CHECK(circle_circle(Point(0, 0), 1, Point(0.2, 0), 3).empty());
  CHECK(circle_circle(Point(1, 1), 2, Point(1, 1), 2).kind == Intersection::Kind::Coincident);
  CHECK(circle_circle(Point(1, 1), 2, Point(1, 1), 3).empty());
  CHECK(code_of([] { circle_circle(Point(0, 0), 0, Point(1, 0), 1); }) == ErrorCode::NonPositiveRadius);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_real_distribution<double> rad(0.1, 4);
  for (int i = 0; i < 500; ++i) {
    const Point c1(u(rng), u(rng));
    const Point c2(u(rng), u(rng));
    const double r1 = rad(rng);
    const double r2 = rad(rng);
    const auto a = circle_circle(c1, r1, c2, r2);
    const auto b = circle_circle(c2, r2, c1, r1);
    REQUIRE(a.points.size() == b.points.size());
    for (const Point& p : a.points) {
      CHECK(has_point(b, p));
      CHECK(std::abs(distance(p, c1) - r1) <= 1e-9 * std::max(1.0, r1));
      CHECK(std::abs(distance(p, c2) - r2) <= 1e-9 * std::max(1.0, r2));
    }
  }
}

TEST_CASE("three spheres") {
  const std::array<Point, 3> c{Point(0, 0, 0), Point(2, 0, 0), Point(0, 2, 0)};
  const double s2 = std::sqrt(2.0);

  const auto one = sphere_triple(c, {s2, s2, s2});
  REQUIRE(one.points.size() == 1);
  CHECK(near(one.points[0], Point(1, 1, 0), 1e-7));

  const auto two = sphere_triple(c, {2, 2, 2});
  REQUIRE(two.points.size() == 2);
  CHECK(has_point(two, Point(1, 1, s2)));
  CHECK(has_point(two, Point(1, 1, -s2)));

  const auto circle =
      sphere_triple({Point(0, 0, 0), Point(2, 0, 0), Point(4, 0, 0)}, {s2, s2, std::sqrt(10.0)});
  REQUIRE(circle.kind == Intersection::Kind::InfiniteCircle);
  CHECK(circle.circle_center.x() == doctest::Approx(1));
  CHECK(circle.circle_radius == doctest::Approx(1));

  CHECK(sphere_triple({Point(0, 0, 0), Point(2, 0, 0), Point(4, 0, 0)}, {s2, s2, 3}).empty());
  CHECK(sphere_triple(c, {1, 1, 1}).empty());
  CHECK(code_of([&] { sphere_triple({Point(0, 0, 0), Point(0, 0, 0), Point(1, 0, 0)}, {1, 1, 1}); }) ==
        ErrorCode::DuplicateCenters);
  CHECK(code_of([&] { sphere_triple(c, {1, -1, 1}); }) == ErrorCode::NonPositiveRadius);

  // Permuting the spheres permutes nothing in the answer.
  const auto perm = sphere_triple({c[2], c[0], c[1]}, {2, 2, 2});
  REQUIRE(perm.points.size() == 2);
  for (const Point& p : two.points) CHECK(has_point(perm, p));
}

TEST_CASE("edge predicate") {
  const Tolerance t;
  CHECK(edge_satisfied(Point(0, 0), Point(1, 0), Metric::Distance, 1, t));
  CHECK(edge_satisfied(Point(1, 0), Point(2, 0), Metric::DotProduct, 2, t));
  CHECK_FALSE(edge_satisfied(Point(0, 0), Point(1, 0), Metric::Distance, 2, t));
  CHECK(code_of([&] { edge_satisfied(Point(0, 0), Point(1, 0, 0), Metric::Distance, 1, t); }) ==
        ErrorCode::DimensionMismatch);
}
