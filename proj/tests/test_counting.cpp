#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gconf/constructions.hpp"
#include "gconf/counting.hpp"

using namespace gconf;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

CountQuery query(Metric mode, Semantics s = Semantics::Homomorphism) {
  CountQuery q;
  q.mode = mode;
  q.semantics = s;
  return q;
}

const PointSet kUnitSquare(2, {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});

}  // namespace

TEST_CASE("brute force on small sets") {
  const PointSet e(2, {Point(0, 0), Point(1, 0), Point(0, 1)});
  const WeightedGraph p2 = make_family({family::Path{2}, family::Uniform{1}});
  CHECK(count_bruteforce(e, p2, query(Metric::Distance, Semantics::Injective)).count == 4);

  const WeightedGraph c4 = make_family({family::Cycle{4}, family::Uniform{1}});
  CHECK(count_bruteforce(kUnitSquare, c4, query(Metric::Distance, Semantics::Injective)).count == 8);
  // Homomorphisms may also fold the square onto a single edge.
  CHECK(count_bruteforce(kUnitSquare, c4, query(Metric::Distance)).count == 32);

  const TriangleSet t = coincident_triangle_set(5, 1, 4, 2);
  const WeightedGraph c3 = make_family({family::Cycle{3}, std::vector<double>{1, 4, 2}});
  CHECK(count_bruteforce(t.points, c3, query(Metric::DotProduct, Semantics::Injective)).count == 3);
}

TEST_CASE("query validation") {
  const WeightedGraph p2 = make_family({family::Path{2}, family::Uniform{1}});
  const PointSet e3(3, {Point(0, 0, 0), Point(1, 0, 0)});
  CHECK(count_bruteforce(e3, p2, query(Metric::Distance)).count == 2);
  CountQuery tight = query(Metric::Distance);
  tight.budget = 3;
  const PointSet line = progression_line(50, 1, 1.01);
  CHECK(code_of([&] { count_bruteforce(line, make_family({family::Path{4}, family::Uniform{1}}), tight); }) ==
        ErrorCode::BudgetExceeded);
  CHECK(code_of([&] {
          tight.semantics = Semantics::Injective;
          count_fast(line, make_family({family::Path{4}, family::Uniform{1}}), tight);
        }) == ErrorCode::UnsupportedSemantics);
}

TEST_CASE("fast counter agrees with brute force") {
  SUBCASE("star") {
    const PointSet e = star_set(31, 3, {1, 2, 3}, 2, Metric::Distance);
    const WeightedGraph g = make_family({family::Star{3}, std::vector<double>{1, 2, 3}});
    const auto q = query(Metric::Distance);
    CHECK(count_fast(e, g, q).count == count_bruteforce(e, g, q).count);
  }
  SUBCASE("tree") {
    const PointSet e = tree_set(33, 2, 2, family::Uniform{1}, 2, Metric::Distance);
    const WeightedGraph g = make_family({family::PerfectTree{2, 2}, family::Uniform{1}});
    const auto q = query(Metric::Distance);
    const Count fast = count_fast(e, g, q).count;
    CHECK(fast >= 4096);
    CHECK(fast == count_bruteforce(e, g, q).count);
  }
  SUBCASE("single vertex") {
    const PointSet e = progression_line(17, 1, 2);
    CHECK(count_fast(e, WeightedGraph(1, {}), query(Metric::Distance)).count == 17);
  }
  SUBCASE("cycles in both modes and dims") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int i = 0; i < 60; ++i) {
      const int dim = 2 + i % 2;
      const Metric mode = (i / 2) % 2 ? Metric::DotProduct : Metric::Distance;
      PointSet e(dim);
      while (e.size() < 14) {
        const Point p = dim == 2 ? Point(coord(rng), coord(rng)) : Point(coord(rng), coord(rng), coord(rng));
        if (std::find(e.points().begin(), e.points().end(), p) == e.points().end()) e.push_back(p);
      }
      const double w = mode == Metric::Distance ? 1.0 : 1.0 + static_cast<double>(i % 3);
      const WeightedGraph c = make_family({family::Cycle{3 + static_cast<std::size_t>(i % 3)}, family::Uniform{w}});
      const auto q = query(mode);
      const CountResult fast = count_fast(e, c, q);
      CHECK(fast.fvs_size == 1);
      CHECK(fast.count == count_bruteforce(e, c, q).count);
    }
  }
}

TEST_CASE("count invariances") {
  const PointSet e = star_set(25, 2, {1, 2}, 2, Metric::Distance, 8);
  const WeightedGraph g = make_family({family::Path{3}, std::vector<double>{1, 2}});
  const auto q = query(Metric::Distance);
  const Count base = count_fast(e, g, q).count;

  const double c = std::cos(0.7);
  const double s = std::sin(0.7);
  PointSet moved(2);
  PointSet reversed(2);
  for (const Point& p : e.points()) moved.push_back(Point(c * p.x() - s * p.y() + 3, s * p.x() + c * p.y() - 1));
  for (auto it = e.points().rbegin(); it != e.points().rend(); ++it) reversed.push_back(*it);
  CHECK(count_fast(moved, g, q).count == base);
  CHECK(count_fast(reversed, g, q).count == base);

  PointSet grown = e;
  grown.push_back(Point(0, 1.5));
  CHECK(count_fast(grown, g, q).count >= base);

  const PointSet d = star_set(25, 2, {1, 2}, 2, Metric::DotProduct, 8);
  PointSet rotated(2);
  for (const Point& p : d.points()) rotated.push_back(Point(c * p.x() - s * p.y(), s * p.x() + c * p.y()));
  const auto qd = query(Metric::DotProduct);
  CHECK(count_fast(rotated, g, qd).count == count_fast(d, g, qd).count);
}

TEST_CASE("value index and candidates") {
  const PointSet e(2, {Point(0, 0), Point(2, 0), Point(1, 0), Point(1, 1), Point(2, 5), Point(2, -1), Point(3, 5)});
  const Tolerance tol;

  const ValueIndex dist(e, Metric::Distance, tol);
  CHECK(dist.pair_count() == 7 * 8 / 2);
  for (const auto& p : dist.lookup(1.0)) CHECK(tol.within(distance(e[p.i], e[p.j]), 1.0));

  const std::vector<double> w1{1.0};
  const Neighborhoods nd(dist, w1);
  const PointLocator loc(e);
  const std::vector<Anchor> tangent{{0, 1.0}, {1, 1.0}};
  CHECK(candidates(e, Metric::Distance, tol, nd, loc, tangent) == std::vector<std::uint32_t>{2});

  const std::vector<double> w{2.0, 3.0, 4.0, 5.0};
  const PointSet f(2, {Point(1, 0), Point(0, 1), Point(2, 0), Point(3, 5), Point(2, 7), Point(2, -3), Point(1, 1)});
  const ValueIndex fdots(f, Metric::DotProduct, tol);
  const Neighborhoods fp(fdots, w);
  const PointLocator floc(f);
  const std::vector<Anchor> single{{0, 3.0}, {1, 5.0}};
  CHECK(candidates(f, Metric::DotProduct, tol, fp, floc, single) == std::vector<std::uint32_t>{3});
  const std::vector<Anchor> fiber{{0, 2.0}, {2, 4.0}};
  CHECK(candidates(f, Metric::DotProduct, tol, fp, floc, fiber) == std::vector<std::uint32_t>{2, 4, 5});
  const std::vector<Anchor> disjoint{{0, 2.0}, {2, 3.0}};
  CHECK(candidates(f, Metric::DotProduct, tol, fp, floc, disjoint).empty());
}

TEST_CASE("feedback vertex sets") {
  CHECK(min_feedback_vertex_set(make_family({family::PerfectTree{2, 2}, family::Uniform{1}})).empty());
  CHECK(min_feedback_vertex_set(make_family({family::Cycle{5}, family::Uniform{1}})).size() == 1);
  std::vector<Edge> k4;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) k4.push_back({u, v, 1.0});
  }
  CHECK(min_feedback_vertex_set(WeightedGraph(4, k4)).size() == 2);
  // The hub of a wheel touches every cycle.
  std::vector<Edge> wheel;
  for (Vertex i = 1; i <= 5; ++i) {
    wheel.push_back({0, i, 1.0});
    wheel.push_back({i, i % 5 + 1, 1.0});
  }
  const auto f = min_feedback_vertex_set(WeightedGraph(6, wheel));
  CHECK(f.size() == 2);
  CHECK(std::find(f.begin(), f.end(), Vertex{0}) != f.end());
}

TEST_CASE("counts stay exact beyond 64 bits") {
  const PointSet e = tree_set(400, 2, 3, family::Uniform{1}, 2, Metric::Distance, 2);
  const WeightedGraph g = make_family({family::PerfectTree{2, 3}, family::Uniform{1}});
  const Count c = count_fast(e, g, query(Metric::Distance)).count;
  CHECK(c >= boost::multiprecision::pow(Count(50), 8));
  CHECK(c > Count(std::numeric_limits<std::uint64_t>::max()));
}
