#include <cmath>

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

Count injective(const PointSet& e, const WeightedGraph& g, Metric mode) {
  CountQuery q;
  q.mode = mode;
  q.semantics = Semantics::Injective;
  q.method = Method::BruteForce;
  return count_bruteforce(e, g, q).count;
}

}  // namespace

TEST_CASE("progression line") {
  const PointSet e = progression_line(3, 1, 2);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == Point(2, 0));
  CHECK(e[1] == Point(4, 0));
  CHECK(e[2] == Point(8, 0));
  CHECK(progression_line(1, 5, 3)[0] == Point(15, 0));
  CHECK(dot(progression_line(4, 1, 2)[0], progression_line(4, 1, 2)[1]) == 8);
  CHECK(code_of([] { progression_line(3, 0, 2); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { progression_line(3, 1, 1); }) == ErrorCode::InvalidParams);
}

TEST_CASE("coincident triangle set") {
  const TriangleSet t5 = coincident_triangle_set(5, 1, 4, 2);
  REQUIRE(t5.points.size() == 5);
  const double r = std::sqrt(8.0);
  CHECK(t5.points[4].x() == doctest::Approx(r));
  CHECK(t5.points[0].x() == doctest::Approx(1 / std::sqrt(2.0)));
  for (std::size_t i = 1; i < 4; ++i) CHECK(t5.points[i].x() == doctest::Approx(std::sqrt(2.0)));
  const WeightedGraph c3 = make_family({family::Cycle{3}, std::vector<double>{1, 4, 2}});
  CHECK(injective(t5.points, c3, Metric::DotProduct) == 3);
  CHECK(injective(coincident_triangle_set(3, 1, 4, 2).points, c3, Metric::DotProduct) == 1);
  CHECK(code_of([] { coincident_triangle_set(3, 1, 1, 1); }) == ErrorCode::DegenerateType);
  CHECK(code_of([] { coincident_triangle_set(3, 1, -4, 2); }) == ErrorCode::DegenerateType);
  CHECK(t5.points.points() == coincident_triangle_set(5, 1, 4, 2).points.points());
}

TEST_CASE("star sets") {
  const WeightedGraph s12 = make_family({family::Star{2}, std::vector<double>{1, 2}});
  const PointSet d = star_set(7, 2, {1, 2}, 2, Metric::Distance);
  CHECK(d.size() == 7);
  CHECK(d[0] == Point(0, 0));
  CHECK(injective(d, s12, Metric::Distance) >= 9);

  const PointSet p = star_set(7, 2, {1, 2}, 2, Metric::DotProduct);
  CHECK(p[0] == Point(1, 0));
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] != p[0]);
  CHECK(injective(p, s12, Metric::DotProduct) >= 9);

  CHECK(star_set(4, 3, {1, 1, 1}, 2, Metric::Distance).size() == 4);
  const PointSet s3 = star_set(40, 3, {1, 2, 3}, 3, Metric::Distance, 3);
  CHECK(s3.dim() == 3);
  CHECK(min_pairwise_distance(s3) > 1e-8);

  CHECK(code_of([] { star_set(7, 2, {1, -2}, 2, Metric::Distance); }) == ErrorCode::NegativeRadius);
  CHECK(code_of([] { star_set(7, 2, {1, 2}, 3, Metric::DotProduct); }) == ErrorCode::InvalidDim);
  CHECK(code_of([] { star_set(7, 2, {1, 2}, 4, Metric::Distance); }) == ErrorCode::InvalidDim);
}

TEST_CASE("tree sets") {
  const WeightedGraph t21 = make_family({family::PerfectTree{2, 1}, std::vector<double>{1, 2}});
  const PointSet a = tree_set(9, 2, 1, std::vector<double>{1, 2}, 2, Metric::Distance);
  CHECK(a.size() == 9);
  CHECK(injective(a, t21, Metric::Distance) >= 16);

  const WeightedGraph t22 = make_family({family::PerfectTree{2, 2}, family::Uniform{1}});
  const PointSet b = tree_set(17, 2, 2, family::Uniform{1}, 2, Metric::Distance);
  CHECK(b.size() == 19);  // 3 internal points plus 4 batches of 4
  CHECK(injective(b, t22, Metric::Distance) >= 256);

  const WeightedGraph t31 = make_family({family::PerfectTree{3, 1}, family::Uniform{1}});
  CHECK(injective(tree_set(10, 3, 1, family::Uniform{1}, 2, Metric::DotProduct), t31, Metric::DotProduct) >= 27);

  const PointSet big = tree_set(200, 3, 2, family::Uniform{1}, 3, Metric::Distance, 5);
  CHECK(big.size() == 202);  // 4 internal points + 9 batches of 22
  CHECK(min_pairwise_distance(big) > 1e-8);

  CHECK(code_of([] { tree_set(9, 2, 1, std::vector<double>{1, 2}, 2, Metric::DotProduct); }) ==
        ErrorCode::UnsupportedMode);
  CHECK(code_of([] { tree_set(9, 1, 1, family::Uniform{1}, 2, Metric::Distance); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { tree_set(9, 2, 0, family::Uniform{1}, 2, Metric::Distance); }) == ErrorCode::InvalidParams);
}

TEST_CASE("generators are deterministic in the seed and generic") {
  for (std::uint64_t seed : {0, 1, 99}) {
    const PointSet x = tree_set(120, 2, 2, family::Uniform{1}, 2, Metric::DotProduct, seed);
    CHECK(x.points() == tree_set(120, 2, 2, family::Uniform{1}, 2, Metric::DotProduct, seed).points());
    CHECK(min_pairwise_distance(x) > 1e-8);
  }
  CHECK(star_set(50, 2, {1, 2}, 2, Metric::Distance, 1).points() !=
        star_set(50, 2, {1, 2}, 2, Metric::Distance, 2).points());
}

TEST_CASE("scaling a distance construction with its weights keeps the count") {
  const PointSet e = star_set(25, 2, {1, 2}, 2, Metric::Distance, 4);
  const double lambda = 3.0;
  PointSet scaled(2);
  for (const Point& p : e.points()) scaled.push_back(lambda * p);
  const WeightedGraph g = make_family({family::Star{2}, std::vector<double>{1, 2}});
  const WeightedGraph gs = make_family({family::Star{2}, std::vector<double>{lambda, 2 * lambda}});
  CHECK(injective(e, g, Metric::Distance) == injective(scaled, gs, Metric::Distance));
}
