#include <sstream>

#include "doctest.h"
#include "gconf/bounds.hpp"

using namespace gconf;

namespace {

const family::Uniform kUnit{1.0};

Exponent ex(long num, long den = 1, bool eps = false) { return {Rational(num, den), eps}; }

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("epsilon ordering") {
  CHECK(ex(2) < ex(2, 1, true));
  CHECK(ex(2, 1, true) < ex(2000001, 1000000));
  CHECK((ex(1, 3, true) + ex(2, 3)) == ex(1, 1, true));
  CHECK(ex(7, 3, true).str() == "7/3+eps");
  CHECK(ex(5).str() == "5");
}

TEST_CASE("chain bounds") {
  CHECK(chain_bounds(4, Metric::Distance, 2).upper == ex(7, 3, true));
  CHECK(chain_bounds(3, Metric::Distance, 2).upper == ex(2));
  CHECK(chain_bounds(5, Metric::Distance, 2).upper == ex(3));
  CHECK(*chain_bounds(4, Metric::Distance, 2).lower == ex(2, 1, true));
  CHECK(*chain_bounds(4, Metric::DotProduct, 2).lower == ex(3));
  CHECK(chain_bounds(4, Metric::DotProduct, 2).upper == ex(10, 3));
  for (Metric m : {Metric::Distance, Metric::DotProduct}) {
    const ChainBounds b = chain_bounds(2, m, 2);
    CHECK(b.upper == ex(2));
    CHECK(*b.lower == ex(2));
  }
  CHECK(chain_bounds(1, Metric::Distance, 2).upper == ex(4, 3));
  CHECK(chain_bounds(4, Metric::Distance, 3).upper == ex(3, 1, true));
  CHECK(*chain_bounds(4, Metric::Distance, 3).lower == ex(3));
  CHECK_FALSE(chain_bounds(5, Metric::Distance, 3).lower);
  CHECK(code_of([] { chain_bounds(3, Metric::DotProduct, 3); }) == ErrorCode::UnsupportedCombination);
}

TEST_CASE("tree exponent recurrence and closed form") {
  CHECK(tree_exponent(2, 2).recurrence.value == 5);
  CHECK(tree_exponent(2, 3).recurrence.value == 10);
  CHECK(tree_exponent(3, 2).recurrence.value == 10);
  CHECK(tree_exponent(3, 2).closed_form.value == 10);
  CHECK(tree_exponent(4, 0).recurrence == ex(1));
  CHECK(tree_exponent(4, 1).recurrence == ex(4));
  CHECK(tree_exponent(2, 2).recurrence.plus_epsilon);
  for (std::size_t c = 2; c <= 6; ++c) {
    for (std::size_t h = 0; h <= 16; ++h) {
      CHECK(tree_exponent(c, h).recurrence == tree_exponent(c, h).closed_form);
    }
  }
  for (std::size_t h = 0; h <= 16; ++h) CHECK(tree_exponent(2, h).closed_form.value == binary_tree_closed_form(h));
  // The literal chain term breaks the agreement.
  CHECK(tree_exponent(2, 2, ChainTerm::AsPrinted).recurrence.value != tree_exponent(2, 2).closed_form.value);
  CHECK(dot_binary_tree_exponent(1) == 2);
  CHECK(dot_binary_tree_exponent(2) == 5);
}

TEST_CASE("catalog entries") {
  const BoundReport p5 = catalog(make_family({family::Path{5}, kUnit}), Metric::Distance, 2);
  REQUIRE(p5.find("chain", Side::Upper));
  CHECK(p5.find("chain", Side::Upper)->exponent == ex(7, 3, true));
  CHECK(p5.find("cover", Side::Upper)->exponent == ex(10, 3));
  CHECK(p5.best_upper == ex(7, 3, true));

  const BoundReport t23 = catalog(make_family({family::PerfectTree{2, 3}, family::Uniform{2.0}}), Metric::Distance, 3);
  CHECK(t23.find("tree-recurrence", Side::Upper)->exponent == ex(10, 1, true));
  CHECK(t23.find("matching", Side::Upper)->exponent == Exponent(Rational(295, 197) * 5 + 5, true));
  CHECK(t23.best_upper == ex(10, 1, true));
  REQUIRE(t23.best_lower);
  CHECK(*t23.best_lower == ex(8));

  const BoundReport c3 = catalog(make_family({family::Cycle{3}, std::vector<double>{1, 4, 2}}), Metric::DotProduct, 2);
  CHECK(c3.best_upper == ex(4, 3));
  CHECK(*c3.best_lower == ex(1));

  const BoundReport s3 = catalog(make_family({family::Star{3}, std::vector<double>{1, 2, 3}}), Metric::Distance, 2);
  CHECK(s3.best_upper == ex(3));
  CHECK(*s3.best_lower == ex(3));

  const BoundReport t22dot = catalog(make_family({family::PerfectTree{2, 2}, kUnit}), Metric::DotProduct, 2);
  CHECK(t22dot.find("cover-partial", Side::Upper)->exponent == ex(5));

  // Cited-only constructions never become best_lower.
  const BoundReport p2 = catalog(make_family({family::Path{2}, kUnit}), Metric::Distance, 2);
  CHECK(p2.best_upper == ex(4, 3));
  if (p2.best_lower) CHECK_FALSE(*p2.best_lower == ex(1, 1, true));

  const BoundReport general =
      catalog(WeightedGraph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {2, 3, 1.0}}), Metric::Distance, 2);
  CHECK(general.find("trivial", Side::Upper)->exponent == ex(4));
  CHECK(general.best_upper <= ex(4));
}

TEST_CASE("catalog bounds are ordered") {
  std::vector<WeightedGraph> graphs;
  for (std::size_t k = 2; k <= 12; ++k) graphs.push_back(make_family({family::Path{k}, kUnit}));
  for (std::size_t k = 3; k <= 12; ++k) graphs.push_back(make_family({family::Cycle{k}, kUnit}));
  for (std::size_t k = 2; k <= 6; ++k) graphs.push_back(make_family({family::Star{k}, kUnit}));
  graphs.push_back(make_family({family::PerfectTree{3, 2}, kUnit}));
  for (const auto& g : graphs) {
    for (int dim : {2, 3}) {
      for (Metric m : {Metric::Distance, Metric::DotProduct}) {
        if (dim == 3 && m == Metric::DotProduct) continue;
        const BoundReport r = catalog(g, m, dim);
        CHECK(r.best_upper <= Exponent(Rational(static_cast<long>(g.vertex_count()))));
        if (r.best_lower) CHECK(*r.best_lower <= r.best_upper);
      }
    }
  }
}

TEST_CASE("on paths the chain rule always beats the cover rule") {
  for (std::size_t k = 2; k <= 20; ++k) {
    const BoundReport r = catalog(make_family({family::Path{k}, kUnit}), Metric::Distance, 2);
    const auto* chain = r.find("chain", Side::Upper);
    const auto* cover = r.find("cover", Side::Upper);
    if (!cover) cover = r.find("cover-partial", Side::Upper);
    REQUIRE(chain);
    REQUIRE(cover);
    CHECK(cover->exponent >= chain->exponent);
    CHECK(r.best_upper == chain->exponent);
  }
}

TEST_CASE("bound csv") {
  const BoundReport r = catalog(make_family({family::Path{5}, kUnit}), Metric::Distance, 2);
  std::ostringstream os;
  write_bounds_csv(os, r);
  const std::string s = os.str();
  CHECK(s.rfind("rule,side,exponent_num,exponent_den,plus_epsilon,citation\n", 0) == 0);
  CHECK(s.find("chain,upper,7,3,1,") != std::string::npos);
  CHECK(s.find("cover,upper,10,3,0,") != std::string::npos);
}
