#include <cmath>
#include <cstdio>
#include <sstream>

#include "doctest.h"
#include "gconf/experiment.hpp"
#include "gconf/io.hpp"

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

}  // namespace

TEST_CASE("doubles round-trip through text") {
  for (double v : {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, std::sqrt(2.0), 1e-300, 6.02214076e23, -123456.789}) {
    CHECK(io::parse_double(io::format_double(v)) == v);
  }
  CHECK(io::parse_double("+2.5") == 2.5);
  CHECK(code_of([] { io::parse_double("1.5x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_double(""); }) == ErrorCode::ParseError);
}

TEST_CASE("point and graph files") {
  const PointSet e = star_set(20, 3, {1, 2, 3}, 3, Metric::Distance, 4);
  std::stringstream ss;
  io::write_points(ss, e);
  CHECK(ss.str().rfind("3 20\n", 0) == 0);
  CHECK(io::read_points(ss).points() == e.points());

  const WeightedGraph g = make_family({family::Path{3}, std::vector<double>{0.1, 1.0 / 7.0}});
  std::stringstream gs;
  io::write_graph(gs, g);
  CHECK(gs.str().rfind("3 2\n0 1 0.10000000000000001\n", 0) == 0);
  const WeightedGraph back = io::read_graph(gs);
  CHECK(back.edges()[1].w == 1.0 / 7.0);

  std::istringstream bad_dim("4 1\n1 2 3 4\n");
  CHECK(code_of([&] { io::read_points(bad_dim); }) == ErrorCode::ParseError);
  std::istringstream short_file("2 2\n1 2\n");
  CHECK(code_of([&] { io::read_points(short_file); }) == ErrorCode::ParseError);
  std::istringstream trailing("2 1\n1 2\n3\n");
  CHECK(code_of([&] { io::read_points(trailing); }) == ErrorCode::ParseError);
  std::istringstream loop("2 1\n0 0 1\n");
  CHECK(code_of([&] { io::read_graph(loop); }) == ErrorCode::InvalidGraph);

  const std::string path = "gconf_io_test_points.txt";
  io::save_points(path, e);
  CHECK(io::load_points(path).points() == e.points());
  std::remove(path.c_str());
  CHECK(code_of([] { io::load_points("/nonexistent/dir/p.txt"); }) == ErrorCode::ParseError);
}

TEST_CASE("exponent fits") {
  const FitResult sq = fit_exponent({{10, Count(100)}, {100, Count(10000)}, {1000, Count(1000000)}});
  CHECK(std::abs(sq.slope - 2.0) < 1e-9);
  CHECK(sq.r_squared == doctest::Approx(1.0));

  std::vector<std::pair<double, Count>> cubes;
  for (int n : {8, 16, 32, 64}) cubes.emplace_back(n, Count(n) * n * n);
  CHECK(std::abs(fit_exponent(cubes).slope - 3.0) < 1e-9);

  std::vector<std::pair<double, Count>> huge;
  for (int n : {100, 200, 400}) huge.emplace_back(n, boost::multiprecision::pow(Count(n), 200));
  CHECK(std::abs(fit_exponent(huge).slope - 200.0) < 1e-6);

  CHECK(code_of([] { fit_exponent({{1, Count(1)}, {2, Count(2)}}); }) == ErrorCode::InsufficientSamples);
  CHECK(code_of([] { fit_exponent({{1, Count(1)}, {2, Count(0)}, {3, Count(3)}}); }) == ErrorCode::ZeroCount);
}

TEST_CASE("experiments") {
  ExperimentConfig cfg{{construction::StarSet{3, {1, 2, 3}}, 2, Metric::Distance, 1},
                       make_family({family::Star{3}, std::vector<double>{1, 2, 3}})};
  cfg.n_grid = {120, 240, 480, 960};
  const ExperimentResult r = run_experiment(cfg);
  REQUIRE(r.rows.size() == 4);
  CHECK(std::abs(r.fit.slope - 3.0) < 0.15);
  CHECK(r.rows[0].method == Method::FastDP);
  CHECK(r.bounds.best_upper == Exponent(Rational(3)));

  std::ostringstream a;
  std::ostringstream b;
  write_experiment_csv(a, cfg, r, false);
  write_experiment_csv(b, cfg, run_experiment(cfg), false);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("# semantics=hom mode=distance dim=2 seed=1\nn,count,method,seconds\n", 0) == 0);

  ExperimentConfig hinge{{construction::StarSet{2, {1, 2}}, 2, Metric::Distance, 3},
                         make_family({family::Star{2}, std::vector<double>{1, 2}})};
  hinge.n_grid = {60, 120, 240};
  const ExperimentResult h = run_experiment(hinge);
  CHECK(std::abs(h.fit.slope - 2.0) < 0.2);
  CHECK(h.bounds.find("star", Side::Upper)->exponent == Exponent(Rational(2)));

  ExperimentConfig tri{{construction::CoincidentTriangle{1, 4, 2}, 2, Metric::DotProduct, 0},
                       *natural_template({construction::CoincidentTriangle{1, 4, 2}, 2, Metric::DotProduct, 0})};
  tri.n_grid = {100, 200, 400};
  const ExperimentResult t = run_experiment(tri);
  CHECK(std::abs(t.fit.slope - 1.0) < 0.2);
  CHECK(t.bounds.best_upper == Exponent(Rational(4, 3)));
  CHECK(*t.bounds.best_lower == Exponent(Rational(1)));

  ExperimentConfig bad = cfg;
  bad.n_grid = {10, 10, 20};
  CHECK(code_of([&] { run_experiment(bad); }) == ErrorCode::InvalidParams);
  bad.n_grid = {10, 20};
  CHECK(code_of([&] { run_experiment(bad); }) == ErrorCode::InvalidParams);

  // Rows that exhaust the budget are marked and skipped by the fit.
  ExperimentConfig tight = cfg;
  tight.method = Method::BruteForce;
  tight.semantics = Semantics::Injective;
  tight.n_grid = {8, 16, 32, 2000};
  tight.budget = 2'000'000;
  const ExperimentResult partial = run_experiment(tight);
  CHECK_FALSE(partial.rows[3].count);
  CHECK(partial.rows[0].count);
}
