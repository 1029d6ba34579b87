#include "gconf/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gconf/constructions.hpp"
#include "gconf/counting.hpp"
#include "gconf/decompose.hpp"
#include "gconf/experiment.hpp"
#include "gconf/geometry.hpp"
#include "gconf/io.hpp"

namespace gconf::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  [[nodiscard]] double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

// Collects the first few failures of a suite.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) lines_ += (lines_.empty() ? "" : "; ") + what;
  }
  [[nodiscard]] bool none() const { return count_ == 0; }
  [[nodiscard]] std::string summary(const std::string& ok_text) const {
    if (count_ == 0) return ok_text;
    return std::to_string(count_) + " failure(s): " + lines_;
  }

 private:
  std::size_t count_ = 0;
  std::string lines_;
};

CheckResult finish(std::string name, const Failures& f, const std::string& ok_text, const Timer& t,
                   double limit) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = f.none();
  r.detail = f.summary(ok_text);
  r.seconds = t.seconds();
  r.limit_seconds = limit;
  return r;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Nonzero scalar with magnitude in [0.1, 10] and a random sign.
double nonzero(std::mt19937_64& rng) {
  const double mag = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
  return std::bernoulli_distribution(0.5)(rng) ? mag : -mag;
}

Point random_plane_point(std::mt19937_64& rng, double scale) {
  for (;;) {
    Point p(uniform(rng, -scale, scale), uniform(rng, -scale, scale));
    if (norm(p) > 0.05 * scale) return p;
  }
}

std::string fmt(double v) { return io::format_double(v); }

std::string count_str(const Count& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Exhaustive oracles

Rational exhaustive_cover_exponent(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> masks;
  std::vector<int> costs;  // in thirds, relative to leaving the vertices uncovered
  for (const Edge& e : g.edges()) {
    masks.push_back((1u << e.u) | (1u << e.v));
    costs.push_back(4 - 6);
  }
  for (Vertex mid = 0; mid < n; ++mid) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (a == mid || b == mid || !g.adjacent(a, mid) || !g.adjacent(b, mid)) continue;
        masks.push_back((1u << a) | (1u << b) | (1u << mid));
        costs.push_back(6 - 9);
      }
    }
  }
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t used, int saved) -> void {
    if (i == masks.size()) {
      best = std::min(best, saved);
      return;
    }
    self(self, i + 1, used, saved);
    if ((used & masks[i]) == 0) self(self, i + 1, used | masks[i], saved + costs[i]);
  };
  rec(rec, 0, 0, 0);
  return Rational(static_cast<int>(3 * n) + best, 3);
}

std::size_t exhaustive_matching_size(const WeightedGraph& g) {
  const auto& edges = g.edges();
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used, std::size_t size) -> void {
    if (size + (edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = size;
      return;
    }
    const std::uint64_t m = (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
    if ((used & m) == 0) self(self, i + 1, used | m, size + 1);
    self(self, i + 1, used, size);
  };
  rec(rec, 0, 0, 0);
  return best;
}

WeightedGraph random_graph(std::size_t vertices, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < vertices; ++u) {
    for (Vertex v = u + 1; v < vertices; ++v) {
      if (coin(rng)) edges.push_back({u, v, 1.0});
    }
  }
  return {vertices, std::move(edges)};
}

// ---------------------------------------------------------------------------
// Suites

CheckResult geometry_lemmas(std::size_t instances, std::uint64_t seed) {
  Timer timer;
  Failures fail;
  std::mt19937_64 rng(seed);
  const Tolerance tol;

  for (std::size_t i = 0; i < instances; ++i) {
    // Two alpha-lines of points on distinct radial lines meet exactly once.
    const Point p = random_plane_point(rng, 10.0);
    Point r = random_plane_point(rng, 10.0);
    while (std::abs(p.x() * r.y() - p.y() * r.x()) < 1e-2 * norm(p) * norm(r)) r = random_plane_point(rng, 10.0);
    const double alpha = nonzero(rng);
    const double beta = nonzero(rng);
    const auto cls = classify_alpha_lines(p, alpha, r, beta, tol);
    if (const auto* u = std::get_if<lines::UniquePoint>(&cls)) {
      const double res_p = std::abs(dot(p, u->q) - alpha);
      const double res_r = std::abs(dot(r, u->q) - beta);
      const double scale_p = std::max({1.0, std::abs(alpha), norm(p) * norm(u->q)});
      const double scale_r = std::max({1.0, std::abs(beta), norm(r) * norm(u->q)});
      if (res_p > 1e-9 * scale_p || res_r > 1e-9 * scale_r) {
        fail.add("single point residual " + fmt(res_p) + "/" + fmt(res_r) + " at instance " + std::to_string(i));
      }
    } else {
      fail.add("distinct radial lines not classified as a unique point at instance " + std::to_string(i));
    }

    // alpha r = beta p exactly characterizes coincident lines.
    const double lambda = nonzero(rng);
    const Point q = lambda * p;
    if (!std::holds_alternative<lines::Coincident>(classify_alpha_lines(p, alpha, q, lambda * alpha, tol))) {
      fail.add("alpha r = beta p not coincident at instance " + std::to_string(i));
    }
    const double off = lambda * alpha * (1.0 + uniform(rng, 0.01, 1.0) * (std::bernoulli_distribution(0.5)(rng) ? 1 : -1));
    if (!std::holds_alternative<lines::ParallelDisjoint>(classify_alpha_lines(p, alpha, q, off, tol))) {
      fail.add("alpha r != beta p on one radial line not disjoint at instance " + std::to_string(i));
    }

    // Antipodal points with the same alpha give disjoint parallel lines.
    if (!std::holds_alternative<lines::ParallelDisjoint>(classify_alpha_lines(p, alpha, -1.0 * p, alpha, tol))) {
      fail.add("antipodal pair not disjoint at instance " + std::to_string(i));
    }
  }
  return finish("geometry lemmas", fail, std::to_string(instances) + " instances x 3 lemmas", timer, 5.0);
}

CheckResult oracle_equivalence(std::size_t cases, std::uint64_t seed) {
  Timer timer;
  Failures fail;
  std::mt19937_64 rng(seed);
  std::size_t nonzero_cases = 0;

  for (std::size_t c = 0; c < cases; ++c) {
    const Metric mode = c % 2 == 0 ? Metric::Distance : Metric::DotProduct;
    const int dim = (c / 2) % 2 == 0 ? 2 : 3;
    const bool lattice = std::bernoulli_distribution(0.7)(rng);
    const auto n_points = std::uniform_int_distribution<std::size_t>(1, 10)(rng);

    // Small integer lattices produce many repeated values and degenerate
    // (tangent, collinear, coincident) geometry.
    std::vector<Point> pts;
    std::size_t attempts = 0;
    while (pts.size() < n_points && attempts++ < 1000) {
      std::array<double, 3> xyz{};
      for (auto& v : xyz) {
        v = lattice ? static_cast<double>(std::uniform_int_distribution<int>(-2, 2)(rng)) : uniform(rng, -3.0, 3.0);
      }
      const Point p = dim == 2 ? Point(xyz[0], xyz[1]) : Point(xyz[0], xyz[1], xyz[2]);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const PointSet e(dim, pts);

    std::vector<double> realized;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i; j < e.size(); ++j) {
        const double v = metric_value(e[i], e[j], mode);
        if (v != 0.0) realized.push_back(v);
      }
    }
    if (realized.empty()) realized.push_back(1.0);

    const auto n_vertices = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.55);
    std::uniform_int_distribution<std::size_t> pick(0, realized.size() - 1);
    for (Vertex u = 0; u < n_vertices; ++u) {
      for (Vertex v = u + 1; v < n_vertices; ++v) {
        if (coin(rng)) edges.push_back({u, v, realized[pick(rng)]});
      }
    }
    const WeightedGraph g(n_vertices, std::move(edges));

    CountQuery q;
    q.mode = mode;
    q.semantics = Semantics::Homomorphism;
    const Count brute = count_bruteforce(e, g, q).count;
    const Count fast = count_fast(e, g, q).count;
    q.semantics = Semantics::Injective;
    const Count inj = count_bruteforce(e, g, q).count;
    if (brute != fast) {
      fail.add("case " + std::to_string(c) + ": fast " + count_str(fast) + " != brute force " + count_str(brute));
    }
    if (inj > brute) fail.add("case " + std::to_string(c) + ": injective exceeds homomorphism");
    if (brute > 0) ++nonzero_cases;
  }
  return finish("oracle equivalence", fail,
                std::to_string(cases) + " cases, " + std::to_string(nonzero_cases) + " with nonzero counts", timer,
                60.0);
}

CheckResult construction_fidelity() {
  Timer timer;
  Failures fail;
  CountQuery inj;
  inj.semantics = Semantics::Injective;
  inj.method = Method::BruteForce;

  {
    const TriangleSet ts = coincident_triangle_set(50, 1.0, 4.0, 2.0);
    const WeightedGraph c3 = make_family({family::Cycle{3}, std::vector<double>{1.0, 4.0, 2.0}});
    CountQuery q = inj;
    q.mode = Metric::DotProduct;
    const Count got = count_bruteforce(ts.points, c3, q).count;
    if (got < 48) fail.add("coincident triangle set: " + count_str(got) + " < 48");
  }

  struct StarCase {
    std::size_t n;
    std::size_t k;
    std::vector<double> weights;
    int dim;
    Metric mode;
  };
  const std::vector<StarCase> stars = {
      {60, 2, {1.0, 2.0}, 2, Metric::Distance},      {60, 3, {1.0, 2.0, 3.0}, 2, Metric::Distance},
      {60, 3, {1.0, 1.0, 2.0}, 3, Metric::Distance}, {60, 2, {1.0, 2.0}, 2, Metric::DotProduct},
      {41, 4, {0.5, 1.0, 1.5, 2.0}, 2, Metric::DotProduct},
  };
  for (const auto& sc : stars) {
    const PointSet e = star_set(sc.n, sc.k, sc.weights, sc.dim, sc.mode, 7);
    const WeightedGraph g = make_family({family::Star{sc.k}, sc.weights});
    CountQuery q = inj;
    q.mode = sc.mode;
    const Count got = count_bruteforce(e, g, q).count;
    const Count want = boost::multiprecision::pow(Count(star_batch_size(sc.n, sc.k)), static_cast<unsigned>(sc.k));
    if (got < want) {
      fail.add("star k=" + std::to_string(sc.k) + " dim=" + std::to_string(sc.dim) + ": " + count_str(got) + " < " +
               count_str(want));
    }
  }

  struct TreeCase {
    std::size_t n;
    std::size_t c;
    std::size_t h;
    TreeWeights weights;
    int dim;
    Metric mode;
  };
  const std::vector<TreeCase> trees = {
      {60, 2, 1, family::Uniform{1.0}, 2, Metric::Distance},
      {60, 2, 2, family::Uniform{1.0}, 2, Metric::Distance},
      {60, 2, 2, std::vector<double>{1.0, 2.0, 1.5, 1.0, 2.5, 0.5}, 2, Metric::Distance},
      {60, 3, 1, family::Uniform{1.0}, 3, Metric::Distance},
      {60, 2, 2, family::Uniform{1.0}, 3, Metric::Distance},
      {60, 2, 2, family::Uniform{1.0}, 2, Metric::DotProduct},
      {60, 3, 1, family::Uniform{2.0}, 2, Metric::DotProduct},
  };
  for (const auto& tc : trees) {
    const PointSet e = tree_set(tc.n, tc.c, tc.h, tc.weights, tc.dim, tc.mode, 11);
    FamilyWeights fw = family::Uniform{1.0};
    if (const auto* u = std::get_if<family::Uniform>(&tc.weights)) {
      fw = *u;
    } else {
      fw = std::get<std::vector<double>>(tc.weights);
    }
    const WeightedGraph g = make_family({family::PerfectTree{tc.c, tc.h}, fw});
    CountQuery q = inj;
    q.mode = tc.mode;
    const Count got = count_bruteforce(e, g, q).count;
    std::size_t leaves = 1;
    for (std::size_t i = 0; i < tc.h; ++i) leaves *= tc.c;
    const Count want =
        boost::multiprecision::pow(Count(tree_batch_size(tc.n, tc.c, tc.h)), static_cast<unsigned>(leaves));
    if (got < want) {
      fail.add("tree c=" + std::to_string(tc.c) + " h=" + std::to_string(tc.h) + " dim=" + std::to_string(tc.dim) +
               ": " + count_str(got) + " < " + count_str(want));
    }
  }
  return finish("construction fidelity", fail,
                "triangle, " + std::to_string(stars.size()) + " star and " + std::to_string(trees.size()) +
                    " tree sets meet their guarantees",
                timer, 60.0);
}

std::vector<CheckResult> exponent_recovery() {
  struct Case {
    std::string name;
    ConstructionSpec spec;
    double slope;
    double tol;
  };
  std::vector<Case> cases;
  cases.push_back({"Star(3)", {construction::StarSet{3, {1.0, 2.0, 3.0}}, 2, Metric::Distance, 1}, 3.0, 0.15});
  cases.push_back({"T_{2,2} uniform", {construction::TreeSet{2, 2, family::Uniform{1.0}}, 2, Metric::Distance, 1},
                   4.0, 0.2});
  cases.push_back({"hinge Star(2)", {construction::StarSet{2, {1.0, 2.0}}, 2, Metric::Distance, 1}, 2.0, 0.2});
  cases.push_back(
      {"coincident triangle", {construction::CoincidentTriangle{1.0, 4.0, 2.0}, 2, Metric::DotProduct, 1}, 1.0, 0.2});

  std::vector<CheckResult> out;
  for (const auto& c : cases) {
    Timer timer;
    Failures fail;
    std::string ok_text;
    try {
      ExperimentConfig cfg;
      cfg.construction = c.spec;
      cfg.template_graph = *natural_template(c.spec);
      cfg.method = Method::FastDP;
      cfg.n_grid = {120, 240, 480, 960};
      const ExperimentResult r = run_experiment(cfg);
      for (const auto& row : r.rows) {
        if (!row.count) fail.add("n=" + std::to_string(row.n) + " ran out of budget");
      }
      if (std::abs(r.fit.slope - c.slope) > c.tol) {
        fail.add("slope " + fmt(r.fit.slope) + " outside " + fmt(c.slope) + " +- " + fmt(c.tol));
      }
      ok_text = "slope " + fmt(r.fit.slope) + " (r2 " + fmt(r.fit.r_squared) + ")";
    } catch (const std::exception& ex) {
      fail.add(ex.what());
    }
    out.push_back(finish("exponent recovery " + c.name, fail, ok_text, timer, 120.0));
  }
  return out;
}

CheckResult recurrence_identity() {
  Timer timer;
  Failures fail;
  for (std::size_t c = 2; c <= 6; ++c) {
    for (std::size_t h = 0; h <= 16; ++h) {
      const TreeExponent te = tree_exponent(c, h);
      if (te.recurrence != te.closed_form) {
        fail.add("c=" + std::to_string(c) + " h=" + std::to_string(h) + ": " + te.recurrence.str() +
                 " != " + te.closed_form.str());
      }
      if (c == 2 && te.closed_form.value != binary_tree_closed_form(h)) {
        fail.add("binary formula disagrees at h=" + std::to_string(h));
      }
    }
  }
  if (tree_exponent(2, 2).closed_form.value != 5) fail.add("a_{2,2} != 5");
  if (tree_exponent(2, 3).closed_form.value != 10) fail.add("a_{2,3} != 10");
  return finish("recurrence identity", fail, "c in 2..6, h in 0..16 agree; a22=5, a23=10", timer, 1.0);
}

CheckResult decomposition_oracles(std::size_t graphs, std::uint64_t seed) {
  Timer timer;
  Failures fail;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < graphs; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const double p = uniform(rng, 0.1, 0.5);
    const WeightedGraph g = random_graph(n, p, rng());
    const CoverResult cover = find_best_cover(g);
    const Rational want = exhaustive_cover_exponent(g);
    if (cover.exponent != want) {
      fail.add("graph " + std::to_string(i) + ": cover " + cover.exponent.str() + " != " + want.str());
    }
    if (cover.exponent != cover_exponent(cover.s, cover.t, cover.leftover.size())) {
      fail.add("graph " + std::to_string(i) + ": cover exponent inconsistent with its blocks");
    }
    const MatchingResult m = max_matching(g);
    const std::size_t mw = exhaustive_matching_size(g);
    if (m.m != mw) fail.add("graph " + std::to_string(i) + ": matching " + std::to_string(m.m) + " != " + std::to_string(mw));
    if (m.r != n - 2 * m.m) fail.add("graph " + std::to_string(i) + ": r inconsistent");
  }

  const auto unit = family::Uniform{1.0};
  const WeightedGraph c3 = make_family({family::Cycle{3}, unit});
  const WeightedGraph p4 = make_family({family::Path{4}, unit});
  const WeightedGraph t22 = make_family({family::PerfectTree{2, 2}, unit});

  const CoverResult cc3 = find_best_cover(c3);
  if (cc3.s != 0 || cc3.t != 1 || cc3.exponent != 2) fail.add("cover(C3) is not (0,1) with exponent 2");
  const CoverResult ct22 = find_best_cover(t22);
  if (ct22.s != 0 || ct22.t != 2 || ct22.leftover != std::vector<Vertex>{0} || ct22.exponent != 5) {
    fail.add("cover(T22) is not two P3 blocks plus the root");
  }
  if (ct22.exponent != tree_exponent(2, 2).closed_form.value) fail.add("cover(T22) disagrees with the even-h value");
  if (max_matching(c3).m != 1) fail.add("m(C3) != 1");
  if (max_matching(p4).m != 2) fail.add("m(P4) != 2");
  const MatchingResult mt = max_matching(t22);
  if (mt.m != 2 || mt.r != 3) fail.add("m(T22) != 2 or r != 3");

  return finish("decomposition oracles", fail, std::to_string(graphs) + " random graphs and fixed cases agree", timer,
                60.0);
}

CheckResult catalog_fixed_points() {
  Timer timer;
  Failures fail;
  const auto unit = family::Uniform{1.0};

  const BoundReport p5 = catalog(make_family({family::Path{5}, unit}), Metric::Distance, 2);
  if (p5.best_upper != Exponent(Rational(7, 3), true)) fail.add("P5 best upper " + p5.best_upper.str());
  const BoundEntry* p5cover = p5.find("cover", Side::Upper);
  if (!p5cover || p5cover->exponent != Exponent(Rational(10, 3))) fail.add("P5 cover entry is not 10/3");

  const BoundReport c3 = catalog(make_family({family::Cycle{3}, unit}), Metric::DotProduct, 2);
  if (c3.best_upper != Exponent(Rational(4, 3))) fail.add("C3 dot upper " + c3.best_upper.str());
  if (!c3.best_lower || *c3.best_lower != Exponent(Rational(1))) fail.add("C3 dot lower is not 1");

  const BoundReport t23 = catalog(make_family({family::PerfectTree{2, 3}, unit}), Metric::Distance, 3);
  if (t23.best_upper != Exponent(Rational(10), true)) fail.add("T23 3D best upper " + t23.best_upper.str());
  const BoundEntry* matching_rule = t23.find("matching", Side::Upper);
  if (!matching_rule || matching_rule->exponent != Exponent(Rational(295, 197) * 5 + 5, true)) {
    fail.add("T23 matching entry is not (295/197)*5+5");
  }

  const ChainBounds k4 = chain_bounds(4, Metric::DotProduct, 2);
  if (!k4.lower || *k4.lower != Exponent(Rational(3))) fail.add("4-chain dot lower is not 3");

  return finish("catalog fixed points", fail, "P5, C3 dot, T23 3D and 4-chain dot values hold", timer, 1.0);
}

CheckResult determinism_roundtrip(std::uint64_t seed) {
  Timer timer;
  Failures fail;

  auto pipeline = [&]() {
    std::ostringstream report;
    const PointSet e = star_set(90, 3, {1.0, 2.0, 3.0}, 2, Metric::Distance, seed);
    std::stringstream file;
    io::write_points(file, e);
    const PointSet back = io::read_points(file);
    const WeightedGraph g = make_family({family::Star{3}, std::vector<double>{1.0, 2.0, 3.0}});
    CountQuery q;
    report << count_configurations(back, g, q).count << '\n';
    write_bounds_csv(report, catalog(g, Metric::Distance, 2));

    ExperimentConfig cfg;
    cfg.construction = {construction::TreeSet{2, 1, family::Uniform{1.0}}, 3, Metric::Distance, seed};
    cfg.template_graph = make_family({family::PerfectTree{2, 1}, family::Uniform{1.0}});
    cfg.n_grid = {20, 40, 80};
    write_experiment_csv(report, cfg, run_experiment(cfg), false);
    return report.str();
  };
  if (pipeline() != pipeline()) fail.add("generate -> count -> report differs between runs");

  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(uniform(rng, -1.0, 1.0), std::uniform_int_distribution<int>(-60, 60)(rng));
    if (io::parse_double(io::format_double(v)) != v) fail.add("double " + io::format_double(v) + " did not round-trip");
  }

  const PointSet e = tree_set(40, 2, 2, family::Uniform{1.0}, 3, Metric::Distance, seed);
  std::stringstream pf;
  io::write_points(pf, e);
  const std::string first = pf.str();
  const PointSet back = io::read_points(pf);
  if (back.points() != e.points()) fail.add("point file round-trip changed coordinates");
  std::ostringstream again;
  io::write_points(again, back);
  if (again.str() != first) fail.add("point file rewrite differs");

  const WeightedGraph g = make_family({family::Path{4}, std::vector<double>{0.1, 1.0 / 3.0, std::sqrt(2.0)}});
  std::stringstream gf;
  io::write_graph(gf, g);
  const WeightedGraph gb = io::read_graph(gf);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& a = g.edges()[i];
    const Edge& b = gb.edges()[i];
    if (a.u != b.u || a.v != b.v || a.w != b.w) fail.add("graph file round-trip changed edge " + std::to_string(i));
  }
  return finish("determinism and round-trip", fail, "pipelines identical, files exact", timer, 0.0);
}

std::vector<CheckResult> run_all(bool quick, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  auto push = [&](CheckResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  const std::size_t scale = quick ? 10 : 1;
  push(geometry_lemmas(1000 / scale, 1));
  push(oracle_equivalence(200 / scale, 2));
  push(construction_fidelity());
  if (!quick) {
    for (auto& r : exponent_recovery()) push(std::move(r));
  }
  push(recurrence_identity());
  push(decomposition_oracles(100 / scale, 3));
  push(catalog_fixed_points());
  push(determinism_roundtrip(4));
  return out;
}

}  // namespace gconf::verify
