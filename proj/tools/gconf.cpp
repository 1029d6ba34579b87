// gconf: generate point sets, count configurations, report exponent bounds.
//
// Exit status: 0 on success, 1 on validation or usage errors, 2 when a count
// runs out of budget.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gconf/bounds.hpp"
#include "gconf/counting.hpp"
#include "gconf/decompose.hpp"
#include "gconf/experiment.hpp"
#include "gconf/io.hpp"
#include "gconf/verify.hpp"

using namespace gconf;

namespace {

struct Common {
  std::string mode = "distance";
  int dim = 2;
  std::string semantics = "hom";
  double epsilon = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
  std::string points;
  std::string graph;
};

struct Construction {
  std::string kind = "star";
  std::size_t n = 100;
  std::size_t k = 2;
  std::size_t c = 2;
  std::size_t h = 1;
  std::string weights;
  std::optional<double> alpha;
  std::string alphas = "1,4,2";
  double a = 1.0;
  double g = 2.0;
};

Metric parse_mode(const std::string& s) { return s == "dot" ? Metric::DotProduct : Metric::Distance; }

Semantics parse_semantics(const std::string& s) {
  return s == "injective" ? Semantics::Injective : Semantics::Homomorphism;
}

Method parse_method(const std::string& s) {
  if (s == "brute") return Method::BruteForce;
  if (s == "fast") return Method::FastDP;
  return Method::Auto;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(io::parse_double(tok));
  }
  return out;
}

std::vector<std::size_t> parse_grid(const std::string& s) {
  std::vector<std::size_t> out;
  for (double v : parse_list(s)) {
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw Error(ErrorCode::InvalidParams, "n grid entries must be positive integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

ConstructionSpec make_spec(const Construction& c, const Common& common) {
  ConstructionSpec spec;
  spec.dim = common.dim;
  spec.mode = parse_mode(common.mode);
  spec.seed = common.seed;
  if (c.kind == "star") {
    std::vector<double> w = parse_list(c.weights);
    if (w.empty()) w.assign(c.k, c.alpha.value_or(1.0));
    spec.kind = construction::StarSet{c.k, w};
  } else if (c.kind == "tree") {
    TreeWeights w = family::Uniform{c.alpha.value_or(1.0)};
    if (!c.weights.empty()) w = parse_list(c.weights);
    spec.kind = construction::TreeSet{c.c, c.h, w};
  } else if (c.kind == "triangle") {
    const auto a = parse_list(c.alphas);
    if (a.size() != 3) throw Error(ErrorCode::InvalidParams, "--alphas needs three values");
    spec.kind = construction::CoincidentTriangle{a[0], a[1], a[2]};
  } else {
    spec.kind = construction::ProgressionLine{c.a, c.g};
  }
  return spec;
}

void add_construction_flags(CLI::App* sub, Construction& c) {
  sub->add_option("--kind", c.kind, "star, tree, triangle or progression")
      ->check(CLI::IsMember({"star", "tree", "triangle", "progression"}));
  sub->add_option("--k", c.k, "star leaves");
  sub->add_option("--c", c.c, "tree arity");
  sub->add_option("--h", c.h, "tree height");
  sub->add_option("--weights", c.weights, "comma separated edge weights");
  sub->add_option("--alpha", c.alpha, "uniform weight");
  sub->add_option("--alphas", c.alphas, "triangle type a1,a2,a3");
  sub->add_option("--a", c.a, "progression scale");
  sub->add_option("--g", c.g, "progression ratio");
}

void add_setting_flags(CLI::App* sub, Common& common) {
  sub->add_option("--mode", common.mode, "distance or dot")->check(CLI::IsMember({"distance", "dot"}));
  sub->add_option("--dim", common.dim, "2 or 3")->check(CLI::IsMember({2, 3}));
  sub->add_option("--epsilon", common.epsilon, "relative tolerance");
}

// Writes to --out when given, otherwise stdout.
template <typename F>
void emit(const std::string& path, F&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::ParseError, "cannot write " + path);
  body(os);
}

std::string describe_blocks(const CoverResult& c) {
  std::ostringstream os;
  for (const auto& b : c.p2_blocks) os << " P2(" << b[0] << ',' << b[1] << ')';
  for (const auto& b : c.p3_blocks) os << " P3(" << b[0] << ',' << b[1] << ',' << b[2] << ')';
  for (Vertex v : c.leftover) os << " V(" << v << ')';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and bounding weighted point configurations"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // -h is the tree height

  Common common;
  Construction cons;
  std::string method = "auto";
  std::uint64_t budget = kDefaultBudget;
  std::string grid;
  bool no_timing = false;
  bool quick = false;
  std::string family_name = "path";

  auto* generate = app.add_subcommand("generate", "write a construction's point file");
  add_construction_flags(generate, cons);
  add_setting_flags(generate, common);
  generate->add_option("--n", cons.n, "target size");
  generate->add_option("--seed", common.seed, "placement seed");
  generate->add_option("--out", common.out, "output point file (default stdout)");

  auto* graph = app.add_subcommand("graph", "write a named template's graph file");
  graph->add_option("--family", family_name, "path, cycle, star or tree")
      ->check(CLI::IsMember({"path", "cycle", "star", "tree"}));
  graph->add_option("--k", cons.k, "vertices (path, cycle) or leaves (star)");
  graph->add_option("--c", cons.c, "tree arity");
  graph->add_option("--h", cons.h, "tree height");
  graph->add_option("--weights", cons.weights, "comma separated edge weights");
  graph->add_option("--alpha", cons.alpha, "uniform weight");
  graph->add_option("--out", common.out, "output graph file (default stdout)");

  auto* count = app.add_subcommand("count", "count configurations of a template in a point set");
  count->add_option("--points", common.points, "point file")->required();
  count->add_option("--graph", common.graph, "graph file")->required();
  add_setting_flags(count, common);
  count->add_option("--semantics", common.semantics, "injective or hom")->check(CLI::IsMember({"injective", "hom"}));
  count->add_option("--method", method, "auto, brute or fast")->check(CLI::IsMember({"auto", "brute", "fast"}));
  count->add_option("--budget", budget, "work budget");

  auto* cover = app.add_subcommand("cover", "best (s,t)-cover of a template");
  cover->add_option("--graph", common.graph, "graph file")->required();

  auto* match = app.add_subcommand("match", "maximum matching of a template");
  match->add_option("--graph", common.graph, "graph file")->required();

  auto* bounds = app.add_subcommand("bounds", "exponent bound report as CSV");
  bounds->add_option("--graph", common.graph, "graph file")->required();
  add_setting_flags(bounds, common);
  bounds->add_option("--out", common.out, "output CSV (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "count over a size grid and fit the growth exponent");
  add_construction_flags(experiment, cons);
  add_setting_flags(experiment, common);
  experiment->add_option("--graph", common.graph, "template (default: the construction's own)");
  experiment->add_option("--n-grid", grid, "comma separated sizes")->required();
  experiment->add_option("--semantics", common.semantics, "injective or hom")
      ->check(CLI::IsMember({"injective", "hom"}));
  experiment->add_option("--method", method, "auto, brute or fast")->check(CLI::IsMember({"auto", "brute", "fast"}));
  experiment->add_option("--budget", budget, "work budget per row");
  experiment->add_option("--seed", common.seed, "placement seed");
  experiment->add_option("--out", common.out, "output CSV (default stdout)");
  experiment->add_flag("--no-timing", no_timing, "write 0 seconds so reports are reproducible");

  auto* verify_cmd = app.add_subcommand("verify", "run the self-check suites");
  verify_cmd->add_flag("--quick", quick, "smaller instance counts, no exponent recovery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const Tolerance tol(common.epsilon);
    const Metric mode = parse_mode(common.mode);

    if (generate->parsed()) {
      const PointSet e = gconf::generate(make_spec(cons, common), cons.n);
      emit(common.out, [&](std::ostream& os) { io::write_points(os, e); });
    } else if (graph->parsed()) {
      FamilyWeights w = family::Uniform{cons.alpha.value_or(1.0)};
      if (!cons.weights.empty()) w = parse_list(cons.weights);
      FamilyKind kind = family::Path{cons.k};
      if (family_name == "cycle") kind = family::Cycle{cons.k};
      if (family_name == "star") kind = family::Star{cons.k};
      if (family_name == "tree") kind = family::PerfectTree{cons.c, cons.h};
      const WeightedGraph g = make_family({kind, w});
      emit(common.out, [&](std::ostream& os) { io::write_graph(os, g); });
    } else if (count->parsed()) {
      const PointSet e = io::load_points(common.points);
      const WeightedGraph g = io::load_graph(common.graph);
      CountQuery q;
      q.mode = mode;
      q.semantics = parse_semantics(common.semantics);
      q.tol = tol;
      q.method = parse_method(method);
      q.budget = budget;
      std::cout << count_configurations(e, g, q).count << '\n';
    } else if (cover->parsed()) {
      const CoverResult c = find_best_cover(io::load_graph(common.graph));
      std::cout << "s=" << c.s << " t=" << c.t << " leftover=" << c.leftover.size() << " exponent=" << c.exponent
                << '\n'
                << "blocks:" << describe_blocks(c) << '\n';
    } else if (match->parsed()) {
      const WeightedGraph g = io::load_graph(common.graph);
      const MatchingResult m = max_matching(g);
      std::cout << "m=" << m.m << " r=" << m.r << '\n' << "edges:";
      for (std::size_t i : m.edges) std::cout << ' ' << g.edges()[i].u << '-' << g.edges()[i].v;
      std::cout << '\n';
    } else if (bounds->parsed()) {
      const BoundReport r = catalog(io::load_graph(common.graph), mode, common.dim, tol);
      emit(common.out, [&](std::ostream& os) { write_bounds_csv(os, r); });
    } else if (experiment->parsed()) {
      const ConstructionSpec spec = make_spec(cons, common);
      std::optional<WeightedGraph> tmpl;
      if (!common.graph.empty()) {
        tmpl = io::load_graph(common.graph);
      } else {
        tmpl = natural_template(spec);
      }
      if (!tmpl) throw Error(ErrorCode::InvalidParams, "this construction needs --graph");
      ExperimentConfig cfg{spec, *tmpl};
      cfg.semantics = parse_semantics(common.semantics);
      cfg.method = parse_method(method);
      cfg.n_grid = parse_grid(grid);
      cfg.tol = tol;
      cfg.budget = budget;
      const ExperimentResult r = run_experiment(cfg);
      emit(common.out, [&](std::ostream& os) { write_experiment_csv(os, cfg, r, !no_timing); });
    } else if (verify_cmd->parsed()) {
      bool all = true;
      verify::run_all(quick, [&](const verify::CheckResult& r) {
        all = all && r.ok();
        std::printf("%s %s (%.3f s): %s\n", r.ok() ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
      });
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::UnsupportedSemantics ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
