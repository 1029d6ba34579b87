#include "gconf/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "gconf/io.hpp"

namespace gconf {

PointSet generate(const ConstructionSpec& spec, std::size_t n) {
  return std::visit(
      [&](const auto& k) -> PointSet {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, construction::ProgressionLine>) {
          return progression_line(n, k.a, k.g);
        } else if constexpr (std::is_same_v<K, construction::CoincidentTriangle>) {
          return coincident_triangle_set(n, k.a1, k.a2, k.a3, spec.seed).points;
        } else if constexpr (std::is_same_v<K, construction::StarSet>) {
          return star_set(n, k.k, k.weights, spec.dim, spec.mode, spec.seed);
        } else {
          return tree_set(n, k.c, k.h, k.weights, spec.dim, spec.mode, spec.seed);
        }
      },
      spec.kind);
}

std::optional<WeightedGraph> natural_template(const ConstructionSpec& spec) {
  return std::visit(
      [&](const auto& k) -> std::optional<WeightedGraph> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, construction::ProgressionLine>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<K, construction::CoincidentTriangle>) {
          return make_family({family::Cycle{3}, std::vector<double>{k.a1, k.a2, k.a3}});
        } else if constexpr (std::is_same_v<K, construction::StarSet>) {
          return make_family({family::Star{k.k}, k.weights});
        } else {
          FamilyWeights w = family::Uniform{1.0};
          if (const auto* u = std::get_if<family::Uniform>(&k.weights)) {
            w = *u;
          } else {
            w = std::get<std::vector<double>>(k.weights);
          }
          return make_family({family::PerfectTree{k.c, k.h}, w});
        }
      },
      spec.kind);
}

double log_count(const Count& c) {
  if (c <= 0) throw Error(ErrorCode::ZeroCount, "cannot take the log of a zero count");
  const std::size_t bits = boost::multiprecision::msb(c) + 1;
  if (bits <= 1000) return std::log(c.convert_to<double>());
  const std::size_t shift = bits - 64;
  const Count top = c >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

FitResult fit_exponent(const std::vector<std::pair<double, Count>>& samples) {
  if (samples.size() < 3) throw Error(ErrorCode::InsufficientSamples, "need at least 3 samples");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [n, count] : samples) {
    if (count < 1) throw Error(ErrorCode::ZeroCount, "sample at n=" + io::format_double(n) + " has count 0");
    if (!(n > 0.0)) throw Error(ErrorCode::InvalidParams, "sample sizes must be positive");
    xs.push_back(std::log(n));
    ys.push_back(log_count(count));
  }
  const auto m = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorCode::InsufficientSamples, "samples need distinct n");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.n_grid.size() < 3) throw Error(ErrorCode::InvalidParams, "n grid needs at least 3 sizes");
  for (std::size_t i = 1; i < cfg.n_grid.size(); ++i) {
    if (cfg.n_grid[i] <= cfg.n_grid[i - 1]) throw Error(ErrorCode::InvalidParams, "n grid must increase strictly");
  }
  if (std::holds_alternative<construction::CoincidentTriangle>(cfg.construction.kind) &&
      cfg.construction.mode != Metric::DotProduct) {
    throw Error(ErrorCode::InvalidParams, "the coincident triangle set is a dot-product construction");
  }

  CountQuery q;
  q.mode = cfg.construction.mode;
  q.semantics = cfg.semantics;
  q.tol = cfg.tol;
  q.method = cfg.method;
  q.budget = cfg.budget;

  ExperimentResult out;
  std::vector<std::pair<double, Count>> samples;
  for (std::size_t n : cfg.n_grid) {
    ExperimentRow row;
    row.n = n;
    const auto start = std::chrono::steady_clock::now();
    const PointSet e = generate(cfg.construction, n);
    try {
      CountResult r = count_configurations(e, cfg.template_graph, q);
      row.method = r.method_used;
      row.count = r.count;
      if (r.count > 0) samples.emplace_back(static_cast<double>(n), r.count);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::BudgetExceeded && err.code() != ErrorCode::UnsupportedSemantics) throw;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.rows.push_back(std::move(row));
  }
  out.fit = fit_exponent(samples);
  out.bounds = catalog(cfg.template_graph, cfg.construction.mode, cfg.construction.dim, cfg.tol);
  return out;
}

void write_experiment_csv(std::ostream& os, const ExperimentConfig& cfg, const ExperimentResult& result,
                          bool timing) {
  os << "# semantics=" << to_string(cfg.semantics)
     << " mode=" << (cfg.construction.mode == Metric::Distance ? "distance" : "dot")
     << " dim=" << cfg.construction.dim << " seed=" << cfg.construction.seed << '\n';
  os << "n,count,method,seconds\n";
  for (const auto& row : result.rows) {
    os << row.n << ',';
    if (row.count) {
      os << *row.count;
    } else {
      os << "budget";
    }
    os << ',' << to_string(row.method) << ',' << (timing ? io::format_double(row.seconds) : "0") << '\n';
  }
  os << "fit_slope,fit_r2\n";
  os << io::format_double(result.fit.slope) << ',' << io::format_double(result.fit.r_squared) << '\n';
  write_bounds_csv(os, result.bounds);
}

}  // namespace gconf
