#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gconf/bounds.hpp"
#include "gconf/constructions.hpp"
#include "gconf/counting.hpp"

namespace gconf {

namespace construction {
struct ProgressionLine {
  double a = 1.0;
  double g = 2.0;
};
struct CoincidentTriangle {
  double a1 = 1.0;
  double a2 = 4.0;
  double a3 = 2.0;
};
struct StarSet {
  std::size_t k = 2;
  std::vector<double> weights;
};
struct TreeSet {
  std::size_t c = 2;
  std::size_t h = 1;
  TreeWeights weights = family::Uniform{1.0};
};
}  // namespace construction

using ConstructionKind = std::variant<construction::ProgressionLine, construction::CoincidentTriangle,
                                      construction::StarSet, construction::TreeSet>;

/// A generator together with everything but its target size.
struct ConstructionSpec {
  ConstructionKind kind;
  int dim = 2;
  Metric mode = Metric::Distance;
  std::uint64_t seed = 0;
};

PointSet generate(const ConstructionSpec& spec, std::size_t n);

/// The template each generator is rich in; progression lines have none.
std::optional<WeightedGraph> natural_template(const ConstructionSpec& spec);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Natural log of a positive arbitrary-precision count.
double log_count(const Count& c);

/// Least-squares line through (ln n, ln count).
FitResult fit_exponent(const std::vector<std::pair<double, Count>>& samples);

struct ExperimentConfig {
  ConstructionSpec construction;
  WeightedGraph template_graph;
  Semantics semantics = Semantics::Homomorphism;
  Method method = Method::Auto;
  std::vector<std::size_t> n_grid;
  Tolerance tol;
  std::uint64_t budget = kDefaultBudget;
};

struct ExperimentRow {
  std::size_t n = 0;
  std::optional<Count> count;  // empty when the row ran out of budget
  Method method = Method::Auto;
  double seconds = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  FitResult fit;
  BoundReport bounds;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// `# semantics=...` line, `n,count,method,seconds` rows, the fit footer and
/// the bound rows. With timing off the seconds column is written as 0.
void write_experiment_csv(std::ostream& os, const ExperimentConfig& cfg, const ExperimentResult& result,
                          bool timing = true);

}  // namespace gconf
