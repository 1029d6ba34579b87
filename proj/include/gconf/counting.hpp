#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gconf/constructions.hpp"
#include "gconf/geometry.hpp"
#include "gconf/graph.hpp"

namespace gconf {

using Count = boost::multiprecision::cpp_int;

/// Homomorphism counts every vertex-to-point map satisfying the edges;
/// Injective additionally requires distinct points.
enum class Semantics { Injective, Homomorphism };
enum class Method { Auto, BruteForce, FastDP };

std::string_view to_string(Semantics s) noexcept;
std::string_view to_string(Method m) noexcept;

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct CountQuery {
  Metric mode = Metric::Distance;
  Semantics semantics = Semantics::Homomorphism;
  Tolerance tol;
  Method method = Method::Auto;
  std::uint64_t budget = kDefaultBudget;  // edge checks (brute force) or search nodes (fast)
};

struct CountResult {
  Count count;
  Method method_used = Method::BruteForce;
  std::uint64_t nodes_explored = 0;
  std::size_t fvs_size = 0;
};

/// Sorted table of every unordered pair {i, j}, i <= j, keyed by its metric
/// value. A range query for w returns
/// exactly the pairs whose value passes Tolerance::within(value, w).
class ValueIndex {
 public:
  ValueIndex(const PointSet& e, Metric mode, const Tolerance& tol);

  struct Pair {
    double value;
    std::uint32_t i;
    std::uint32_t j;
  };

  [[nodiscard]] std::vector<Pair> lookup(double w) const;
  /// For each point, the sorted list of points paired with it at value w.
  [[nodiscard]] std::vector<std::vector<std::uint32_t>> adjacency(double w) const;

  [[nodiscard]] Metric mode() const noexcept { return mode_; }
  [[nodiscard]] const Tolerance& tolerance() const noexcept { return tol_; }
  [[nodiscard]] std::size_t point_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t pair_count() const noexcept { return pairs_.size(); }

 private:
  Metric mode_;
  Tolerance tol_;
  std::size_t n_;
  std::vector<Pair> pairs_;
};

/// Unfolds the definition: walks every vertex-to-point assignment in a fixed
/// vertex order, checking each edge as soon as both endpoints are placed.
CountResult count_bruteforce(const PointSet& e, const WeightedGraph& g, const CountQuery& q);

/// Exact homomorphism count via a minimum feedback vertex set and forest
/// dynamic programming. Injective queries are delegated to brute force.
CountResult count_fast(const PointSet& e, const WeightedGraph& g, const CountQuery& q);

/// Dispatches on q.method (Auto: fast for Homomorphism, brute force otherwise).
CountResult count_configurations(const PointSet& e, const WeightedGraph& g, const CountQuery& q);

/// Minimum feedback vertex set; among minimum sets prefers larger total degree,
/// then the lexicographically smallest vertex list.
std::vector<Vertex> min_feedback_vertex_set(const WeightedGraph& g);

/// Looks up points of E by approximate position.
class PointLocator {
 public:
  explicit PointLocator(const PointSet& e);
  /// Indices of points within `radius` of `q`, ascending.
  [[nodiscard]] std::vector<std::uint32_t> near(const Point& q, double radius) const;

 private:
  const PointSet* e_;
  Point dir_;
  std::vector<double> keys_;
  std::vector<std::uint32_t> order_;
};

/// Per-weight adjacency lists extracted from a ValueIndex.
class Neighborhoods {
 public:
  Neighborhoods(const ValueIndex& index, std::span<const double> weights);

  /// Points paired with `point` at value `weight`; `weight` must be one of
  /// the weights given at construction.
  [[nodiscard]] const std::vector<std::uint32_t>& of(std::uint32_t point, double weight) const;

 private:
  std::vector<double> weights_;
  std::vector<std::vector<std::vector<std::uint32_t>>> lists_;
};

/// One already-placed neighbour of the vertex being resolved.
struct Anchor {
  std::uint32_t point;
  double weight;
};

/// Exactly the points of E that satisfy every anchor constraint. With two or
/// more anchors the vertex is pinned geometrically (two circles or two
/// alpha-lines in the plane, three spheres in space) when that system is well
/// conditioned; otherwise the shortest adjacency list is filtered.
std::vector<std::uint32_t> candidates(const PointSet& e, Metric mode, const Tolerance& tol,
                                      const Neighborhoods& nbhd, const PointLocator& locator,
                                      std::span<const Anchor> anchors);

}  // namespace gconf
