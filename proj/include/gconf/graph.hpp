#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gconf/geometry.hpp"

namespace gconf {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  double w;
};

/// Edge-weighted configuration template. Immutable once constructed.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Validates: endpoints in range, no loops, no repeated unordered pair, nonzero weights.
  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Indices into edges() of the edges incident to v.
  [[nodiscard]] const std::vector<std::size_t>& incident(Vertex v) const { return incident_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return incident_[v].size(); }
  [[nodiscard]] Vertex other(std::size_t edge_index, Vertex v) const {
    const Edge& e = edges_[edge_index];
    return e.u == v ? e.v : e.u;
  }
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

namespace family {
struct Path {
  std::size_t k;  // vertex count
};
struct Cycle {
  std::size_t k;
};
struct Star {
  std::size_t k;  // leaf count
};
struct PerfectTree {
  std::size_t c;
  std::size_t h;
};
struct Uniform {
  double alpha;
};
}  // namespace family

using FamilyKind = std::variant<family::Path, family::Cycle, family::Star, family::PerfectTree>;
using FamilyWeights = std::variant<std::vector<double>, family::Uniform>;

struct FamilySpec {
  FamilyKind kind;
  FamilyWeights weights;
};

/// Edge order: paths and cycles walk 0-1-2-...; stars use hub 0 with leaf j+1
/// on edge j; perfect trees are numbered breadth-first from root 0 and edge i
/// joins vertex i+1 to its parent.
WeightedGraph make_family(const FamilySpec& spec);

std::size_t perfect_tree_size(std::size_t c, std::size_t h);

/// Every named family a graph belongs to, up to isomorphism. Several tags can
/// apply at once (a 2-star is also the path on three vertices and T_{2,1}).
/// A single isolated vertex is reported as PerfectTree{0, 0}: height zero with
/// any arity.
struct Recognition {
  std::vector<FamilyKind> matches;
  bool uniform_weight = false;
  std::optional<Vertex> tree_root;  // set when a PerfectTree tag is present

  [[nodiscard]] bool general() const noexcept { return matches.empty(); }
  template <typename Kind>
  [[nodiscard]] std::optional<Kind> find() const {
    for (const auto& m : matches) {
      if (const auto* k = std::get_if<Kind>(&m)) return *k;
    }
    return std::nullopt;
  }
};

Recognition recognize(const WeightedGraph& g, const Tolerance& tol = {});

std::string describe(const FamilyKind& kind);

}  // namespace gconf
