#include "gconf/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

namespace gconf {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(i) + " is a loop");
    if (!(std::abs(e.w) > 0.0) || !std::isfinite(e.w)) {
      throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(i) + " needs a finite nonzero weight");
    }
    if (adjacent(e.u, e.v)) {
      throw Error(ErrorCode::InvalidGraph,
                  "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    incident_[e.u].push_back(i);
    incident_[e.v].push_back(i);
  }
}

bool WeightedGraph::adjacent(Vertex a, Vertex b) const {
  const auto& inc = incident_[a];
  return std::any_of(inc.begin(), inc.end(), [&](std::size_t i) { return other(i, a) == b; });
}

std::size_t perfect_tree_size(std::size_t c, std::size_t h) {
  std::size_t total = 1;
  std::size_t level = 1;
  for (std::size_t i = 0; i < h; ++i) {
    if (level > std::numeric_limits<std::size_t>::max() / c) {
      throw Error(ErrorCode::InvalidFamilyParams, "perfect tree is too large");
    }
    level *= c;
    total += level;
  }
  return total;
}

namespace {

constexpr std::size_t kMaxFamilyVertices = 1u << 24;

struct Skeleton {
  std::size_t vertices;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

Skeleton skeleton(const FamilyKind& kind) {
  return std::visit(
      [](const auto& k) -> Skeleton {
        using K = std::decay_t<decltype(k)>;
        Skeleton s{};
        if constexpr (std::is_same_v<K, family::Path>) {
          if (k.k < 2) throw Error(ErrorCode::InvalidFamilyParams, "a path needs at least 2 vertices");
          s.vertices = k.k;
          for (Vertex i = 0; i + 1 < k.k; ++i) s.pairs.emplace_back(i, i + 1);
        } else if constexpr (std::is_same_v<K, family::Cycle>) {
          if (k.k < 3) throw Error(ErrorCode::InvalidFamilyParams, "a cycle needs at least 3 vertices");
          s.vertices = k.k;
          for (Vertex i = 0; i < k.k; ++i) s.pairs.emplace_back(i, (i + 1) % k.k);
        } else if constexpr (std::is_same_v<K, family::Star>) {
          if (k.k < 2) throw Error(ErrorCode::InvalidFamilyParams, "a star needs at least 2 leaves");
          s.vertices = k.k + 1;
          for (Vertex i = 1; i <= k.k; ++i) s.pairs.emplace_back(0, i);
        } else {
          if (k.c < 2) throw Error(ErrorCode::InvalidFamilyParams, "tree arity must be at least 2");
          s.vertices = perfect_tree_size(k.c, k.h);
          for (Vertex i = 1; i < s.vertices; ++i) s.pairs.emplace_back((i - 1) / k.c, i);
        }
        if (s.vertices > kMaxFamilyVertices) throw Error(ErrorCode::InvalidFamilyParams, "family is too large");
        return s;
      },
      kind);
}

}  // namespace

WeightedGraph make_family(const FamilySpec& spec) {
  const Skeleton s = skeleton(spec.kind);
  std::vector<double> weights;
  if (const auto* u = std::get_if<family::Uniform>(&spec.weights)) {
    weights.assign(s.pairs.size(), u->alpha);
  } else {
    weights = std::get<std::vector<double>>(spec.weights);
    if (weights.size() != s.pairs.size()) {
      throw Error(ErrorCode::WeightCountMismatch, "expected " + std::to_string(s.pairs.size()) + " weights, got " +
                                                      std::to_string(weights.size()));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(s.pairs.size());
  for (std::size_t i = 0; i < s.pairs.size(); ++i) edges.push_back({s.pairs[i].first, s.pairs[i].second, weights[i]});
  return {s.vertices, std::move(edges)};
}

namespace {

bool connected(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.incident(v)) {
      const Vertex u = g.other(e, v);
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

// Checks whether g is T_{c,h} rooted at r with c = deg(r); returns h on success.
std::optional<std::size_t> perfect_tree_height(const WeightedGraph& g, Vertex r) {
  const std::size_t c = g.degree(r);
  if (c < 2) return std::nullopt;
  std::vector<std::size_t> depth(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> queue;
  depth[r] = 0;
  queue.push(r);
  std::optional<std::size_t> leaf_depth;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    std::size_t children = 0;
    for (std::size_t e : g.incident(v)) {
      const Vertex u = g.other(e, v);
      if (depth[u] == std::numeric_limits<std::size_t>::max()) {
        depth[u] = depth[v] + 1;
        ++children;
        queue.push(u);
      }
    }
    if (children == 0) {
      if (leaf_depth && *leaf_depth != depth[v]) return std::nullopt;
      leaf_depth = depth[v];
    } else if (children != c) {
      return std::nullopt;
    }
  }
  return leaf_depth;
}

}  // namespace

Recognition recognize(const WeightedGraph& g, const Tolerance& tol) {
  Recognition out;
  const auto& edges = g.edges();
  out.uniform_weight = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return tol.within(e.w, edges.front().w);
  });

  const std::size_t n = g.vertex_count();
  if (n == 1) {
    out.matches.emplace_back(family::PerfectTree{0, 0});
    out.tree_root = 0;
    return out;
  }
  if (!connected(g)) return out;

  std::size_t max_deg = 0;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < n; ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    if (g.degree(v) == 1) ++leaves;
  }
  const std::size_t m = g.edge_count();

  if (m + 1 == n && max_deg <= 2) out.matches.emplace_back(family::Path{n});
  if (m == n && n >= 3 && max_deg == 2 && leaves == 0) out.matches.emplace_back(family::Cycle{n});
  if (m + 1 == n && n >= 3 && max_deg == n - 1) out.matches.emplace_back(family::Star{n - 1});

  if (m + 1 == n) {
    for (Vertex r = 0; r < n; ++r) {
      if (g.degree(r) < 2) continue;
      if (auto h = perfect_tree_height(g, r)) {
        out.matches.emplace_back(family::PerfectTree{g.degree(r), *h});
        out.tree_root = r;
        break;
      }
    }
  }
  return out;
}

std::string describe(const FamilyKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, family::Path>) {
          return "P" + std::to_string(k.k);
        } else if constexpr (std::is_same_v<K, family::Cycle>) {
          return "C" + std::to_string(k.k);
        } else if constexpr (std::is_same_v<K, family::Star>) {
          return "Star" + std::to_string(k.k);
        } else {
          return "T(" + std::to_string(k.c) + "," + std::to_string(k.h) + ")";
        }
      },
      kind);
}

}  // namespace gconf
