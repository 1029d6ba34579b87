#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "gconf/decompose.hpp"

namespace gconf {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Edmonds' blossom algorithm with explicit base tracking; O(V^3).
class Blossom {
 public:
  explicit Blossom(const WeightedGraph& g)
      : g_(g), n_(g.vertex_count()), mate_(n_, kNone), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<std::size_t> run() {
    // Greedy warm start keeps the augmenting phase short and deterministic.
    for (const Edge& e : g_.edges()) {
      if (mate_[e.u] == kNone && mate_[e.v] == kNone) {
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
      }
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      const std::size_t end = find_path(v);
      augment(end);
    }
    return mate_;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t e : g_.incident(v)) {
        const std::size_t to = g_.other(e, v);
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const std::size_t cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = true;
          q.push(mate_[to]);
        }
      }
    }
    return kNone;
  }

  void augment(std::size_t v) {
    while (v != kNone) {
      const std::size_t pv = parent_[v];
      const std::size_t ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  const WeightedGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

}  // namespace

MatchingResult max_matching(const WeightedGraph& g, std::size_t limit) {
  if (g.vertex_count() > limit) {
    throw Error(ErrorCode::GraphTooLarge, "matching search refused for " + std::to_string(g.vertex_count()) +
                                              " vertices (limit " + std::to_string(limit) + ")");
  }
  const std::vector<std::size_t> mate = Blossom(g).run();
  MatchingResult out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (mate[e.u] == e.v) out.edges.push_back(i);
  }
  out.m = out.edges.size();
  out.r = g.vertex_count() - 2 * out.m;
  return out;
}

}  // namespace gconf
