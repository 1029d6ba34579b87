#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "gconf/counting.hpp"

namespace gconf {

namespace detail {
void validate_query(const PointSet& e, const WeightedGraph& g, const CountQuery& q);
}

namespace {

constexpr std::size_t kExactFvsLimit = 20;

// Union-find check that the edges avoiding `removed` form a forest.
bool is_forest_without(const WeightedGraph& g, const std::vector<char>& removed) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (removed[e.u] != 0 || removed[e.v] != 0) continue;
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<Vertex> greedy_fvs(const WeightedGraph& g) {
  std::vector<char> removed(g.vertex_count(), 0);
  std::vector<Vertex> out;
  while (!is_forest_without(g, removed)) {
    // Strip vertices of remaining degree <= 1, then drop the max-degree survivor.
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    std::vector<char> gone = removed;
    bool changed = true;
    while (changed) {
      changed = false;
      std::fill(deg.begin(), deg.end(), 0);
      for (const Edge& e : g.edges()) {
        if (gone[e.u] == 0 && gone[e.v] == 0) {
          ++deg[e.u];
          ++deg[e.v];
        }
      }
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (gone[v] == 0 && deg[v] <= 1) {
          gone[v] = 1;
          changed = true;
        }
      }
    }
    Vertex pick = 0;
    std::size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (gone[v] == 0 && deg[v] > best) {
        best = deg[v];
        pick = v;
      }
    }
    removed[pick] = 1;
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Vertex> min_feedback_vertex_set(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> removed(n, 0);
  if (is_forest_without(g, removed)) return {};
  if (n > kExactFvsLimit) return greedy_fvs(g);

  for (std::size_t k = 1; k <= n; ++k) {
    // Lexicographic walk over k-subsets.
    std::vector<Vertex> pick(k);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    std::optional<std::vector<Vertex>> best;
    std::size_t best_degree = 0;
    for (;;) {
      std::fill(removed.begin(), removed.end(), 0);
      std::size_t degree_sum = 0;
      for (Vertex v : pick) {
        removed[v] = 1;
        degree_sum += g.degree(v);
      }
      if ((!best || degree_sum > best_degree) && is_forest_without(g, removed)) {
        best = pick;
        best_degree = degree_sum;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (best) return *best;
  }
  return {};
}

namespace {

struct TreeVertex {
  Vertex v;
  std::optional<std::size_t> parent_slot;  // index into the component order
  double parent_weight = 0.0;
  std::vector<Anchor> anchor_edges;         // weight only; point filled per assignment
  std::vector<Vertex> anchor_vertices;      // FVS neighbours
  std::vector<std::size_t> child_slots;
  std::vector<double> child_weights;
};

// Vertices of one tree of G - F in parent-before-child order.
struct Component {
  std::vector<TreeVertex> order;
  bool anchored = false;
};

class FastCounter {
 public:
  FastCounter(const PointSet& e, const WeightedGraph& g, const CountQuery& q)
      : e_(e),
        g_(g),
        q_(q),
        index_(e, q.mode, q.tol),
        nbhd_(index_, template_weights(g)),
        locator_(e),
        fvs_(min_feedback_vertex_set(g)),
        in_fvs_(g.vertex_count(), 0),
        image_(g.vertex_count(), 0),
        table_(e.size()) {
    for (Vertex f : fvs_) in_fvs_[f] = 1;
    build_components();
    order_fvs();
  }

  Count run() {
    // Components without FVS neighbours do not depend on the assignment.
    Count fixed = 1;
    for (const Component& c : components_) {
      if (!c.anchored) fixed *= count_component(c);
    }
    if (fixed == 0) return 0;
    Count total = 0;
    enumerate_fvs(0, total);
    return total * fixed;
  }

  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t fvs_size() const noexcept { return fvs_.size(); }

 private:
  static std::vector<double> template_weights(const WeightedGraph& g) {
    std::vector<double> ws;
    for (const Edge& e : g.edges()) ws.push_back(e.w);
    return ws;
  }

  void spend(std::uint64_t amount = 1) {
    nodes_ += amount;
    if (nodes_ > q_.budget) {
      throw Error(ErrorCode::BudgetExceeded, "fast-count budget of " + std::to_string(q_.budget) + " exhausted");
    }
  }

  void build_components() {
    const std::size_t n = g_.vertex_count();
    std::vector<char> seen(n, 0);
    for (Vertex root = 0; root < n; ++root) {
      if (in_fvs_[root] != 0 || seen[root] != 0) continue;
      Component comp;
      seen[root] = 1;
      comp.order.push_back(TreeVertex{root, std::nullopt, 0.0, {}, {}, {}, {}});
      for (std::size_t head = 0; head < comp.order.size(); ++head) {
        const Vertex v = comp.order[head].v;
        for (std::size_t ei : g_.incident(v)) {
          const Vertex u = g_.other(ei, v);
          const double w = g_.edges()[ei].w;
          if (in_fvs_[u] != 0) {
            comp.order[head].anchor_vertices.push_back(u);
            comp.order[head].anchor_edges.push_back(Anchor{0, w});
            comp.anchored = true;
          } else if (seen[u] == 0) {
            seen[u] = 1;
            comp.order[head].child_slots.push_back(comp.order.size());
            comp.order[head].child_weights.push_back(w);
            comp.order.push_back(TreeVertex{u, head, w, {}, {}, {}, {}});
          }
        }
      }
      components_.push_back(std::move(comp));
    }
  }

  // FVS vertices in an order where each one after the first tends to have an
  // already-placed FVS neighbour; back_[i] lists those constraints.
  void order_fvs() {
    std::vector<Vertex> rest = fvs_;
    std::vector<char> placed(g_.vertex_count(), 0);
    while (!rest.empty()) {
      auto best = rest.begin();
      std::size_t best_links = 0;
      for (auto it = rest.begin(); it != rest.end(); ++it) {
        std::size_t links = 0;
        for (std::size_t ei : g_.incident(*it)) links += placed[g_.other(ei, *it)] != 0 ? 1 : 0;
        if (links > best_links) {
          best_links = links;
          best = it;
        }
      }
      const Vertex v = *best;
      rest.erase(best);
      std::vector<std::pair<Vertex, double>> back;
      for (std::size_t ei : g_.incident(v)) {
        const Vertex u = g_.other(ei, v);
        if (placed[u] != 0) back.emplace_back(u, g_.edges()[ei].w);
      }
      placed[v] = 1;
      fvs_order_.push_back(v);
      fvs_back_.push_back(std::move(back));
    }
  }

  void enumerate_fvs(std::size_t depth, Count& total) {
    if (depth == fvs_order_.size()) {
      Count product = 1;
      for (const Component& c : components_) {
        if (!c.anchored) continue;
        product *= count_component(c);
        if (product == 0) return;
      }
      total += product;
      return;
    }
    const Vertex v = fvs_order_[depth];
    std::vector<Anchor> anchors;
    for (const auto& [u, w] : fvs_back_[depth]) anchors.push_back(Anchor{static_cast<std::uint32_t>(image_[u]), w});
    const std::vector<std::uint32_t> options = candidates(e_, q_.mode, q_.tol, nbhd_, locator_, anchors);
    for (std::uint32_t x : options) {
      spend();
      image_[v] = x;
      enumerate_fvs(depth + 1, total);
    }
  }

  std::vector<std::uint32_t> allowed(const TreeVertex& tv) const {
    std::vector<Anchor> anchors = tv.anchor_edges;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      anchors[i].point = static_cast<std::uint32_t>(image_[tv.anchor_vertices[i]]);
    }
    return candidates(e_, q_.mode, q_.tol, nbhd_, locator_, anchors);
  }

  // Sum over homomorphisms of the tree; child tables are folded into parents
  // bottom-up, each table living in table_ for the duration of the pass.
  Count count_component(const Component& comp) {
    const std::size_t m = comp.order.size();
    std::vector<std::vector<std::uint32_t>> support(m);
    std::vector<std::vector<Count>> values(m);
    Count total = 0;
    for (std::size_t slot = m; slot-- > 0;) {
      const TreeVertex& tv = comp.order[slot];
      support[slot] = allowed(tv);
      values[slot].assign(support[slot].size(), Count(0));
      spend(support[slot].size());
      // Scatter each child's table into the dense scratch array while folding.
      for (std::size_t ci = 0; ci < tv.child_slots.size(); ++ci) {
        const std::size_t cs = tv.child_slots[ci];
        for (std::size_t k = 0; k < support[cs].size(); ++k) table_[support[cs][k]] = values[cs][k];
        const double w = tv.child_weights[ci];
        for (std::size_t k = 0; k < support[slot].size(); ++k) {
          if (ci > 0 && values[slot][k] == 0) continue;
          Count sum = 0;
          const auto& nbrs = nbhd_.of(support[slot][k], w);
          spend(nbrs.size());
          for (std::uint32_t y : nbrs) {
            if (table_[y] != 0) sum += table_[y];
          }
          values[slot][k] = ci == 0 ? sum : values[slot][k] * sum;
        }
        for (std::uint32_t y : support[cs]) table_[y] = 0;
        support[cs].clear();
        values[cs].clear();
      }
      if (tv.child_slots.empty()) std::fill(values[slot].begin(), values[slot].end(), Count(1));
    }
    for (const Count& c : values[0]) total += c;
    return total;
  }

  const PointSet& e_;
  const WeightedGraph& g_;
  const CountQuery& q_;
  ValueIndex index_;
  Neighborhoods nbhd_;
  PointLocator locator_;
  std::vector<Vertex> fvs_;
  std::vector<char> in_fvs_;
  std::vector<Vertex> fvs_order_;
  std::vector<std::vector<std::pair<Vertex, double>>> fvs_back_;
  std::vector<Component> components_;
  std::vector<std::size_t> image_;
  std::vector<Count> table_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CountResult count_fast(const PointSet& e, const WeightedGraph& g, const CountQuery& q) {
  detail::validate_query(e, g, q);
  if (q.semantics == Semantics::Injective) {
    try {
      CountResult out = count_bruteforce(e, g, q);
      return out;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::BudgetExceeded) throw;
      throw Error(ErrorCode::UnsupportedSemantics,
                  "injective counts need brute force, which exceeded its budget");
    }
  }
  FastCounter counter(e, g, q);
  CountResult out;
  out.count = counter.run();
  out.method_used = Method::FastDP;
  out.nodes_explored = counter.nodes();
  out.fvs_size = counter.fvs_size();
  return out;
}

CountResult count_configurations(const PointSet& e, const WeightedGraph& g, const CountQuery& q) {
  switch (q.method) {
    case Method::BruteForce: return count_bruteforce(e, g, q);
    case Method::FastDP: return count_fast(e, g, q);
    case Method::Auto:
      return q.semantics == Semantics::Homomorphism ? count_fast(e, g, q) : count_bruteforce(e, g, q);
  }
  return count_fast(e, g, q);
}

}  // namespace gconf
