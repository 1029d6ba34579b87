#include <vector>

#include "gconf/counting.hpp"

namespace gconf {

std::string_view to_string(Semantics s) noexcept {
  return s == Semantics::Injective ? "injective" : "hom";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::BruteForce: return "bruteforce";
    case Method::FastDP: return "fastdp";
  }
  return "?";
}

namespace detail {

void validate_query(const PointSet& e, const WeightedGraph& g, const CountQuery& q) {
  (void)e;
  if (q.mode == Metric::DotProduct) {
    for (const Edge& edge : g.edges()) {
      if (edge.w == 0.0) throw Error(ErrorCode::ZeroWeightInDotMode, "dot-product templates need nonzero weights");
    }
  }
}

}  // namespace detail

namespace {

class BruteForce {
 public:
  BruteForce(const PointSet& e, const WeightedGraph& g, const CountQuery& q) : e_(e), g_(g), q_(q) {
    // Breadth-first order per component so each placed vertex is checked
    // against earlier neighbours as early as possible.
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        const Vertex v = order_[head++];
        for (std::size_t ei : g.incident(v)) {
          const Vertex u = g.other(ei, v);
          if (!seen[u]) {
            seen[u] = true;
            order_.push_back(u);
          }
        }
      }
    }
    position_.resize(n);
    for (std::size_t i = 0; i < n; ++i) position_[order_[i]] = i;
    // back_edges_[d]: edges from order_[d] to vertices placed earlier.
    back_edges_.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
      const Vertex v = order_[d];
      for (std::size_t ei : g.incident(v)) {
        if (position_[g.other(ei, v)] < d) back_edges_[d].push_back(ei);
      }
    }
    image_.assign(n, 0);
    used_.assign(e.size(), 0);
  }

  std::uint64_t run() {
    if (g_.vertex_count() == 0) return 1;
    descend(0);
    return found_;
  }

  [[nodiscard]] std::uint64_t work() const noexcept { return work_; }

 private:
  void spend() {
    if (++work_ > q_.budget) {
      throw Error(ErrorCode::BudgetExceeded, "brute-force budget of " + std::to_string(q_.budget) + " exhausted");
    }
  }

  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      ++found_;
      return;
    }
    const Vertex v = order_[depth];
    const bool injective = q_.semantics == Semantics::Injective;
    for (std::size_t x = 0; x < e_.size(); ++x) {
      if (injective && used_[x] != 0) continue;
      spend();
      bool ok = true;
      for (std::size_t ei : back_edges_[depth]) {
        spend();
        const Edge& edge = g_.edges()[ei];
        const Vertex u = edge.u == v ? edge.v : edge.u;
        if (!edge_satisfied(e_[x], e_[image_[u]], q_.mode, edge.w, q_.tol)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image_[v] = x;
      used_[x] = 1;
      descend(depth + 1);
      used_[x] = 0;
    }
  }

  const PointSet& e_;
  const WeightedGraph& g_;
  const CountQuery& q_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<std::size_t>> back_edges_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
  std::uint64_t found_ = 0;
  std::uint64_t work_ = 0;
};

}  // namespace

CountResult count_bruteforce(const PointSet& e, const WeightedGraph& g, const CountQuery& q) {
  detail::validate_query(e, g, q);
  BruteForce search(e, g, q);
  CountResult out;
  out.count = search.run();
  out.method_used = Method::BruteForce;
  out.nodes_explored = search.work();
  return out;
}

}  // namespace gconf
