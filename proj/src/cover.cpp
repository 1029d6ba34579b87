#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "gconf/decompose.hpp"

namespace gconf {

Rational cover_exponent(std::size_t s, std::size_t t, std::size_t leftover) {
  return Rational(4 * static_cast<long long>(s), 3) + Rational(2 * static_cast<long long>(t)) +
         Rational(static_cast<long long>(leftover));
}

namespace {

// Block written as its vertex sequence: {v}, {v,u} or a path {a,mid,b} with a < b.
struct Block {
  std::uint8_t len = 0;
  std::array<std::uint8_t, 3> vs{};

  [[nodiscard]] std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < len; ++i) m |= 1u << vs[i];
    return m;
  }
  [[nodiscard]] int cost3() const { return len == 1 ? 3 : (len == 2 ? 4 : 6); }

  friend bool operator<(const Block& a, const Block& b) {
    return std::lexicographical_compare(a.vs.begin(), a.vs.begin() + a.len, b.vs.begin(), b.vs.begin() + b.len);
  }
};

struct Best {
  std::int16_t cost3 = -1;  // 3 * exponent; -1 means not yet solved
  std::uint8_t t = 0;
  std::uint8_t s = 0;
  Block first;
};

class CoverSearch {
 public:
  explicit CoverSearch(const WeightedGraph& g) : n_(g.vertex_count()), adj_(n_, 0), memo_(std::size_t{1} << n_) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1u << e.v;
      adj_[e.v] |= 1u << e.u;
    }
    memo_[0].cost3 = 0;
  }

  const Best& solve(std::uint32_t mask) {
    Best& slot = memo_[mask];
    if (slot.cost3 >= 0) return slot;

    const auto v = static_cast<std::uint8_t>(std::countr_zero(mask));
    Best best;
    auto consider = [&](const Block& b) {
      const Best& rest = solve(mask & ~b.mask());
      Best cand;
      cand.cost3 = static_cast<std::int16_t>(rest.cost3 + b.cost3());
      cand.t = static_cast<std::uint8_t>(rest.t + (b.len == 3 ? 1 : 0));
      cand.s = static_cast<std::uint8_t>(rest.s + (b.len == 2 ? 1 : 0));
      cand.first = b;
      if (best.cost3 < 0 || better(cand, best)) best = cand;
    };

    consider(Block{1, {v, 0, 0}});
    const std::uint32_t nbrs = adj_[v] & mask;
    for (std::uint32_t a = nbrs; a != 0; a &= a - 1) {
      const auto u = static_cast<std::uint8_t>(std::countr_zero(a));
      consider(Block{2, {v, u, 0}});
      // v as an endpoint: v - u - x.
      for (std::uint32_t b = adj_[u] & mask & ~(1u << v); b != 0; b &= b - 1) {
        consider(Block{3, {v, u, static_cast<std::uint8_t>(std::countr_zero(b))}});
      }
      // v in the middle: a - v - b with a < b.
      for (std::uint32_t b = nbrs & ~((2u << u) - 1); b != 0; b &= b - 1) {
        consider(Block{3, {u, v, static_cast<std::uint8_t>(std::countr_zero(b))}});
      }
    }
    memo_[mask] = best;
    return memo_[mask];
  }

 private:
  static bool better(const Best& a, const Best& b) {
    if (a.cost3 != b.cost3) return a.cost3 < b.cost3;
    if (a.t != b.t) return a.t > b.t;
    if (a.s != b.s) return a.s > b.s;
    return a.first < b.first;
  }

  std::size_t n_;
  std::vector<std::uint32_t> adj_;
  std::vector<Best> memo_;
};

}  // namespace

CoverResult find_best_cover(const WeightedGraph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit || n > 24) {
    throw Error(ErrorCode::GraphTooLarge,
                "cover search refused for " + std::to_string(n) + " vertices (limit " + std::to_string(limit) + ")");
  }
  CoverSearch search(g);
  CoverResult out;
  std::uint32_t mask = n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  while (mask != 0) {
    const Block b = search.solve(mask).first;
    if (b.len == 1) {
      out.leftover.push_back(b.vs[0]);
    } else if (b.len == 2) {
      out.p2_blocks.push_back({b.vs[0], b.vs[1]});
    } else {
      out.p3_blocks.push_back({b.vs[0], b.vs[1], b.vs[2]});
    }
    mask &= ~b.mask();
  }
  out.s = out.p2_blocks.size();
  out.t = out.p3_blocks.size();
  out.exponent = cover_exponent(out.s, out.t, out.leftover.size());
  return out;
}

}  // namespace gconf
