#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gconf/graph.hpp"

namespace gconf {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kDefaultCoverLimit = 20;
inline constexpr std::size_t kDefaultMatchingLimit = 24;

/// A partition of the vertices into disjoint single-edge blocks, two-edge path
/// blocks (middle vertex stored in the centre slot) and uncovered vertices.
struct CoverResult {
  std::vector<std::array<Vertex, 2>> p2_blocks;
  std::vector<std::array<Vertex, 3>> p3_blocks;
  std::vector<Vertex> leftover;
  std::size_t s = 0;
  std::size_t t = 0;
  Rational exponent;  // (4/3) s + 2 t + |leftover|

  [[nodiscard]] bool full() const noexcept { return leftover.empty(); }
};

/// Minimizes (4/3)s + 2t + |leftover| exactly by memoized search over vertex
/// subsets. Ties go to larger t, then larger s, then the lexicographically
/// smallest block sequence (blocks ordered by their smallest vertex).
CoverResult find_best_cover(const WeightedGraph& g, std::size_t limit = kDefaultCoverLimit);

/// Exponent of a cover with the given block counts.
Rational cover_exponent(std::size_t s, std::size_t t, std::size_t leftover);

struct MatchingResult {
  std::vector<std::size_t> edges;  // indices into g.edges(), ascending
  std::size_t m = 0;
  std::size_t r = 0;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
MatchingResult max_matching(const WeightedGraph& g, std::size_t limit = kDefaultMatchingLimit);

}  // namespace gconf
