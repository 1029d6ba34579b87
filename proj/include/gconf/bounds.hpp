#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gconf/geometry.hpp"
#include "gconf/graph.hpp"

namespace gconf {

using Rational = boost::multiprecision::cpp_rational;

enum class Side { Upper, Lower };

/// Exact exponent of n, optionally "+ epsilon" (holds with any positive slack).
/// x + eps sorts strictly between x and every rational above x.
struct Exponent {
  Rational value;
  bool plus_epsilon = false;

  Exponent() = default;
  Exponent(Rational v, bool eps = false) : value(std::move(v)), plus_epsilon(eps) {}  // NOLINT

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value == b.value && a.plus_epsilon == b.plus_epsilon;
  }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.value < b.value) return std::strong_ordering::less;
    if (a.value > b.value) return std::strong_ordering::greater;
    return a.plus_epsilon <=> b.plus_epsilon;
  }
  /// Epsilon flags are absorbing: any flagged summand flags the sum.
  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    return {a.value + b.value, a.plus_epsilon || b.plus_epsilon};
  }
  [[nodiscard]] double approx() const { return static_cast<double>(value); }
  [[nodiscard]] std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Exponent& e);

struct ChainBounds {
  Exponent upper;
  std::optional<Exponent> lower;  // empty where only a hard-to-state bound exists
  std::string upper_citation;
  std::string lower_citation;
  bool lower_external = true;     // true unless this library builds the witness
};

/// Upper/lower exponents for k-chains (paths on k+1 vertices).
ChainBounds chain_bounds(std::size_t k, Metric mode, int dim);

/// How the chain term of the tree recurrence is read.
enum class ChainTerm {
  HPlusOne,  // exponent of a 2h-chain in space: 2h/2 + 1
  AsPrinted, // the literal "h + eps" term; disagrees with the closed form
};

struct TreeExponent {
  Exponent recurrence;
  Exponent closed_form;
};

/// Exponent bound for perfect c-ary trees in space with uniform weights, both
/// from the decomposition recurrence and from its closed-form solution.
TreeExponent tree_exponent(std::size_t c, std::size_t h, ChainTerm term = ChainTerm::HPlusOne);

/// (1/6)(2^{h+3} - 3 + (-1)^h): the binary specialization of the closed form.
Rational binary_tree_closed_form(std::size_t h);

/// Planar dot-product exponent for T_{2,h} obtained from a P3 cover.
Rational dot_binary_tree_exponent(std::size_t h);

struct BoundEntry {
  std::string rule;
  Side side = Side::Upper;
  Exponent exponent;
  std::string citation;
  bool external = false;  // witness cited but not constructed here
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  Exponent best_upper;
  std::optional<Exponent> best_lower;

  [[nodiscard]] const BoundEntry* find(const std::string& rule, Side side) const;
};

/// Every applicable rule for the template in the given setting, with the
/// smallest upper exponent and the largest constructed lower exponent.
BoundReport catalog(const WeightedGraph& g, Metric mode, int dim, const Tolerance& tol = {});

/// CSV: header `rule,side,exponent_num,exponent_den,plus_epsilon,citation`.
void write_bounds_csv(std::ostream& os, const BoundReport& report, bool header = true);

}  // namespace gconf
