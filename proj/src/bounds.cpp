#include "gconf/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "gconf/decompose.hpp"

namespace gconf {

namespace {

Rational frac(long long num, long long den = 1) { return Rational(num, den); }

Rational pow_int(std::size_t base, std::size_t exp) {
  boost::multiprecision::cpp_int r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return Rational(r);
}

const Rational kZahlPair = frac(295, 197);

}  // namespace

std::string Exponent::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Exponent& e) {
  os << numerator(e.value);
  if (denominator(e.value) != 1) os << '/' << denominator(e.value);
  if (e.plus_epsilon) os << "+eps";
  return os;
}

ChainBounds chain_bounds(std::size_t k, Metric mode, int dim) {
  if (k < 1) throw Error(ErrorCode::InvalidParams, "chains need k >= 1");
  const auto kk = static_cast<long long>(k);
  ChainBounds b;

  if (dim == 2 && mode == Metric::Distance) {
    switch (k % 3) {
      case 0:
        b.upper = {frac(kk + 3, 3)};
        b.lower = Exponent{frac(kk + 3, 3)};
        break;
      case 1:
        b.upper = {frac(kk + 3, 3), true};
        b.lower = Exponent{frac(kk + 2, 3), true};
        break;
      default:
        b.upper = {frac(kk + 4, 3)};
        b.lower = Exponent{frac(kk + 4, 3)};
        break;
    }
    b.upper_citation = "Frankl-Kupavskii planar distance chains";
    b.lower_citation = "Frankl-Kupavskii planar chain constructions";
    if (k == 1) {
      b.upper = {frac(4, 3)};
      b.upper_citation = "Spencer-Szemeredi-Trotter unit distances";
      b.lower_citation = "Erdos lattice n^{1+c/loglog n}";
    }
  } else if (dim == 2 && mode == Metric::DotProduct) {
    b.upper = {frac(2 * (kk + 1), 3)};
    b.lower = Exponent{frac((kk + 2) / 2)};  // ceil((k+1)/2)
    b.upper_citation = "Szemeredi-Trotter incidences on alpha-lines";
    b.lower_citation = "dot-product chain constructions on alpha-lines";
    if (k == 1) {
      b.upper = {frac(4, 3)};
      b.lower = Exponent{frac(4, 3)};
      b.upper_citation = "Szemeredi-Trotter: nonzero dot products";
      b.lower_citation = "Szemeredi-Trotter sharpness";
    }
  } else if (dim == 3 && mode == Metric::Distance) {
    b.upper = {frac(kk, 2) + 1, true};
    b.upper_citation = "Frankl-Kupavskii spatial distance chains";
    if (k % 2 == 0) {
      b.lower = Exponent{frac(kk, 2) + 1};
      b.lower_citation = "spatial even-chain constructions";
    }
    if (k == 1) {
      b.upper = {kZahlPair, true};
      b.upper_citation = "Zahl spatial unit distances";
      b.lower = Exponent{frac(4, 3)};
      b.lower_citation = "Erdos spatial lattice n^{4/3} loglog n";
    }
  } else {
    throw Error(ErrorCode::UnsupportedCombination,
                "no chain bound for mode/dimension combination (dim " + std::to_string(dim) + ")");
  }

  if (k == 2) {
    // Hinges: the two-circle / two-line argument, witnessed by a 2-star set.
    if (dim == 2) {
      b.upper = {frac(2)};
      b.upper_citation = "hinge bound (two circles or two alpha-lines)";
    }
    b.lower = Exponent{frac(2)};
    b.lower_citation = "2-star construction";
    b.lower_external = false;
  }
  return b;
}

TreeExponent tree_exponent(std::size_t c, std::size_t h, ChainTerm term) {
  if (c < 2) throw Error(ErrorCode::InvalidParams, "tree arity must be at least 2");
  const auto cc = static_cast<long long>(c);

  std::vector<Rational> a;
  a.push_back(frac(1));
  a.push_back(frac(cc));
  for (std::size_t j = 2; j <= h; ++j) {
    const auto hj = static_cast<long long>(j);
    Rational next = term == ChainTerm::HPlusOne ? frac(hj + 1) : frac(hj);
    next += frac(cc - 2) * a[j - 1];
    for (std::size_t i = 0; i + 2 <= j; ++i) next += frac(2 * cc - 2) * a[i];
    a.push_back(next);
  }

  const Rational ch = pow_int(c, h);
  const Rational sign = h % 2 == 0 ? frac(1) : frac(-1);
  const Rational closed = ch * (frac(1) + frac(1, cc * cc - 1)) + sign / frac(2 * (cc + 1)) + frac(1) / frac(2 * (1 - cc));

  const bool eps = h >= 2;
  return {Exponent{a[h], eps}, Exponent{closed, eps}};
}

Rational binary_tree_closed_form(std::size_t h) {
  const Rational sign = h % 2 == 0 ? frac(1) : frac(-1);
  return (pow_int(2, h + 3) - 3 + sign) / 6;
}

Rational dot_binary_tree_exponent(std::size_t h) {
  if (h % 2 == 1) return frac(2, 3) * (pow_int(2, h + 1) - 1);
  return frac(1) + frac(4, 3) * (pow_int(2, h) - 1);
}

const BoundEntry* BoundReport::find(const std::string& rule, Side side) const {
  for (const auto& e : entries) {
    if (e.rule == rule && e.side == side) return &e;
  }
  return nullptr;
}

namespace {

class ReportBuilder {
 public:
  void upper(std::string rule, Exponent e, std::string citation) {
    entries_.push_back({std::move(rule), Side::Upper, std::move(e), std::move(citation), false});
  }
  void lower(std::string rule, Exponent e, std::string citation, bool external = false) {
    entries_.push_back({std::move(rule), Side::Lower, std::move(e), std::move(citation), external});
  }
  void chain(const std::string& rule, std::size_t k, Metric mode, int dim, bool with_lower) {
    if (mode == Metric::DotProduct && dim == 3) return;
    const ChainBounds b = chain_bounds(k, mode, dim);
    upper(rule, b.upper, b.upper_citation);
    if (with_lower && b.lower) lower(rule, *b.lower, b.lower_citation, b.lower_external);
  }

  BoundReport finish() {
    BoundReport r;
    r.entries = std::move(entries_);
    bool have_upper = false;
    for (const auto& e : r.entries) {
      if (e.side == Side::Upper) {
        if (!have_upper || e.exponent < r.best_upper) r.best_upper = e.exponent;
        have_upper = true;
      } else if (!e.external) {
        if (!r.best_lower || *r.best_lower < e.exponent) r.best_lower = e.exponent;
      }
    }
    return r;
  }

 private:
  std::vector<BoundEntry> entries_;
};

}  // namespace

BoundReport catalog(const WeightedGraph& g, Metric mode, int dim, const Tolerance& tol) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::InvalidDim, "dimension must be 2 or 3");
  ReportBuilder out;
  const auto n = static_cast<long long>(g.vertex_count());
  out.upper("trivial", {frac(n)}, "one free point per vertex");

  if (dim == 2) {
    const CoverResult cover = find_best_cover(g);
    out.upper(cover.full() ? "cover" : "cover-partial", {cover.exponent},
              cover.full() ? "P2/P3 cover: pair and hinge bounds"
                           : "partial P2/P3 cover plus free leftover vertices");
  }
  if (dim == 3 && mode == Metric::Distance) {
    const MatchingResult m = max_matching(g);
    const auto mm = static_cast<long long>(m.m);
    const auto rr = static_cast<long long>(m.r);
    out.upper("matching", {kZahlPair * mm + rr, m.m > 0}, "maximum matching with Zahl pair exponent 295/197");
  }

  const Recognition rec = recognize(g, tol);

  if (auto path = rec.find<family::Path>()) {
    out.chain("chain", path->k - 1, mode, dim, true);
  }

  if (auto cyc = rec.find<family::Cycle>()) {
    out.chain("cycle-chain", cyc->k - 1, mode, dim, false);
    if (cyc->k == 3 && dim == 2) {
      if (mode == Metric::DotProduct) {
        out.upper("dot-triangle", {frac(4, 3)}, "triangle via alpha-line case analysis and Szemeredi-Trotter");
        out.lower("dot-triangle", {frac(1)}, "coincident alpha-line construction");
      } else {
        out.upper("distance-triangle", {frac(4, 3)}, "triangle bounded by its unit-distance pairs");
        out.lower("distance-triangle", {frac(1)}, "trivial triangle lower bound");
      }
    }
  }

  if (auto star = rec.find<family::Star>()) {
    const auto k = static_cast<long long>(star->k);
    if (dim == 2 || mode == Metric::Distance) {
      out.upper("star", {frac(k)}, dim == 2 ? "k-star bound via hinges" : "spatial k-star bound");
      out.lower("star", {frac(k)}, "points on circles or alpha-lines about the hub");
    }
  }

  if (auto tree = rec.find<family::PerfectTree>(); tree && tree->h >= 1) {
    const Rational leaves = pow_int(tree->c, tree->h);
    if (dim == 2 && mode == Metric::Distance) {
      out.upper("tree", {leaves}, "perfect tree: leaf pairs pin their parent");
      out.lower("tree", {leaves}, "leaf batches on circles about the internal tree");
    } else if (dim == 2) {
      if (rec.uniform_weight) {
        out.upper("tree", {leaves}, "uniform-weight perfect tree via alpha-lines");
        out.lower("tree", {leaves}, "leaf batches on alpha-lines about the internal tree");
      }
      if (tree->c == 2) {
        out.upper("dot-binary-tree", {dot_binary_tree_exponent(tree->h)}, "hinge cover of a binary tree");
      }
    } else if (mode == Metric::Distance && rec.uniform_weight) {
      if (tree->c >= 3) {
        out.upper("tree", {leaves}, "uniform spatial tree: three spheres pin a parent");
        out.lower("tree", {leaves}, "leaf batches on spheres about the internal tree");
      }
      out.upper("tree-recurrence", tree_exponent(tree->c, tree->h).recurrence,
                "outer chain plus subtree recurrence");
      if (tree->c == 2) out.lower("tree-recurrence", {leaves}, "leaf batches on spheres about the internal tree");
    }
  }

  return out.finish();
}

void write_bounds_csv(std::ostream& os, const BoundReport& report, bool header) {
  if (header) os << "rule,side,exponent_num,exponent_den,plus_epsilon,citation\n";
  for (const auto& e : report.entries) {
    os << e.rule << ',' << (e.side == Side::Upper ? "upper" : "lower") << ',' << numerator(e.exponent.value) << ','
       << denominator(e.exponent.value) << ',' << (e.exponent.plus_epsilon ? 1 : 0) << ','
       << (e.external ? "external: " : "") << e.citation << '\n';
  }
}

}  // namespace gconf
