#include <algorithm>
#include <cmath>
#include <limits>

#include "gconf/counting.hpp"

namespace gconf {

ValueIndex::ValueIndex(const PointSet& e, Metric mode, const Tolerance& tol)
    : mode_(mode), tol_(tol), n_(e.size()) {
  if (n_ > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::InvalidParams, "point set too large");
  pairs_.reserve(n_ * (n_ + 1) / 2);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = i; j < n_; ++j) pairs_.push_back({metric_value(e[i], e[j], mode), i, j});
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
}

std::vector<ValueIndex::Pair> ValueIndex::lookup(double w) const {
  // Probe a window wider than the tolerance, then apply the exact predicate.
  const double reach = 2.0 * tol_.slack(w);
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), w - reach,
                             [](const Pair& p, double v) { return p.value < v; });
  std::vector<Pair> out;
  for (; it != pairs_.end() && it->value <= w + reach; ++it) {
    if (tol_.within(it->value, w)) out.push_back(*it);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> ValueIndex::adjacency(double w) const {
  std::vector<std::vector<std::uint32_t>> adj(n_);
  for (const Pair& p : lookup(w)) {
    adj[p.i].push_back(p.j);
    if (p.i != p.j) adj[p.j].push_back(p.i);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Neighborhoods::Neighborhoods(const ValueIndex& index, std::span<const double> weights) {
  for (double w : weights) {
    if (std::find(weights_.begin(), weights_.end(), w) != weights_.end()) continue;
    weights_.push_back(w);
    lists_.push_back(index.adjacency(w));
  }
}

const std::vector<std::uint32_t>& Neighborhoods::of(std::uint32_t point, double weight) const {
  const auto it = std::find(weights_.begin(), weights_.end(), weight);
  if (it == weights_.end()) throw Error(ErrorCode::InvalidParams, "weight was not indexed");
  return lists_[static_cast<std::size_t>(it - weights_.begin())][point];
}

PointLocator::PointLocator(const PointSet& e) : e_(&e) {
  // Irrational-looking direction so axis-aligned constructions do not tie.
  dir_ = e.dim() == 2 ? Point(0.7946544722917661, 0.6070619982066863)
                      : Point(0.6785983445458468, 0.5377890270113155, 0.5003237787036924);
  keys_.resize(e.size());
  order_.resize(e.size());
  for (std::uint32_t i = 0; i < e.size(); ++i) order_[i] = i;
  std::vector<double> raw(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) raw[i] = dot(e[i], dir_);
  std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) { return raw[a] < raw[b]; });
  for (std::size_t k = 0; k < order_.size(); ++k) keys_[k] = raw[order_[k]];
}

std::vector<std::uint32_t> PointLocator::near(const Point& q, double radius) const {
  const double center = dot(q, dir_);
  const double reach = radius * norm(dir_) * (1.0 + 1e-12) + 1e-300;
  auto lo = std::lower_bound(keys_.begin(), keys_.end(), center - reach);
  std::vector<std::uint32_t> out;
  for (auto it = lo; it != keys_.end() && *it <= center + reach; ++it) {
    const std::uint32_t idx = order_[static_cast<std::size_t>(it - keys_.begin())];
    if (distance((*e_)[idx], q) <= radius) out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gconf
