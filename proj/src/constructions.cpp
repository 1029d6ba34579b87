#include "gconf/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace gconf {

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::InvalidDim, "point sets are 2D or 3D");
}

PointSet::PointSet(int dim, std::vector<Point> points) : PointSet(dim) {
  for (const auto& p : points) push_back(p);
}

void PointSet::push_back(const Point& p) {
  if (p.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from the set");
  points_.push_back(p);
}

namespace {

// A generic direction: no construction places distinct points at equal projections on it.
Point probe_direction(int dim) {
  return dim == 2 ? Point(0.7946544722917661, 0.6070619982066863)
                  : Point(0.5773502691896258 + 0.1, 0.5773502691896258 - 0.05, 0.5773502691896258 - 0.2);
}

std::vector<std::size_t> order_by_projection(const PointSet& e, std::vector<double>& key) {
  const Point u = probe_direction(e.dim());
  key.resize(e.size());
  std::vector<std::size_t> order(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    key[i] = dot(e[i], u);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return order;
}

double coordinate_scale(const PointSet& e) {
  double s = 1.0;
  for (const auto& p : e.points()) {
    for (int i = 0; i < e.dim(); ++i) s = std::max(s, std::abs(p[i]));
  }
  return s;
}

// True when some pair of points is closer than `gap`.
bool has_near_pair(const PointSet& e, double gap) {
  std::vector<double> key;
  const auto order = order_by_projection(e, key);
  const double window = gap * norm(probe_direction(e.dim()));
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size() && key[order[b]] - key[order[a]] <= window; ++b) {
      if (distance(e[order[a]], e[order[b]]) < gap) return true;
    }
  }
  return false;
}

double separation_gap(const PointSet& e) { return 1e-6 * coordinate_scale(e); }

// Portable uniform in [0, 1) from the raw engine output.
class Phases {
 public:
  explicit Phases(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // In [0.2, 0.8): keeps batch grids away from their own endpoints.
  double interior() { return 0.2 + 0.6 * next(); }

 private:
  std::mt19937_64 engine_;
};

Point on_circle(const Point& center, double radius, double angle) {
  return center + Point(radius * std::cos(angle), radius * std::sin(angle));
}

// Point `index` of a spherical Fibonacci lattice with `count` points, spun by `spin`.
Point on_sphere(const Point& center, double radius, std::size_t index, std::size_t count, double spin) {
  const double z = 1.0 - (2.0 * static_cast<double>(index) + 1.0) / static_cast<double>(count);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double phi = golden * static_cast<double>(index) + spin;
  return center + Point(radius * rho * std::cos(phi), radius * rho * std::sin(phi), radius * z);
}

// Far-away filler points so the set has exactly n entries. Spaced by more
// than any template weight so fillers never pair up with each other.
void pad_to(PointSet& e, std::size_t n, double reach) {
  const double step = 10.0 * (coordinate_scale(e) + reach + 1.0);
  const Point u = (1.0 / norm(probe_direction(e.dim()))) * probe_direction(e.dim());
  for (std::size_t i = 1; e.size() < n; ++i) e.push_back((step * static_cast<double>(i + 1)) * u);
}

double max_abs(const std::vector<double>& ws) {
  double m = 0.0;
  for (double w : ws) m = std::max(m, std::abs(w));
  return m;
}

constexpr int kMaxPlacementAttempts = 64;

}  // namespace

double min_pairwise_distance(const PointSet& e) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) best = std::min(best, distance(e[i], e[j]));
  }
  return best;
}

PointSet progression_line(std::size_t n, double a, double g) {
  if (!(a > 0.0) || !(g > 1.0)) throw Error(ErrorCode::InvalidParams, "progression needs a > 0 and g > 1");
  if (n < 1) throw Error(ErrorCode::InvalidParams, "progression needs n >= 1");
  PointSet out(2);
  double x = a;
  for (std::size_t j = 1; j <= n; ++j) {
    x *= g;
    out.push_back(Point(x, 0.0));
  }
  return out;
}

TriangleSet coincident_triangle_set(std::size_t n, double a1, double a2, double a3, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidParams, "triangle set needs n >= 3");
  if (a1 == 0.0 || a2 == 0.0 || a3 == 0.0) throw Error(ErrorCode::DegenerateType, "weights must be nonzero");
  if (!(a2 * a3 / a1 > 0.0)) throw Error(ErrorCode::DegenerateType, "needs a2 a3 / a1 > 0");
  if (a1 == a2) throw Error(ErrorCode::DegenerateType, "a1 == a2 forces x1 == x3");

  const double radius = std::sqrt(a2 * a3 / a1);
  const Point x3(radius, 0.0);
  const Point x1(a3 / radius, 0.0);
  const double line_x = a1 * radius / a3;

  Phases phases(seed);
  const double phase = phases.interior();
  PointSet out(2);
  out.push_back(x1);
  for (std::size_t i = 0; i + 2 < n; ++i) out.push_back(Point(line_x, static_cast<double>(i) + phase));
  out.push_back(x3);
  return {std::move(out), {a1, a2, a3}};
}

std::size_t star_batch_size(std::size_t n, std::size_t k) { return k == 0 || n == 0 ? 0 : (n - 1) / k; }

std::size_t tree_batch_size(std::size_t n, std::size_t c, std::size_t h) {
  std::size_t leaves = 1;
  for (std::size_t i = 0; i < h; ++i) {
    if (leaves > n) return 0;
    leaves *= c;
  }
  return n / leaves;
}

PointSet star_set(std::size_t n, std::size_t k, const std::vector<double>& weights, int dim, Metric mode,
                  std::uint64_t seed) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::InvalidDim, "dimension must be 2 or 3");
  if (mode == Metric::DotProduct && dim != 2) throw Error(ErrorCode::InvalidDim, "dot-product stars are planar");
  if (k < 1 || n < k + 1) throw Error(ErrorCode::InvalidParams, "star set needs k >= 1 and n >= k + 1");
  if (weights.size() != k) throw Error(ErrorCode::InvalidParams, "star set needs one weight per leaf");
  for (double w : weights) {
    if (mode == Metric::Distance && !(w > 0.0)) throw Error(ErrorCode::NegativeRadius, "radii must be positive");
    if (w == 0.0 || !std::isfinite(w)) throw Error(ErrorCode::InvalidParams, "weights must be finite and nonzero");
  }

  const std::size_t batch = star_batch_size(n, k);
  const double two_pi = 2.0 * std::numbers::pi;
  Phases phases(seed);

  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    const double phase = phases.interior();
    const double spin = two_pi * phases.next();
    PointSet out(dim);
    if (mode == Metric::Distance) {
      out.push_back(dim == 2 ? Point(0.0, 0.0) : Point(0.0, 0.0, 0.0));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < batch; ++i) {
          const double slot = static_cast<double>(i) + (static_cast<double>(j) + phase) / static_cast<double>(k);
          if (dim == 2) {
            out.push_back(on_circle(out[0], weights[j], spin + two_pi * slot / static_cast<double>(batch)));
          } else {
            out.push_back(on_sphere(out[0], weights[j], i * k + j, batch * k, spin));
          }
        }
      }
    } else {
      // Hub p0 = (1, 0): the alpha-line l_w(p0) is the vertical line x = w.
      out.push_back(Point(1.0, 0.0));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < batch; ++i) {
          const double slot = static_cast<double>(i) + (static_cast<double>(j) + phase) / static_cast<double>(k);
          out.push_back(Point(weights[j], slot + 0.5));
        }
      }
    }
    if (has_near_pair(out, separation_gap(out))) continue;
    pad_to(out, n, max_abs(weights));
    return out;
  }
  throw Error(ErrorCode::InvalidParams, "could not place star batches in generic position");
}

PointSet tree_set(std::size_t n, std::size_t c, std::size_t h, const TreeWeights& weights, int dim, Metric mode,
                  std::uint64_t seed) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::InvalidDim, "dimension must be 2 or 3");
  if (c < 2 || h < 1) throw Error(ErrorCode::InvalidParams, "tree set needs c >= 2 and h >= 1");
  const std::size_t total = perfect_tree_size(c, h);
  const std::size_t internal = perfect_tree_size(c, h - 1);
  const std::size_t batch = tree_batch_size(n, c, h);
  if (batch == 0) throw Error(ErrorCode::InvalidParams, "tree set needs n >= c^h");

  std::vector<double> edge_w(total - 1);
  if (const auto* u = std::get_if<family::Uniform>(&weights)) {
    std::fill(edge_w.begin(), edge_w.end(), u->alpha);
  } else {
    edge_w = std::get<std::vector<double>>(weights);
    if (edge_w.size() != total - 1) throw Error(ErrorCode::InvalidParams, "tree set needs one weight per edge");
  }
  for (double w : edge_w) {
    if (w == 0.0 || !std::isfinite(w)) throw Error(ErrorCode::InvalidParams, "weights must be finite and nonzero");
    if (mode == Metric::Distance && !(w > 0.0)) throw Error(ErrorCode::NegativeRadius, "radii must be positive");
  }
  if (mode == Metric::DotProduct) {
    if (dim != 2) throw Error(ErrorCode::InvalidDim, "dot-product trees are planar");
    if (!std::all_of(edge_w.begin(), edge_w.end(), [&](double w) { return w == edge_w.front(); })) {
      throw Error(ErrorCode::UnsupportedMode, "dot-product trees need one uniform weight");
    }
  }

  const double two_pi = 2.0 * std::numbers::pi;
  const double golden = std::numbers::phi - 1.0;
  Phases phases(seed);
  auto weight_to = [&](std::size_t child) { return edge_w[child - 1]; };

  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    const double spin = phases.next();
    const double phase = phases.interior();
    // Generic per-vertex angle in [0, 1) turns.
    auto turn = [&](std::size_t vertex) {
      const double t = spin + golden * static_cast<double>(vertex + 1);
      return t - std::floor(t);
    };

    std::vector<Point> pos(internal);
    pos[0] = mode == Metric::DotProduct ? Point(1.0, 0.25) : (dim == 2 ? Point(0.0, 0.0) : Point(0.0, 0.0, 0.0));
    for (std::size_t x = 1; x < internal; ++x) {
      const Point& parent = pos[(x - 1) / c];
      const double w = weight_to(x);
      if (mode == Metric::DotProduct) {
        const Line2 line = alpha_line(parent, w);
        const double s = (0.5 + turn(x)) * (x % 2 == 0 ? 1.0 : -1.0);
        pos[x] = line.anchor + s * line.direction;
      } else if (dim == 2) {
        pos[x] = on_circle(parent, w, two_pi * turn(x));
      } else {
        pos[x] = on_sphere(parent, w, x % 97, 97, two_pi * turn(x));
      }
    }

    PointSet out(dim, pos);
    // Height h-1 vertices occupy indices [|T_{c,h-2}|, |T_{c,h-1}|).
    const std::size_t first_parent = h == 1 ? 0 : perfect_tree_size(c, h - 2);
    for (std::size_t v = first_parent; v < internal; ++v) {
      const double start = turn(v);
      for (std::size_t j = 0; j < c; ++j) {
        const std::size_t child = c * v + 1 + j;
        const double w = weight_to(child);
        for (std::size_t i = 0; i < batch; ++i) {
          const double slot = static_cast<double>(i) + (static_cast<double>(j) + phase) / static_cast<double>(c);
          if (mode == Metric::DotProduct) {
            const Line2 line = alpha_line(pos[v], w);
            out.push_back(line.anchor + (slot + start) * line.direction);
          } else if (dim == 2) {
            out.push_back(on_circle(pos[v], w, two_pi * (start + slot / static_cast<double>(batch))));
          } else {
            out.push_back(on_sphere(pos[v], w, i * c + j, batch * c, two_pi * start));
          }
        }
      }
    }
    if (has_near_pair(out, separation_gap(out))) continue;
    pad_to(out, n, max_abs(edge_w));
    return out;
  }
  throw Error(ErrorCode::InvalidParams, "could not place tree batches in generic position");
}

}  // namespace gconf
