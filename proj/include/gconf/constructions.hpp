#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <variant>
#include <vector>

#include "gconf/geometry.hpp"
#include "gconf/graph.hpp"

namespace gconf {

/// The ambient point set E: every point shares `dim`.
class PointSet {
 public:
  explicit PointSet(int dim = 2);
  PointSet(int dim, std::vector<Point> points);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
  [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }

  void push_back(const Point& p);

 private:
  int dim_;
  std::vector<Point> points_;
};

/// Smallest pairwise distance, or +inf for fewer than two points.
double min_pairwise_distance(const PointSet& e);

/// {(a g^j, 0) : j = 1..n}
PointSet progression_line(std::size_t n, double a, double g);

struct TriangleSet {
  PointSet points;
  std::array<double, 3> type;  // (x1.q, q.x3, x3.x1)
};

/// x3 = (R, 0) with R^2 = a2 a3 / a1, x1 = (a3 / R, 0) and n - 2 points on the
/// shared alpha-line x = a1 R / a3, so every (x1, q, x3) is a dot-product
/// triangle of type (a1, a2, a3). Points are ordered x1, q_1 .. q_{n-2}, x3.
TriangleSet coincident_triangle_set(std::size_t n, double a1, double a2, double a3, std::uint64_t seed = 0);

/// Hub plus floor((n-1)/k) points per leaf weight. Distance mode centres
/// circles (spheres in 3D) of radius w_j at the origin; dot mode places the
/// batches on the alpha-lines l_{w_j}(p0) of the hub p0 = (1, 0). The hub is
/// point 0; the set is padded with far-away points to exactly n.
PointSet star_set(std::size_t n, std::size_t k, const std::vector<double>& weights, int dim, Metric mode,
                  std::uint64_t seed = 0);

/// Weights for tree_set: either one value per edge of T_{c,h} (in make_family
/// order) or a single uniform value.
using TreeWeights = std::variant<std::vector<double>, family::Uniform>;

/// One explicit embedding of the internal tree followed by floor(n / c^h)
/// points per leaf on the circle, sphere or alpha-line about its parent. The
/// root is point 0 and internal vertices follow in breadth-first order. When
/// the internal points push the total past n the set is larger than n;
/// otherwise it is padded to exactly n.
PointSet tree_set(std::size_t n, std::size_t c, std::size_t h, const TreeWeights& weights, int dim, Metric mode,
                  std::uint64_t seed = 0);

/// Points guaranteed by the generators above for their matching template.
std::size_t star_batch_size(std::size_t n, std::size_t k);
std::size_t tree_batch_size(std::size_t n, std::size_t c, std::size_t h);

}  // namespace gconf
