#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "gconf/error.hpp"

namespace gconf {

/// A point in the plane or in space. Coordinates beyond `dim()` are zero.
class Point {
 public:
  Point() = default;
  Point(double x, double y);
  Point(double x, double y, double z);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return c_[i]; }
  [[nodiscard]] double x() const noexcept { return c_[0]; }
  [[nodiscard]] double y() const noexcept { return c_[1]; }
  [[nodiscard]] double z() const noexcept { return c_[2]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::array<double, 3> c_{0.0, 0.0, 0.0};
  int dim_ = 2;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double distance(const Point& a, const Point& b);
Point cross(const Point& a, const Point& b);

/// Which pairwise quantity a template edge constrains.
enum class Metric { Distance, DotProduct };

/// Relative comparison tolerance used by every predicate in the library.
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);

  /// |value - target| <= eps * max(1, |target|)
  [[nodiscard]] bool within(double value, double target) const noexcept {
    return std::abs(value - target) <= slack(target);
  }
  [[nodiscard]] double slack(double target) const noexcept {
    return eps * std::max(1.0, std::abs(target));
  }
};

/// Euclidean distance or dot product, computed identically everywhere so that
/// the index-based and brute-force counters agree bit for bit.
double metric_value(const Point& a, const Point& b, Metric m);

/// The edge predicate: |metric(x, y) - w| <= eps * max(1, |w|).
bool edge_satisfied(const Point& x, const Point& y, Metric mode, double w, const Tolerance& tol);

struct Line2 {
  Point anchor;
  Point direction;  // unit length
};

/// The set {q : p . q = alpha}; perpendicular to the radial line through p.
Line2 alpha_line(const Point& p, double alpha, const Tolerance& tol = {});

namespace lines {
struct UniquePoint {
  Point q;
};
struct Coincident {
  Line2 line;
};
struct ParallelDisjoint {};
}  // namespace lines

using LinePairClass = std::variant<lines::UniquePoint, lines::Coincident, lines::ParallelDisjoint>;

/// Classifies the pair of alpha-lines l_alpha(p), l_beta(r). Coincidence is
/// decided first via alpha*r == beta*p, then distinct radial lines give the
/// unique crossing point, and everything else is a disjoint parallel pair.
LinePairClass classify_alpha_lines(const Point& p, double alpha, const Point& r, double beta,
                                   const Tolerance& tol = {});

/// Outcome of a circle/circle or sphere/sphere/sphere intersection.
struct Intersection {
  enum class Kind {
    Points,          // zero, one (tangency) or two isolated points
    Coincident,      // the two circles are the same circle
    InfiniteCircle,  // three spheres share a whole circle
  };
  Kind kind = Kind::Points;
  std::vector<Point> points;
  // Populated for InfiniteCircle.
  Point circle_center;
  Point circle_normal;
  double circle_radius = 0.0;

  [[nodiscard]] bool empty() const noexcept { return kind == Kind::Points && points.empty(); }
};

Intersection circle_circle(const Point& c1, double r1, const Point& c2, double r2,
                           const Tolerance& tol = {});

Intersection sphere_triple(const std::array<Point, 3>& centers, const std::array<double, 3>& radii,
                           const Tolerance& tol = {});

}  // namespace gconf
