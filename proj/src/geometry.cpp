#include "gconf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gconf {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidParams, "non-finite coordinate");
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "points of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

void require_nonzero_weight(double w) {
  if (w == 0.0) throw Error(ErrorCode::ZeroWeight, "alpha-line weight must be nonzero");
}

void require_off_origin(const Point& p, const Tolerance& tol) {
  if (norm(p) <= tol.eps) throw Error(ErrorCode::OriginAnchor, "alpha-line anchor at the origin");
}

void require_positive_radius(double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::NonPositiveRadius, "radius must be positive");
}

}  // namespace

Point::Point(double x, double y) : c_{x, y, 0.0}, dim_(2) {
  require_finite(x);
  require_finite(y);
}

Point::Point(double x, double y, double z) : c_{x, y, z}, dim_(3) {
  require_finite(x);
  require_finite(y);
  require_finite(z);
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  return a.dim() == 2 ? Point(a[0] + b[0], a[1] + b[1]) : Point(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  return a.dim() == 2 ? Point(a[0] - b[0], a[1] - b[1]) : Point(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

Point operator*(double s, const Point& a) {
  return a.dim() == 2 ? Point(s * a[0], s * a[1]) : Point(s * a[0], s * a[1], s * a[2]);
}

double dot(const Point& a, const Point& b) {
  double acc = 0.0;
  for (int i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double distance(const Point& a, const Point& b) {
  double acc = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e > 0.0 && e < 1.0)) throw Error(ErrorCode::InvalidParams, "tolerance must lie in (0, 1)");
}

double metric_value(const Point& a, const Point& b, Metric m) {
  return m == Metric::Distance ? distance(a, b) : dot(a, b);
}

bool edge_satisfied(const Point& x, const Point& y, Metric mode, double w, const Tolerance& tol) {
  require_same_dim(x, y);
  return tol.within(metric_value(x, y, mode), w);
}

Line2 alpha_line(const Point& p, double alpha, const Tolerance& tol) {
  if (p.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "alpha-lines are planar");
  require_nonzero_weight(alpha);
  require_off_origin(p, tol);
  const double n2 = dot(p, p);
  const double len = std::sqrt(n2);
  // Foot of the perpendicular from the origin: the point of the line on the radial line.
  return {(alpha / n2) * p, Point(-p.y() / len, p.x() / len)};
}

LinePairClass classify_alpha_lines(const Point& p, double alpha, const Point& r, double beta,
                                   const Tolerance& tol) {
  if (p.dim() != 2 || r.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "alpha-lines are planar");
  require_nonzero_weight(alpha);
  require_nonzero_weight(beta);
  require_off_origin(p, tol);
  require_off_origin(r, tol);

  const Point ar = alpha * r;
  const Point bp = beta * p;
  if (norm(ar - bp) <= tol.eps * std::max(norm(ar), norm(bp))) {
    return lines::Coincident{alpha_line(p, alpha, tol)};
  }

  const double det = p.x() * r.y() - p.y() * r.x();
  if (std::abs(det) <= tol.eps * norm(p) * norm(r)) return lines::ParallelDisjoint{};

  return lines::UniquePoint{Point((alpha * r.y() - beta * p.y()) / det, (beta * p.x() - alpha * r.x()) / det)};
}

Intersection circle_circle(const Point& c1, double r1, const Point& c2, double r2, const Tolerance& tol) {
  if (c1.dim() != 2 || c2.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "circles are planar");
  require_positive_radius(r1);
  require_positive_radius(r2);

  Intersection out;
  const double scale = std::max({1.0, r1, r2});
  const double d = distance(c1, c2);
  const double slack = tol.eps * scale;

  if (d <= slack) {
    if (std::abs(r1 - r2) <= slack) out.kind = Intersection::Kind::Coincident;
    return out;
  }
  if (d > r1 + r2 + slack || d < std::abs(r1 - r2) - slack) return out;

  const Point u = (1.0 / d) * (c2 - c1);
  const Point perp(-u.y(), u.x());
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);

  // Externally or internally tangent: report the single contact point.
  if (std::abs(d - (r1 + r2)) <= slack || std::abs(d - std::abs(r1 - r2)) <= slack) {
    out.points.push_back(c1 + a * u);
    return out;
  }
  const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
  const Point base = c1 + a * u;
  out.points.push_back(base + h * perp);
  out.points.push_back(base - h * perp);
  return out;
}

Intersection sphere_triple(const std::array<Point, 3>& centers, const std::array<double, 3>& radii,
                           const Tolerance& tol) {
  for (const auto& c : centers) {
    if (c.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "spheres live in 3D");
  }
  for (double r : radii) require_positive_radius(r);

  const double scale = std::max({1.0, radii[0], radii[1], radii[2]});
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (distance(centers[i], centers[j]) <= tol.eps * scale) {
        throw Error(ErrorCode::DuplicateCenters, "sphere centers coincide");
      }
    }
  }

  // Work relative to the first center: |y|^2 = r1^2 and 2 d_i . y = b_i.
  const Point& c1 = centers[0];
  const Point d2 = centers[1] - c1;
  const Point d3 = centers[2] - c1;
  const double r1 = radii[0];
  const double b2 = dot(d2, d2) + r1 * r1 - radii[1] * radii[1];
  const double b3 = dot(d3, d3) + r1 * r1 - radii[2] * radii[2];
  const double r1sq_slack = 2.0 * tol.eps * scale * scale;

  Intersection out;
  const Point n = cross(d2, d3);
  const double nn = norm(n);
  if (nn <= tol.eps * norm(d2) * norm(d3)) {
    // Collinear centers: both radical planes are perpendicular to the common axis.
    const Point u = (1.0 / norm(d2)) * d2;
    const double a2 = b2 / (2.0 * dot(d2, u));
    const double a3 = b3 / (2.0 * dot(d3, u));
    if (std::abs(a2 - a3) > tol.eps * scale) return out;
    const double a = 0.5 * (a2 + a3);
    const double rho2 = r1 * r1 - a * a;
    if (rho2 < -r1sq_slack) return out;
    const Point center = c1 + a * u;
    if (rho2 <= r1sq_slack) {
      out.points.push_back(center);
      return out;
    }
    out.kind = Intersection::Kind::InfiniteCircle;
    out.circle_center = center;
    out.circle_normal = u;
    out.circle_radius = std::sqrt(rho2);
    return out;
  }

  // Solve the 2x2 Gram system for the in-plane part y0 = s d2 + t d3.
  const double g11 = dot(d2, d2);
  const double g12 = dot(d2, d3);
  const double g22 = dot(d3, d3);
  const double det = g11 * g22 - g12 * g12;
  const double s = (0.5 * b2 * g22 - 0.5 * b3 * g12) / det;
  const double t = (0.5 * b3 * g11 - 0.5 * b2 * g12) / det;
  const Point y0 = s * d2 + t * d3;
  const double z2 = r1 * r1 - dot(y0, y0);
  if (z2 < -r1sq_slack) return out;
  const Point base = c1 + y0;
  if (z2 <= r1sq_slack) {
    out.points.push_back(base);
    return out;
  }
  const Point unit_n = (1.0 / nn) * n;
  const double z = std::sqrt(z2);
  out.points.push_back(base + z * unit_n);
  out.points.push_back(base - z * unit_n);
  return out;
}

}  // namespace gconf
