#include <algorithm>
#include <cmath>

#include "gconf/counting.hpp"

namespace gconf {

namespace {

// Below these conditioning levels the pinned point is not trusted and the
// shortest adjacency list is filtered instead.
constexpr double kMinCrossingSine = 1e-4;
constexpr double kMinLineSine = 1e-6;
constexpr double kMinAnchorNorm = 1e-6;

bool satisfies_all(const PointSet& e, Metric mode, const Tolerance& tol, std::uint32_t x,
                   std::span<const Anchor> anchors) {
  return std::all_of(anchors.begin(), anchors.end(), [&](const Anchor& a) {
    return edge_satisfied(e[x], e[a.point], mode, a.weight, tol);
  });
}

std::vector<std::uint32_t> filter_shortest(const PointSet& e, Metric mode, const Tolerance& tol,
                                           const Neighborhoods& nbhd, std::span<const Anchor> anchors) {
  const std::vector<std::uint32_t>* shortest = nullptr;
  for (const Anchor& a : anchors) {
    const auto& list = nbhd.of(a.point, a.weight);
    if (shortest == nullptr || list.size() < shortest->size()) shortest = &list;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t x : *shortest) {
    if (satisfies_all(e, mode, tol, x, anchors)) out.push_back(x);
  }
  return out;
}

// Points of E within `radius` of any seed point that satisfy every anchor.
std::vector<std::uint32_t> screen(const PointSet& e, Metric mode, const Tolerance& tol, const PointLocator& locator,
                                  const std::vector<Point>& seeds, double radius, std::span<const Anchor> anchors) {
  std::vector<std::uint32_t> out;
  for (const Point& q : seeds) {
    for (std::uint32_t x : locator.near(q, radius)) {
      if (satisfies_all(e, mode, tol, x, anchors)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double scale_of(std::initializer_list<double> values) {
  double s = 1.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

std::optional<std::vector<std::uint32_t>> pin_two_circles(const PointSet& e, const Tolerance& tol,
                                                          const PointLocator& locator,
                                                          std::span<const Anchor> anchors) {
  const Point& c1 = e[anchors[0].point];
  const Point& c2 = e[anchors[1].point];
  const double r1 = anchors[0].weight;
  const double r2 = anchors[1].weight;
  if (!(r1 > 0.0 && r2 > 0.0)) return std::nullopt;

  const double scale = scale_of({norm(c1), norm(c2), r1, r2});
  const double d = distance(c1, c2);
  const double band = tol.slack(r1) + tol.slack(r2);
  const double margin = 4.0 * band + 1e-13 * scale;
  if (d <= margin) return std::nullopt;
  // Any common point would force |r1 - r2| - band <= d <= r1 + r2 + band.
  if (d > r1 + r2 + margin || d < std::abs(r1 - r2) - margin) return std::vector<std::uint32_t>{};

  const Intersection hit = circle_circle(c1, r1, c2, r2, tol);
  if (hit.kind != Intersection::Kind::Points || hit.points.size() != 2) return std::nullopt;
  const Point& q = hit.points[0];
  const Point a = q - c1;
  const Point b = q - c2;
  const double sine = std::abs(a.x() * b.y() - a.y() * b.x()) / (r1 * r2);
  if (sine < kMinCrossingSine) return std::nullopt;
  const double radius = (8.0 * band + 1e-10 * scale) / sine;
  return screen(e, Metric::Distance, tol, locator, hit.points, radius, anchors);
}

std::optional<std::vector<std::uint32_t>> pin_two_lines(const PointSet& e, const Tolerance& tol,
                                                        const PointLocator& locator,
                                                        std::span<const Anchor> anchors) {
  const Point& p = e[anchors[0].point];
  const Point& r = e[anchors[1].point];
  const double np = norm(p);
  const double nr = norm(r);
  if (np < kMinAnchorNorm || nr < kMinAnchorNorm) return std::nullopt;

  const LinePairClass cls = classify_alpha_lines(p, anchors[0].weight, r, anchors[1].weight, tol);
  // Coincident lines (a whole fiber) and parallel pairs use the filtered list.
  const auto* unique = std::get_if<lines::UniquePoint>(&cls);
  if (unique == nullptr) return std::nullopt;

  const double sine = std::abs(p.x() * r.y() - p.y() * r.x()) / (np * nr);
  if (sine < kMinLineSine) return std::nullopt;
  const double half_widths = tol.slack(anchors[0].weight) / np + tol.slack(anchors[1].weight) / nr;
  const double radius = (8.0 * half_widths + 1e-12 * (1.0 + norm(unique->q))) / sine;
  return screen(e, Metric::DotProduct, tol, locator, {unique->q}, radius, anchors);
}

std::optional<std::vector<std::uint32_t>> pin_three_spheres(const PointSet& e, const Tolerance& tol,
                                                            const PointLocator& locator,
                                                            std::span<const Anchor> anchors) {
  std::array<Point, 3> centers;
  std::array<double, 3> radii{};
  double band = 0.0;
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) {
    centers[i] = e[anchors[i].point];
    radii[i] = anchors[i].weight;
    if (!(radii[i] > 0.0)) return std::nullopt;
    band += tol.slack(radii[i]);
    scale = std::max({scale, norm(centers[i]), radii[i]});
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (distance(centers[i], centers[j]) <= 1e-6 * scale) return std::nullopt;
    }
  }
  const Intersection hit = sphere_triple(centers, radii, tol);
  if (hit.kind != Intersection::Kind::Points || hit.points.empty()) return std::nullopt;

  double worst_det = std::numeric_limits<double>::infinity();
  for (const Point& q : hit.points) {
    std::array<Point, 3> rows;
    for (int i = 0; i < 3; ++i) {
      const Point d = q - centers[i];
      const double len = norm(d);
      if (len == 0.0) return std::nullopt;
      rows[i] = (1.0 / len) * d;
    }
    worst_det = std::min(worst_det, std::abs(dot(rows[0], cross(rows[1], rows[2]))));
  }
  if (worst_det < kMinCrossingSine) return std::nullopt;
  const double radius = (16.0 * band + 1e-10 * scale) / worst_det;
  return screen(e, Metric::Distance, tol, locator, hit.points, radius, anchors);
}

}  // namespace

std::vector<std::uint32_t> candidates(const PointSet& e, Metric mode, const Tolerance& tol,
                                      const Neighborhoods& nbhd, const PointLocator& locator,
                                      std::span<const Anchor> anchors) {
  if (anchors.empty()) {
    std::vector<std::uint32_t> all(e.size());
    for (std::uint32_t i = 0; i < e.size(); ++i) all[i] = i;
    return all;
  }
  if (anchors.size() == 1) return nbhd.of(anchors[0].point, anchors[0].weight);

  std::optional<std::vector<std::uint32_t>> pinned;
  if (e.dim() == 2) {
    pinned = mode == Metric::Distance ? pin_two_circles(e, tol, locator, anchors)
                                      : pin_two_lines(e, tol, locator, anchors);
  } else if (mode == Metric::Distance && anchors.size() >= 3) {
    pinned = pin_three_spheres(e, tol, locator, anchors);
  }
  if (pinned) return *pinned;
  return filter_shortest(e, mode, tol, nbhd, anchors);
}

}  // namespace gconf
