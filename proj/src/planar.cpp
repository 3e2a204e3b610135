#include "wulff/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wulff::planar {

namespace {

constexpr double kCollinearTol = 1e-12;

}  // namespace

std::vector<std::size_t> convex_hull(std::span<const PlanePoint> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const PlanePoint& a = points[i];
    const PlanePoint& b = points[j];
    return a.u < b.u || (a.u == b.u && (a.v < b.v || (a.v == b.v && i < j)));
  });
  if (order.size() < 3) return order;

  // Strict monotone chain first; a tolerant turn test here can pop the true
  // extreme point of a nearly collinear run whose sort order is noisy.
  auto left = [&](std::size_t o, std::size_t a, std::size_t b) {
    return orient(points[o], points[a], points[b]) > 0.0;
  };
  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && !left(hull[k - 2], hull[k - 1], idx)) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (std::size_t n = order.size() - 1; n-- > 0;) {
    const std::size_t idx = order[n];
    while (k >= lower && !left(hull[k - 2], hull[k - 1], idx)) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);

  // Then drop vertices lying within rounding distance of their neighbours'
  // chord. Left in, they become near-parallel constraint pairs downstream.
  double scale = 0.0;
  for (std::size_t i : hull) scale = std::max(scale, norm(points[i]));
  const double eps = kCollinearTol * std::max(scale, 1e-300);
  bool changed = true;
  while (changed && hull.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < hull.size() && hull.size() >= 3; ++i) {
      const PlanePoint& a = points[hull[(i + hull.size() - 1) % hull.size()]];
      const PlanePoint& b = points[hull[i]];
      const PlanePoint& c = points[hull[(i + 1) % hull.size()]];
      const double chord = norm(c - a);
      const bool flat = chord <= eps ? norm(b - a) <= eps : std::abs(cross(c - a, b - a)) <= eps * chord;
      if (flat) {
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  return hull;
}

HalfPlaneIntersection intersect_origin_halfplanes(std::span<const PlanePoint> normals) {
  const std::vector<std::size_t> hull = convex_hull(normals);
  if (hull.size() < 3) {
    throw GeometryError(ErrorCode::DegenerateIntersection,
                        "half-plane intersection is unbounded (fewer than 3 irredundant constraints)");
  }
  HalfPlaneIntersection out;
  out.vertices.reserve(hull.size());
  out.active = hull;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const PlanePoint& a = normals[hull[i]];
    const PlanePoint& b = normals[hull[(i + 1) % hull.size()]];
    const double det = cross(a, b);
    // The origin must be strictly inside every hull edge.
    if (!(det > kCollinearTol * norm(a) * norm(b))) {
      throw GeometryError(ErrorCode::DegenerateIntersection,
                          "half-plane intersection is unbounded (origin not inside the dual hull)");
    }
    out.vertices.push_back({(b.v - a.v) / det, (a.u - b.u) / det});
  }
  // The vertex between constraints i and i+1 belongs to the edge of i+1 going
  // forward; rotate so vertex k starts edge `active[k]`.
  std::rotate(out.vertices.rbegin(), out.vertices.rbegin() + 1, out.vertices.rend());

  std::vector<bool> used(normals.size(), false);
  for (std::size_t i : hull) used[i] = true;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (!used[i]) out.redundant.push_back(i);
  return out;
}

double point_segment_distance(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
  const PlanePoint ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + ab * t));
}

}  // namespace wulff::planar
