#include "wulff/spherical_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "wulff/planar.hpp"
#include "wulff/tolerances.hpp"

namespace wulff {

namespace {

constexpr double kHemisphereMargin = 1e-9;
constexpr double kVertexMatchTol = 1e-9;
constexpr int kSelfDualPoles = 256;

// A pole w with p·w > kHemisphereMargin for every point. Starts from `start`
// (usually the centroid) and falls back to perceptron updates, which
// terminate whenever the points lie in an open hemisphere.
SPoint witness_or_throw(std::span<const SPoint> points, Vec3 start, ErrorCode code) {
  const double start_len = norm(start);
  Vec3 w = start_len > 1e-12 ? start / start_len : points.front().vec();
  for (int it = 0; it < 100000; ++it) {
    const double len = norm(w);
    if (!(len > 1e-12)) break;
    const Vec3 u = w / len;
    const SPoint* worst = nullptr;
    double lowest = std::numeric_limits<double>::infinity();
    for (const SPoint& p : points) {
      const double s = dot(p.vec(), u);
      if (s < lowest) {
        lowest = s;
        worst = &p;
      }
    }
    if (lowest > 1e3 * kHemisphereMargin) return SPoint(u);
    w += worst->vec();
  }
  throw GeometryError(code, "points do not lie in an open hemisphere");
}

Vec3 vector_sum(std::span<const SPoint> points) {
  Vec3 sum;
  for (const SPoint& p : points) sum += p.vec();
  return sum;
}

SPoint centroid_or_throw(std::span<const SPoint> points, ErrorCode code) {
  return witness_or_throw(points, vector_sum(points), code);
}

SphericalPolygon hull_with_witness(std::span<const SPoint> points, const SPoint& w) {
  const GnomonicFrame frame(w);
  std::vector<PlanePoint> image;
  image.reserve(points.size());
  for (const SPoint& p : points) image.push_back(frame.project(p, kHemisphereMargin));
  const std::vector<std::size_t> hull = planar::convex_hull(image);
  if (hull.size() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "spherical convex hull has no interior");
  }
  std::vector<SPoint> verts;
  verts.reserve(hull.size());
  for (std::size_t i : hull) verts.push_back(points[i]);
  return SphericalPolygon(std::move(verts), w);
}

// Distance from p to the minor arc a→c whose great circle has unit normal n.
double point_arc_distance(const SPoint& p, const SPoint& a, const SPoint& c, const Vec3& n) {
  const double s = dot(p.vec(), n);
  const Vec3 foot = p.vec() - s * n;
  const double fn = norm(foot);
  if (fn > 1e-15) {
    const Vec3 f = foot / fn;
    if (dot(cross(a.vec(), f), n) >= 0.0 && dot(cross(f, c.vec()), n) >= 0.0) {
      return std::atan2(std::abs(s), fn);
    }
  }
  return std::min(arc_length(p, a), arc_length(p, c));
}

// Largest distance from p to a point of the minor arc a→c (normal n). Along a
// great circle the distance from p peaks where the circle comes closest to -p.
double farthest_on_arc(const SPoint& p, const SPoint& a, const SPoint& c, const Vec3& n) {
  double best = std::max(arc_length(p, a), arc_length(p, c));
  const Vec3 q = -p.vec();
  const Vec3 foot = q - dot(q, n) * n;
  const double fn = norm(foot);
  if (fn > 1e-15) {
    const Vec3 f = foot / fn;
    if (dot(cross(a.vec(), f), n) >= 0.0 && dot(cross(f, c.vec()), n) >= 0.0) {
      best = std::max(best, arc_length(p, SPoint(f)));
    }
  }
  return best;
}

// Vertices plus kArcGrid - 1 interior points per edge.
std::vector<SPoint> boundary_samples(const SphericalPolygon& b, int per_edge) {
  std::vector<SPoint> out;
  out.reserve(b.size() * static_cast<std::size_t>(per_edge));
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    const SPoint& a = b[i];
    const SPoint& c = b[(i + 1) % n];
    const double len = arc_length(a, c);
    out.push_back(a);
    for (int k = 1; k < per_edge; ++k) out.push_back(point_at_arc_length(a, c, len * k / per_edge));
  }
  return out;
}

double directed_hausdorff(const SphericalPolygon& from, const SphericalPolygon& to) {
  double h = 0.0;
  for (const SPoint& p : boundary_samples(from, kArcGrid)) h = std::max(h, signed_dist(to, p));
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// SphericalPolygon

SphericalPolygon::SphericalPolygon(std::vector<SPoint> vertices, std::optional<SPoint> witness)
    : vertices_(std::move(vertices)), witness_(SPoint::north()) {
  if (vertices_.size() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "spherical polygon needs at least 3 vertices");
  }
  witness_ = witness ? *witness : centroid_or_throw(vertices_, ErrorCode::NotHemispherical);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (dot(vertices_[i], witness_) <= kHemisphereMargin) {
      throw GeometryError(ErrorCode::NotHemispherical,
                          "vertex " + std::to_string(i) + " is not strictly inside H(witness)");
    }
  }

  // Convexity is checked in the gnomonic image, where arcs become segments.
  const GnomonicFrame frame(witness_);
  std::vector<PlanePoint> image;
  image.reserve(vertices_.size());
  for (const SPoint& v : vertices_) image.push_back(frame.project(v, kHemisphereMargin));
  double scale = 1.0;
  for (const PlanePoint& p : image) scale = std::max(scale, norm(p));

  bool changed = true;
  while (changed && image.size() >= 3) {
    changed = false;
    const std::size_t n = image.size();
    for (std::size_t i = 0; i < n; ++i) {
      const PlanePoint e0 = image[i] - image[(i + n - 1) % n];
      const PlanePoint e1 = image[(i + 1) % n] - image[i];
      const double l0 = norm(e0);
      const double l1 = norm(e1);
      bool drop = l0 <= 1e-12 * scale;
      if (!drop && l1 > 1e-12 * scale) {
        drop = std::abs(cross(e0, e1)) <= kAngTol * l0 * l1 && dot(e0, e1) > 0.0;
      }
      if (drop) {
        image.erase(image.begin() + static_cast<std::ptrdiff_t>(i));
        vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (vertices_.size() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "spherical polygon has no interior");
  }
  const std::size_t n = image.size();
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint e0 = image[i] - image[(i + n - 1) % n];
    const PlanePoint e1 = image[(i + 1) % n] - image[i];
    if (cross(e0, e1) <= kAngTol * norm(e0) * norm(e1)) {
      throw GeometryError(ErrorCode::InvalidInput,
                          "spherical polygon is not strictly convex and CCW at vertex " + std::to_string(i));
    }
    winding += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(winding - 2.0 * kPi) > 1e-6) {
    throw GeometryError(ErrorCode::InvalidInput, "spherical polygon winds more than once");
  }

  edge_poles_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edge_poles_.emplace_back(cross(vertices_[i], vertices_[(i + 1) % n]));
}

bool SphericalPolygon::contains(const SPoint& p, double tol) const {
  return std::all_of(edge_poles_.begin(), edge_poles_.end(),
                     [&](const SPoint& n) { return dot(n, p) >= -tol; });
}

// ---------------------------------------------------------------------------
// Lifting

SphericalPolygon lift_body(const ConvexPolygon& w) {
  if (!w.is_wulff_shape()) {
    throw GeometryError(ErrorCode::OriginNotInterior, "lifted Wulff shape must contain the origin");
  }
  std::vector<SPoint> verts;
  verts.reserve(w.size());
  for (const PlanePoint& p : w.vertices()) verts.push_back(lift_to_sphere(p));
  return SphericalPolygon(std::move(verts), SPoint::north());
}

ConvexPolygon project_body(const SphericalPolygon& b) {
  std::vector<PlanePoint> pts;
  pts.reserve(b.size());
  for (const SPoint& v : b.vertices()) {
    if (v.z() <= kHemisphereMargin) {
      throw GeometryError(ErrorCode::EquatorOrBelow, "body reaches the equator of H(N)");
    }
    pts.push_back(central_project(v));
  }
  return ConvexPolygon(std::move(pts));
}

SphericalPolygon rotate(const SphericalPolygon& b, const Rotation3& r) {
  std::vector<SPoint> verts;
  verts.reserve(b.size());
  for (const SPoint& v : b.vertices()) verts.push_back(r.apply(v));
  return SphericalPolygon(std::move(verts), r.apply(b.witness()));
}

// ---------------------------------------------------------------------------
// Hull and polar

SphericalPolygon s_conv(std::span<const SPoint> points) {
  if (points.empty()) throw GeometryError(ErrorCode::NotHemispherical, "empty point set");
  return hull_with_witness(points, centroid_or_throw(points, ErrorCode::NotHemispherical));
}

SphericalPolygon polar(const SphericalPolygon& b) {
  // Interior points of b are interior points of the polar's pole set.
  const auto poles = b.edge_poles();
  return hull_with_witness(poles, witness_or_throw(poles, vector_sum(b.vertices()), ErrorCode::NotHemispherical));
}

// ---------------------------------------------------------------------------
// Distances

double signed_dist(const SphericalPolygon& b, const SPoint& p) {
  const auto poles = b.edge_poles();
  const std::size_t n = poles.size();
  double depth = std::numeric_limits<double>::infinity();
  double outside = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = dot(poles[i], p);
    if (s < 0.0) {
      inside = false;
      outside = std::min(outside, point_arc_distance(p, b[i], b[(i + 1) % n], poles[i].vec()));
    } else if (inside) {
      // Distance to the great circle of edge i; for an interior point the
      // nearest boundary point lies on the nearest edge circle.
      depth = std::min(depth, std::asin(std::min(1.0, s)));
    }
  }
  return inside ? -depth : outside;
}

double hausdorff_spherical(const SphericalPolygon& a, const SphericalPolygon& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

// ---------------------------------------------------------------------------
// Supporting hemispheres and width

std::vector<SPoint> supporting_poles(const SphericalPolygon& b, int m) {
  if (m < 1) throw GeometryError(ErrorCode::InvalidInput, "need at least one supporting pole");
  const SphericalPolygon dual = polar(b);
  const std::size_t n = dual.size();
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) cumulative[i + 1] = cumulative[i] + arc_length(dual[i], dual[(i + 1) % n]);
  const double total = cumulative[n];

  std::vector<SPoint> out;
  out.reserve(static_cast<std::size_t>(m));
  std::size_t edge = 0;
  for (int k = 0; k < m; ++k) {
    const double s = total * k / m;
    while (edge + 1 < n && cumulative[edge + 1] <= s) ++edge;
    const double along = s - cumulative[edge];
    const double len = cumulative[edge + 1] - cumulative[edge];
    if (along <= kVertexMatchTol) {
      out.push_back(dual[edge]);
    } else if (len - along <= kVertexMatchTol) {
      out.push_back(dual[(edge + 1) % n]);
    } else {
      out.push_back(point_at_arc_length(dual[edge], dual[(edge + 1) % n], along));
    }
  }
  return out;
}

bool supports(const SphericalPolygon& b, const SPoint& p) {
  double lowest = std::numeric_limits<double>::infinity();
  for (const SPoint& v : b.vertices()) lowest = std::min(lowest, dot(v, p));
  return lowest >= -kAngTol && lowest <= std::sin(kSupportTol);
}

double width_at(const SphericalPolygon& b, const SPoint& p) {
  if (!supports(b, p)) {
    throw GeometryError(ErrorCode::NotSupporting, "H(p) does not support the body");
  }
  const double d = signed_dist(b, p);
  if (std::abs(d) <= kAngTol) return kHalfPi;  // p on the boundary
  // Outside at distance r: π/2 - r. Inside at depth r (d = -r): π/2 + r.
  return kHalfPi - d;
}

WidthReport width_report(const SphericalPolygon& b, int m, double target, double tol) {
  std::vector<SPoint> poles = supporting_poles(b, m);
  const auto edge_poles = b.edge_poles();
  const std::size_t n = edge_poles.size();
  for (std::size_t i = 0; i < n; ++i) {
    poles.push_back(edge_poles[i]);
    // Normal cone of vertex i spans the polar arc n_{i-1} -> n_i.
    poles.emplace_back(edge_poles[(i + n - 1) % n].vec() + edge_poles[i].vec());
  }

  WidthReport report;
  report.target = target;
  report.tol = tol;
  report.min_width = std::numeric_limits<double>::infinity();
  report.max_width = -std::numeric_limits<double>::infinity();
  double deviation = 0.0;
  report.samples.reserve(poles.size());
  for (const SPoint& p : poles) {
    const double w = width_at(b, p);
    report.samples.push_back({p, w});
    report.min_width = std::min(report.min_width, w);
    report.max_width = std::max(report.max_width, w);
    deviation = std::max(deviation, std::abs(w - target));
  }
  report.verdict = deviation <= tol;
  return report;
}

double diameter(const SphericalPolygon& b) {
  const std::size_t n = b.size();
  std::vector<Vec3> normals(n);
  for (std::size_t i = 0; i < n; ++i) normals[i] = b.edge_poles()[i].vec();

  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, arc_length(b[i], b[j]));
  // Two points of b lie more than π/2 apart only if two vertices do, and up
  // to π/2 the distance along an arc peaks at an endpoint. Past π/2 the
  // maximum may sit inside edges, so refine on the boundary grid.
  if (best <= kHalfPi) return best;
  for (const SPoint& p : boundary_samples(b, kArcGrid))
    for (std::size_t j = 0; j < n; ++j) best = std::max(best, farthest_on_arc(p, b[j], b[(j + 1) % n], normals[j]));
  return best;
}

SelfDualReport is_self_dual(const SphericalPolygon& b, double tol) {
  SelfDualReport report;
  report.gap = hausdorff_spherical(b, polar(b));
  report.self_dual = report.gap <= tol;
  report.widths = width_report(b, kSelfDualPoles, kHalfPi, tol);
  report.constant_width = report.widths.verdict;

  const double deviation =
      std::max(std::abs(report.widths.min_width - kHalfPi), std::abs(report.widths.max_width - kHalfPi));
  const double slack = kVerdictSlack * tol;
  if ((report.self_dual && deviation > slack) || (report.constant_width && report.gap > slack)) {
    std::ostringstream msg;
    msg << "polar gap " << report.gap << " and width deviation " << deviation << " disagree at tol " << tol;
    throw GeometryError(ErrorCode::VerdictMismatch, msg.str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Polytope type

PolytopeEnumeration vertex_enumeration(std::span<const SPoint> poles) {
  if (poles.size() < 3) {
    throw GeometryError(ErrorCode::EmptyOrLowerDimensional, "need at least 3 poles for an interior");
  }
  const SPoint w = centroid_or_throw(poles, ErrorCode::EmptyOrLowerDimensional);
  for (const SPoint& p : poles) {
    if (dot(p, w) <= kHemisphereMargin) {
      throw GeometryError(ErrorCode::EmptyOrLowerDimensional, "pole centroid is not an interior witness");
    }
  }
  // P·Q >= 0 with Q ∝ w + x e1 + y e2 becomes a·(x, y) <= 1.
  const GnomonicFrame frame(w);
  std::vector<PlanePoint> normals;
  normals.reserve(poles.size());
  for (const SPoint& p : poles) {
    const double h = dot(p, w);
    normals.push_back({-dot(p.vec(), frame.e1()) / h, -dot(p.vec(), frame.e2()) / h});
  }
  planar::HalfPlaneIntersection cut;
  try {
    cut = planar::intersect_origin_halfplanes(normals);
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorCode::EmptyOrLowerDimensional, e.what());
  }
  std::vector<SPoint> verts;
  verts.reserve(cut.vertices.size());
  for (const PlanePoint& x : cut.vertices) verts.push_back(frame.lift(x));
  return PolytopeEnumeration{SphericalPolygon(std::move(verts)), std::move(cut.active), std::move(cut.redundant)};
}

PolytopeCriterion polytope_selfdual_criterion(std::span<const SPoint> poles) {
  PolytopeEnumeration cut = vertex_enumeration(poles);
  if (!cut.redundant.empty()) {
    throw GeometryError(ErrorCode::RedundantPole,
                        "pole " + std::to_string(cut.redundant.front()) + " does not support an edge");
  }
  std::vector<double> offsets;
  offsets.reserve(poles.size());
  for (const SPoint& p : poles) {
    double d = std::numeric_limits<double>::infinity();
    for (const SPoint& v : cut.body.vertices()) d = std::min(d, arc_length(p, v));
    offsets.push_back(d);
  }
  const double worst = *std::max_element(offsets.begin(), offsets.end());
  const bool all_vertices = worst <= kVertexMatchTol;

  SelfDualReport self = is_self_dual(cut.body, kSelfDualTolExact);
  const bool disagree = (all_vertices && !self.self_dual) ||
                        (!all_vertices && self.self_dual && worst > kVerdictSlack * kSelfDualTolExact);
  if (disagree) {
    std::ostringstream msg;
    msg << "vertex criterion (max offset " << worst << ") disagrees with polar gap " << self.gap;
    throw GeometryError(ErrorCode::VerdictMismatch, msg.str());
  }
  return PolytopeCriterion{all_vertices, std::move(offsets), std::move(self), std::move(cut.body)};
}

}  // namespace wulff
