#include "wulff/euclidean_wulff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "wulff/planar.hpp"
#include "wulff/tolerances.hpp"

namespace wulff {

namespace {

double max_norm(std::span<const PlanePoint> pts) {
  double m = 0.0;
  for (const PlanePoint& p : pts) m = std::max(m, norm(p));
  return m;
}

double diameter(std::span<const PlanePoint> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, norm(pts[i] - pts[j]));
  return d;
}

double normalize_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a = 0.0;
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// SupportFunction

SupportFunction::SupportFunction(std::vector<double> values, Preset preset)
    : values_(std::move(values)), preset_(preset) {
  if (values_.size() < 8) {
    throw GeometryError(ErrorCode::InvalidInput, "support function needs at least 8 samples, got " +
                                                     std::to_string(values_.size()));
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j]) || values_[j] <= 0.0) {
      std::ostringstream msg;
      msg << "support sample " << j << " is not strictly positive (value " << values_[j] << ")";
      throw GeometryError(ErrorCode::InvalidInput, msg.str());
    }
  }
}

SupportFunction SupportFunction::sample(int n_samples, const std::function<double(double)>& gamma,
                                        Preset preset) {
  if (n_samples < 8) {
    throw GeometryError(ErrorCode::InvalidInput, "support function needs at least 8 samples");
  }
  std::vector<double> values(static_cast<std::size_t>(n_samples));
  for (int j = 0; j < n_samples; ++j) values[j] = gamma(2.0 * kPi * j / n_samples);
  return SupportFunction(std::move(values), preset);
}

double SupportFunction::angle(std::size_t j) const {
  return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(values_.size());
}

// ---------------------------------------------------------------------------
// ConvexPolygon

ConvexPolygon::ConvexPolygon(std::vector<PlanePoint> vertices) : vertices_(std::move(vertices)) {
  for (const PlanePoint& p : vertices_) {
    if (!std::isfinite(p.u) || !std::isfinite(p.v)) {
      throw GeometryError(ErrorCode::InvalidInput, "polygon vertex is not finite");
    }
  }
  const double scale = std::max(1.0, max_norm(vertices_));

  // Drop duplicates and collinear vertices until the chain is stable.
  bool changed = true;
  while (changed && vertices_.size() >= 3) {
    changed = false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const PlanePoint& prev = vertices_[(i + n - 1) % n];
      const PlanePoint& cur = vertices_[i];
      const PlanePoint& next = vertices_[(i + 1) % n];
      const PlanePoint e0 = cur - prev;
      const PlanePoint e1 = next - cur;
      const double l0 = norm(e0);
      const double l1 = norm(e1);
      bool drop = l0 <= 1e-12 * scale;
      if (!drop && l1 > 1e-12 * scale) {
        const double s = cross(e0, e1) / (l0 * l1);
        if (std::abs(s) <= kAngTol && dot(e0, e1) > 0.0) drop = true;
      }
      if (drop) {
        vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (vertices_.size() < 3) {
    throw GeometryError(ErrorCode::InvalidInput, "polygon needs at least 3 non-collinear vertices");
  }

  const std::size_t n = vertices_.size();
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint e0 = vertices_[i] - vertices_[(i + n - 1) % n];
    const PlanePoint e1 = vertices_[(i + 1) % n] - vertices_[i];
    const double s = cross(e0, e1) / (norm(e0) * norm(e1));
    if (s <= kAngTol) {
      throw GeometryError(ErrorCode::InvalidInput,
                          "polygon is not strictly convex and CCW at vertex " + std::to_string(i));
    }
    winding += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(winding - 2.0 * kPi) > 1e-6) {
    throw GeometryError(ErrorCode::InvalidInput, "polygon winds more than once");
  }
}

double ConvexPolygon::origin_margin() const {
  double margin = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = vertices_[i];
    const PlanePoint e = vertices_[(i + 1) % n] - a;
    // Left of the edge is inside; cross(e, 0 - a) / |e| is the signed distance.
    margin = std::min(margin, cross(e, -a) / norm(e));
  }
  return margin;
}

bool ConvexPolygon::contains(const PlanePoint& p, double tol) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = vertices_[i];
    const PlanePoint e = vertices_[(i + 1) % n] - a;
    if (cross(e, p - a) < -tol * norm(e)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction and duality

ConvexPolygon build_wulff(const SupportFunction& gamma) {
  // x·θ_j <= γ_j  <=>  x·(θ_j/γ_j) <= 1.
  std::vector<PlanePoint> normals(gamma.size());
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    normals[j] = unit_direction(gamma.angle(j)) * (1.0 / gamma.value(j));
  }
  planar::HalfPlaneIntersection cut = planar::intersect_origin_halfplanes(normals);
  try {
    return ConvexPolygon(std::move(cut.vertices));
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorCode::DegenerateIntersection, e.what());
  }
}

double radial_width(const ConvexPolygon& w, double theta) {
  if (!w.is_wulff_shape()) {
    throw GeometryError(ErrorCode::OriginNotInterior, "radial function needs the origin strictly inside");
  }
  const PlanePoint dir = unit_direction(theta);
  const std::size_t n = w.size();
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = w[i];
    const PlanePoint e = w[(i + 1) % n] - a;
    const PlanePoint outward{e.v, -e.u};
    const double along = dot(outward, dir);
    if (along > 0.0) r = std::min(r, dot(outward, a) / along);
  }
  return r;
}

double support_value(const ConvexPolygon& w, double theta) {
  const PlanePoint dir = unit_direction(theta);
  double h = -std::numeric_limits<double>::infinity();
  for (const PlanePoint& v : w.vertices()) h = std::max(h, dot(v, dir));
  return h;
}

SupportFunction dual_support(const ConvexPolygon& w, int grid) {
  if (!w.is_wulff_shape()) {
    throw GeometryError(ErrorCode::OriginNotInterior, "dual Wulff shape needs the origin strictly inside");
  }
  return SupportFunction::sample(grid, [&](double theta) { return 1.0 / radial_width(w, theta + kPi); });
}

double dual_xcheck_tol(int grid) {
  const double ratio = static_cast<double>(kDefaultGrid) / static_cast<double>(grid);
  return kDualXcheckTol * ratio * ratio;
}

DualConstruction dual_constructions(const ConvexPolygon& w, int grid) {
  ConvexPolygon from_support = build_wulff(dual_support(w, grid));

  // inv(graph(h)): the sample (θ, h(θ)) inverts to -θ / h(θ).
  std::vector<PlanePoint> inverted(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    const double theta = 2.0 * kPi * j / grid;
    inverted[j] = invert_polar_plot(unit_direction(theta) * support_value(w, theta));
  }
  std::vector<PlanePoint> hull_pts;
  for (std::size_t idx : planar::convex_hull(inverted)) hull_pts.push_back(inverted[idx]);
  ConvexPolygon from_graph(std::move(hull_pts));

  const double gap = hausdorff_planar(from_support, from_graph);
  // The support route circumscribes DW and the hull route inscribes it. For a
  // smooth boundary both errors are O(grid^-2); a flat edge of DW whose normal
  // falls between grid directions adds up to (chord/2)·tan(π/grid) per side.
  const double tol = dual_xcheck_tol(grid) + std::tan(kPi / grid) * diameter(from_graph.vertices());
  return DualConstruction{std::move(from_support), std::move(from_graph), gap, tol};
}

ConvexPolygon dual_wulff(const ConvexPolygon& w, int grid) {
  DualConstruction both = dual_constructions(w, grid);
  if (both.discrepancy > both.tolerance) {
    std::ostringstream msg;
    msg << "dual constructions disagree: Hausdorff " << both.discrepancy << " > " << both.tolerance;
    throw GeometryError(ErrorCode::DualMismatch, msg.str());
  }
  return std::move(both.from_dual_support);
}

ConvexPolygon exact_dual(const ConvexPolygon& w) {
  if (!w.is_wulff_shape()) {
    throw GeometryError(ErrorCode::OriginNotInterior, "dual Wulff shape needs the origin strictly inside");
  }
  // W° = {y : y·v <= 1 for every vertex v}; DW = -W°.
  planar::HalfPlaneIntersection cut = planar::intersect_origin_halfplanes(w.vertices());
  return negate(ConvexPolygon(std::move(cut.vertices)));
}

// ---------------------------------------------------------------------------
// Comparison

double distance_to_polygon(const ConvexPolygon& w, const PlanePoint& p) {
  const std::size_t n = w.size();
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = w[i];
    const PlanePoint& b = w[(i + 1) % n];
    if (cross(b - a, p - a) < 0.0) {
      inside = false;
      best = std::min(best, planar::point_segment_distance(p, a, b));
    }
  }
  return inside ? 0.0 : best;
}

double hausdorff_planar(const ConvexPolygon& a, const ConvexPolygon& b) {
  double h = 0.0;
  for (const PlanePoint& p : a.vertices()) h = std::max(h, distance_to_polygon(b, p));
  for (const PlanePoint& p : b.vertices()) h = std::max(h, distance_to_polygon(a, p));
  return h;
}

ConvexPolygon rotate(const ConvexPolygon& w, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<PlanePoint> out;
  out.reserve(w.size());
  for (const PlanePoint& p : w.vertices()) out.push_back({c * p.u - s * p.v, s * p.u + c * p.v});
  return ConvexPolygon(std::move(out));
}

ConvexPolygon negate(const ConvexPolygon& w) {
  std::vector<PlanePoint> out;
  out.reserve(w.size());
  for (const PlanePoint& p : w.vertices()) out.push_back(-p);
  return ConvexPolygon(std::move(out));
}

namespace {

Congruence rotation_search(const ConvexPolygon& a, const ConvexPolygon& b, double tol) {
  // Any rotation realizing congruence maps the farthest vertex of b onto a
  // vertex of a, so aligning it with each vertex of a enumerates candidates.
  std::size_t far = 0;
  for (std::size_t j = 1; j < b.size(); ++j)
    if (norm(b[j]) > norm(b[far])) far = j;
  const double base = std::atan2(b[far].v, b[far].u);

  std::vector<double> candidates;
  candidates.reserve(a.size());
  for (const PlanePoint& p : a.vertices()) candidates.push_back(normalize_angle(std::atan2(p.v, p.u) - base));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                   candidates.end());

  auto residual = [&](double angle) { return hausdorff_planar(a, rotate(b, angle)); };

  Congruence best{false, 0.0, std::numeric_limits<double>::infinity()};
  const double tie = 1e-12 * std::max(1.0, max_norm(a.vertices()));
  for (double angle : candidates) {
    const double r = residual(angle);
    if (r < best.residual - tie) {
      best.angle = angle;
      best.residual = r;
    }
  }

  // Golden-section refinement within half a vertex spacing.
  const double half = kPi / static_cast<double>(std::max(a.size(), b.size()));
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best.angle - half;
  double hi = best.angle + half;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = residual(x1);
  double f2 = residual(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = residual(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = residual(x2);
    }
  }
  const double refined = 0.5 * (lo + hi);
  const double refined_residual = residual(refined);
  if (refined_residual < best.residual - tie) {
    best.angle = normalize_angle(refined);
    best.residual = refined_residual;
  }
  best.congruent = best.residual <= tol;
  return best;
}

// Mirror across the u-axis, reversed to stay counterclockwise.
ConvexPolygon mirror(const ConvexPolygon& w) {
  std::vector<PlanePoint> out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back({w[i].u, -w[i].v});
  return ConvexPolygon(std::move(out));
}

}  // namespace

Congruence congruent_up_to_rotation(const ConvexPolygon& a, const ConvexPolygon& b, double tol,
                                    bool allow_reflection) {
  Congruence best = rotation_search(a, b, tol);
  if (!allow_reflection || best.congruent) return best;
  Congruence flipped = rotation_search(a, mirror(b), tol);
  flipped.reflected = true;
  return flipped.residual < best.residual ? flipped : best;
}

bool is_centrally_symmetric(const ConvexPolygon& w, double tol) {
  return hausdorff_planar(w, negate(w)) <= tol;
}

std::vector<double> turning_angles(const ConvexPolygon& w) {
  const std::size_t n = w.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint e0 = w[i] - w[(i + n - 1) % n];
    const PlanePoint e1 = w[(i + 1) % n] - w[i];
    out[i] = std::atan2(cross(e0, e1), dot(e0, e1));
  }
  return out;
}

}  // namespace wulff
