#include "wulff/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wulff {

namespace {

constexpr double kEquatorMargin = 1e-9;

std::string fmt_double(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

double wrapped_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return d > kPi ? 2.0 * kPi - d : d;
}

}  // namespace

std::string_view to_string(CatalogKind kind) {
  switch (kind) {
    case CatalogKind::Disc: return "disc";
    case CatalogKind::RotatedCap: return "rotated_cap";
    case CatalogKind::OctantTriangle: return "octant_triangle";
    case CatalogKind::Reuleaux: return "reuleaux";
    case CatalogKind::Regular2mGon: return "regular_2m_gon";
    case CatalogKind::SquareA4: return "square_a4";
  }
  return "unknown";
}

std::optional<CatalogKind> parse_catalog_kind(std::string_view name) {
  for (const CatalogEntryInfo& e : catalog_entries())
    if (to_string(e.kind) == name) return e.kind;
  if (name == "octant") return CatalogKind::OctantTriangle;
  return std::nullopt;
}

const std::vector<CatalogEntryInfo>& catalog_entries() {
  static const std::vector<CatalogEntryInfo> entries = {
      {CatalogKind::Disc, "grid>=8 (default 720)"},
      {CatalogKind::RotatedCap, "angle in (-pi/4, pi/4), axis=u,v (default 0,1), grid>=8"},
      {CatalogKind::OctantTriangle, "spin any, angle (tilt) small enough to stay above the equator, axis=u,v"},
      {CatalogKind::Reuleaux, "width>0 (default 1.6), offset=u,v keeping the origin inside, grid>=8"},
      {CatalogKind::Regular2mGon, "m>=2, a>1 or star=true for the self-dual radius, phase any"},
      {CatalogKind::SquareA4, "phase any; the square with a^2 = sqrt(2)"},
  };
  return entries;
}

ConvexPolygon make_disc(int grid) {
  return build_wulff(SupportFunction::sample(grid, [](double) { return 1.0; }, SupportFunction::Preset::Disc));
}

ConvexPolygon make_rotated_cap(double angle, PlanePoint axis, int grid) {
  if (!(std::abs(angle) < kPi / 4.0)) {
    throw GeometryError(ErrorCode::BodyLeavesHemisphere, "cap tilt must satisfy |angle| < pi/4");
  }
  const Rotation3 r = Rotation3::about_axis({axis.u, axis.v, 0.0}, angle);
  const SphericalPolygon tilted = rotate(lift_body(make_disc(grid)), r);
  for (const SPoint& v : tilted.vertices()) {
    if (v.z() <= kEquatorMargin) {
      throw GeometryError(ErrorCode::BodyLeavesHemisphere, "tilted cap reaches the equator");
    }
  }
  return project_body(tilted);
}

Rotation3 octant_to_north() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  return Rotation3({{{2.0 / s6, -1.0 / s6, -1.0 / s6}, {0.0, 1.0 / s2, -1.0 / s2}, {1.0 / s3, 1.0 / s3, 1.0 / s3}}});
}

SphericalPolygon make_octant_triangle(const Rotation3& rotation, double extra_spin) {
  const Rotation3 r = Rotation3::about_axis({0.0, 0.0, 1.0}, extra_spin) * rotation;
  std::vector<SPoint> frame = {r.apply(SPoint(1, 0, 0)), r.apply(SPoint(0, 1, 0)), r.apply(SPoint(0, 0, 1))};
  for (const SPoint& v : frame) {
    if (v.z() <= kEquatorMargin) {
      throw GeometryError(ErrorCode::BodyLeavesHemisphere, "rotated octant triangle reaches the equator");
    }
  }
  return s_conv(frame);
}

SupportFunction reuleaux_support(double width, PlanePoint center_offset, int grid) {
  if (!(width > 0.0)) throw GeometryError(ErrorCode::InvalidInput, "Reuleaux width must be positive");
  const double circumradius = width / std::sqrt(3.0);
  std::array<PlanePoint, 3> corners;
  std::array<double, 3> corner_dir;
  for (int k = 0; k < 3; ++k) {
    corner_dir[k] = kPi / 2.0 + 2.0 * kPi * k / 3.0;
    corners[k] = center_offset + unit_direction(corner_dir[k]) * circumradius;
  }
  auto h = [&](double theta) {
    const PlanePoint u = unit_direction(theta);
    double best = -1e300;
    for (int k = 0; k < 3; ++k) {
      best = std::max(best, dot(corners[k], u));
      // The arc centered at corner k faces away from it and spans ±π/6.
      if (wrapped_gap(theta, corner_dir[k] + kPi) <= kPi / 6.0) best = std::max(best, dot(corners[k], u) + width);
    }
    return best;
  };
  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    values[j] = h(2.0 * kPi * j / grid);
    if (!(values[j] > 1e-9)) {
      throw GeometryError(ErrorCode::OriginNotInterior, "Reuleaux triangle does not contain the origin");
    }
  }
  return SupportFunction(std::move(values), SupportFunction::Preset::Reuleaux);
}

ConvexPolygon make_reuleaux(double width, PlanePoint center_offset, int grid) {
  return build_wulff(reuleaux_support(width, center_offset, grid));
}

double solve_star_equation(int m) {
  if (m < 2) throw GeometryError(ErrorCode::InvalidInput, "star equation needs m >= 2");
  const double lhs = std::sin((kPi - 2.0 * kPi / (2.0 * m)) / 2.0);
  auto f = [&](double a) { return lhs - (1.0 / a) / a; };  // increasing in a
  double lo = 1.0;
  double hi = 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  const double closed = std::sqrt(1.0 / std::cos(kPi / (2.0 * m)));
  if (std::abs(root - closed) > 1e-12) {
    throw std::logic_error("bisection root of the star equation disagrees with the closed form");
  }
  return root;
}

ConvexPolygon make_regular_2m_gon(int m, double a, double phase) {
  if (m < 2) throw GeometryError(ErrorCode::InvalidInput, "regular 2m-gon needs m >= 2");
  if (!(a > 1.0)) throw GeometryError(ErrorCode::InvalidInput, "regular 2m-gon needs circumradius a > 1");
  std::vector<PlanePoint> verts;
  verts.reserve(static_cast<std::size_t>(2 * m));
  for (int k = 0; k < 2 * m; ++k) verts.push_back(unit_direction(phase + kPi * k / m) * a);
  return ConvexPolygon(std::move(verts));
}

SupportFunction polygon_gauge(const ConvexPolygon& w, int grid) {
  return SupportFunction::sample(grid, [&](double theta) { return support_value(w, theta); },
                                 SupportFunction::Preset::PolygonGauge);
}

CatalogShape make_catalog(const CatalogSpec& spec) {
  std::ostringstream prov;
  prov << "catalog:" << to_string(spec.kind);
  switch (spec.kind) {
    case CatalogKind::Disc: {
      prov << " grid=" << spec.grid;
      ConvexPolygon w = make_disc(spec.grid);
      SphericalPolygon b = lift_body(w);
      return {prov.str(), std::move(w), std::move(b)};
    }
    case CatalogKind::RotatedCap: {
      prov << " angle=" << fmt_double(spec.angle) << " axis=" << fmt_double(spec.axis.u) << ","
           << fmt_double(spec.axis.v) << " grid=" << spec.grid;
      ConvexPolygon w = make_rotated_cap(spec.angle, spec.axis, spec.grid);
      SphericalPolygon b = lift_body(w);
      return {prov.str(), std::move(w), std::move(b)};
    }
    case CatalogKind::OctantTriangle: {
      prov << " spin=" << fmt_double(spec.spin) << " angle=" << fmt_double(spec.angle);
      const Rotation3 tilt = Rotation3::about_axis({spec.axis.u, spec.axis.v, 0.0}, spec.angle);
      SphericalPolygon b = make_octant_triangle(tilt * Rotation3::about_axis({0, 0, 1}, spec.spin) * octant_to_north());
      ConvexPolygon w = project_body(b);
      return {prov.str(), std::move(w), std::move(b)};
    }
    case CatalogKind::Reuleaux: {
      prov << " width=" << fmt_double(spec.width) << " offset=" << fmt_double(spec.offset.u) << ","
           << fmt_double(spec.offset.v) << " grid=" << spec.grid;
      ConvexPolygon w = make_reuleaux(spec.width, spec.offset, spec.grid);
      SphericalPolygon b = lift_body(w);
      return {prov.str(), std::move(w), std::move(b)};
    }
    case CatalogKind::Regular2mGon:
    case CatalogKind::SquareA4: {
      const int m = spec.kind == CatalogKind::SquareA4 ? 2 : spec.m;
      const double a = spec.kind == CatalogKind::SquareA4 || !spec.a ? solve_star_equation(m) : *spec.a;
      prov << " m=" << m << " a=" << fmt_double(a) << " phase=" << fmt_double(spec.phase);
      ConvexPolygon w = make_regular_2m_gon(m, a, spec.phase);
      SphericalPolygon b = lift_body(w);
      return {prov.str(), std::move(w), std::move(b)};
    }
  }
  throw GeometryError(ErrorCode::InvalidInput, "unknown catalog kind");
}

}  // namespace wulff
