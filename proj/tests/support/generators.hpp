#pragma once

// Seeded generators for property tests. Everything is deterministic given the
// rng, so failures reproduce from the seed printed by the test.

#include <cmath>
#include <random>
#include <vector>

#include "wulff/catalog.hpp"
#include "wulff/euclidean_wulff.hpp"
#include "wulff/planar.hpp"
#include "wulff/spherical_body.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline wulff::SPoint random_direction(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    const wulff::Vec3 v{g(rng), g(rng), g(rng)};
    if (wulff::norm(v) > 1e-6) return wulff::SPoint(v);
  }
}

inline wulff::Rotation3 random_rotation(Rng& rng) {
  return wulff::Rotation3::about_axis(random_direction(rng).vec(), uniform(rng, -wulff::kPi, wulff::kPi));
}

/// Uniform-ish point within angular radius r of c.
inline wulff::SPoint point_in_cap(Rng& rng, const wulff::SPoint& c, double r) {
  const wulff::GnomonicFrame f(c);
  const double rho = std::tan(r * std::sqrt(uniform(rng, 0.0, 1.0)));
  const double phi = uniform(rng, 0.0, 2.0 * wulff::kPi);
  return f.lift({rho * std::cos(phi), rho * std::sin(phi)});
}

inline std::vector<wulff::SPoint> cap_points(Rng& rng, const wulff::SPoint& c, double r, int count) {
  std::vector<wulff::SPoint> pts;
  for (int i = 0; i < count; ++i) pts.push_back(point_in_cap(rng, c, r));
  return pts;
}

/// s_conv of 3..max_pts random points in a cap of radius in [r_lo, r_hi].
inline wulff::SphericalPolygon random_body(Rng& rng, double r_lo = 0.2, double r_hi = 1.2, int max_pts = 12,
                                          bool upper = false) {
  for (;;) {
    const wulff::SPoint c = upper ? point_in_cap(rng, wulff::SPoint::north(), 0.3) : random_direction(rng);
    const double r = uniform(rng, r_lo, r_hi);
    const int count = std::uniform_int_distribution<int>(3, max_pts)(rng);
    try {
      return wulff::s_conv(cap_points(rng, c, r, count));
    } catch (const wulff::GeometryError&) {
      // collinear or too few hull points; draw again
    }
  }
}

/// Regular spherical n-gon (n odd) around N with tan²R = 1/cos(π/n): constant
/// width π/2, hence self-dual.
inline wulff::SphericalPolygon self_dual_odd_gon(int n, double phase = 0.0) {
  const double t = std::sqrt(1.0 / std::cos(wulff::kPi / n));
  std::vector<wulff::SPoint> v;
  for (int k = 0; k < n; ++k) {
    const double a = phase + 2.0 * wulff::kPi * k / n;
    v.push_back(wulff::lift_to_sphere({t * std::cos(a), t * std::sin(a)}));
  }
  return wulff::SphericalPolygon(std::move(v));
}

/// Positive trigonometric support function: c0 + translation + mild harmonics.
inline wulff::SupportFunction random_support(Rng& rng, int grid) {
  const double c0 = uniform(rng, 0.6, 1.6);
  const double x0 = uniform(rng, -0.25, 0.25) * c0;
  const double y0 = uniform(rng, -0.25, 0.25) * c0;
  std::vector<double> a(5), b(5);
  for (int k = 2; k <= 4; ++k) {
    a[k] = uniform(rng, -0.04, 0.04) * c0;
    b[k] = uniform(rng, -0.04, 0.04) * c0;
  }
  return wulff::SupportFunction::sample(grid, [&](double t) {
    double h = c0 + x0 * std::cos(t) + y0 * std::sin(t);
    for (int k = 2; k <= 4; ++k) h += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
    return h;
  });
}

/// Random convex polygon containing the origin: hull of points on a jittered
/// circle, optionally symmetrized.
inline wulff::ConvexPolygon random_polygon(Rng& rng, int count, bool symmetric = false) {
  for (;;) {
    std::vector<wulff::PlanePoint> pts;
    const double scale = uniform(rng, 0.5, 1.8);
    for (int i = 0; i < count; ++i) {
      const double t = uniform(rng, 0.0, 2.0 * wulff::kPi);
      const wulff::PlanePoint p = wulff::unit_direction(t) * (scale * uniform(rng, 0.6, 1.0));
      pts.push_back(p);
      if (symmetric) pts.push_back(-p);
    }
    std::vector<wulff::PlanePoint> hull;
    for (std::size_t i : wulff::planar::convex_hull(pts)) hull.push_back(pts[i]);
    if (hull.size() < 3) continue;
    wulff::ConvexPolygon w(std::move(hull));
    if (w.origin_margin() > 0.05) return w;
  }
}

}  // namespace gen
