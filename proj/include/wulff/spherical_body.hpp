#pragma once

// Spherical convex bodies on S^2 represented as spherical polygons, and the
// width / polarity machinery that decides self-duality.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wulff/euclidean_wulff.hpp"
#include "wulff/spherical_core.hpp"

namespace wulff {

/// A hemispherical spherical convex polygon: CCW vertices (seen from outside
/// the sphere) joined by minor great-circle arcs.
///
/// Invariants checked on construction:
///  - every vertex has v·witness > 1e-9 (hemisphericity);
///  - the gnomonic image through the witness is a strictly convex CCW polygon;
///  - at least three non-collinear vertices.
/// The witness defaults to the normalized vertex centroid.
class SphericalPolygon {
 public:
  explicit SphericalPolygon(std::vector<SPoint> vertices, std::optional<SPoint> witness = std::nullopt);

  std::span<const SPoint> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const SPoint& operator[](std::size_t i) const { return vertices_[i]; }
  const SPoint& witness() const { return witness_; }

  /// n_i = (v_i × v_{i+1}) / ‖v_i × v_{i+1}‖; the body is ⋂ H(n_i).
  std::span<const SPoint> edge_poles() const { return edge_poles_; }

  /// Closed-body membership: n_i·p >= -tol for all i.
  bool contains(const SPoint& p, double tol = kAngTol) const;

 private:
  std::vector<SPoint> vertices_;
  SPoint witness_;
  std::vector<SPoint> edge_poles_;
};

struct WidthSample {
  SPoint pole;
  double width;
};

struct WidthReport {
  std::vector<WidthSample> samples;
  double min_width = 0.0;
  double max_width = 0.0;
  double target = 0.0;
  double tol = 0.0;
  bool verdict = false;  // max |width - target| <= tol
};

struct SelfDualReport {
  bool self_dual = false;       // polar test: gap <= tol
  double gap = 0.0;             // spherical Hausdorff(b, polar(b))
  bool constant_width = false;  // width test at target π/2
  WidthReport widths;
};

struct PolytopeEnumeration {
  SphericalPolygon body;
  std::vector<std::size_t> active;     // pole index per edge, CCW
  std::vector<std::size_t> redundant;  // poles not supporting an edge
};

struct PolytopeCriterion {
  bool poles_are_vertices = false;
  std::vector<double> pole_offsets;  // distance from each pole to the nearest vertex
  SelfDualReport self_duality;
  SphericalPolygon body;
};

/// α_N^{-1} ∘ Id applied to each vertex; witness N. Throws OriginNotInterior.
SphericalPolygon lift_body(const ConvexPolygon& w);

/// Id^{-1} ∘ α_N applied to each vertex. Throws EquatorOrBelow.
ConvexPolygon project_body(const SphericalPolygon& b);

SphericalPolygon rotate(const SphericalPolygon& b, const Rotation3& r);

/// Smallest spherical convex set containing the points, via gnomonic
/// projection through the normalized centroid. Throws NotHemispherical.
SphericalPolygon s_conv(std::span<const SPoint> points);

/// ⋂_{P ∈ b} H(P), realized as s_conv of the inward edge poles.
SphericalPolygon polar(const SphericalPolygon& b);

/// Negative depth inside, zero on the boundary, positive distance outside.
double signed_dist(const SphericalPolygon& b, const SPoint& p);

/// Spherical Hausdorff distance, sampled at vertices and kArcGrid points per edge.
double hausdorff_spherical(const SphericalPolygon& a, const SphericalPolygon& b);

/// m poles spaced uniformly by arc length along ∂polar(b), starting at a
/// polar vertex. Each H(P) supports b.
std::vector<SPoint> supporting_poles(const SphericalPolygon& b, int m);

/// True when b ⊆ H(p) and ∂H(p) touches b.
bool supports(const SphericalPolygon& b, const SPoint& p);

/// width_{H(p)} b by the outside / boundary / inside trichotomy:
/// π/2 - d, π/2, π/2 + |d| with d = signed_dist(b, p). Throws NotSupporting.
double width_at(const SphericalPolygon& b, const SPoint& p);

/// Widths at m sampled supporting poles plus the critical poles of the
/// polygon (edge poles of b and midpoints of its vertex normal cones).
WidthReport width_report(const SphericalPolygon& b, int m, double target, double tol);

/// max |PQ| over the body.
double diameter(const SphericalPolygon& b);

/// Polar-gap test cross-checked against constant width π/2. Throws
/// VerdictMismatch if one passes at tol while the other fails at 3·tol.
SelfDualReport is_self_dual(const SphericalPolygon& b, double tol);

/// ⋂ H(P_i) by half-plane intersection in the gnomonic plane of the pole
/// centroid. Throws EmptyOrLowerDimensional when no interior witness exists.
PolytopeEnumeration vertex_enumeration(std::span<const SPoint> poles);

/// Self-dual iff every P_i is a vertex of ⋂ H(P_i). Throws RedundantPole for
/// input not in irredundant form and VerdictMismatch if is_self_dual disagrees.
PolytopeCriterion polytope_selfdual_criterion(std::span<const SPoint> poles);

}  // namespace wulff
