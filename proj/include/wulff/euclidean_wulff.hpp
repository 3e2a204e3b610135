#pragma once

// Planar Wulff shapes: construction from a sampled support function, the
// radial function, the dual Wulff shape and Euclidean comparison predicates.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wulff/spherical_core.hpp"

namespace wulff {

/// γ sampled on the uniform grid θ_j = 2πj/n.
class SupportFunction {
 public:
  enum class Preset { Custom, Disc, PolygonGauge, Reuleaux };

  /// Throws InvalidInput naming the first non-positive or non-finite sample,
  /// or when fewer than 8 samples are given.
  explicit SupportFunction(std::vector<double> values, Preset preset = Preset::Custom);

  static SupportFunction sample(int n_samples, const std::function<double(double)>& gamma,
                                Preset preset = Preset::Custom);

  std::size_t size() const { return values_.size(); }
  double angle(std::size_t j) const;
  double value(std::size_t j) const { return values_[j]; }
  std::span<const double> values() const { return values_; }
  Preset preset() const { return preset_; }

 private:
  std::vector<double> values_;
  Preset preset_;
};

/// Strictly convex polygon with CCW vertices. Construction drops duplicate and
/// collinear vertices and rejects reflex or clockwise chains.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<PlanePoint> vertices);

  std::span<const PlanePoint> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const PlanePoint& operator[](std::size_t i) const { return vertices_[i]; }

  /// Signed distance from the origin to the nearest edge line; positive when
  /// the origin is inside.
  double origin_margin() const;
  bool is_wulff_shape() const { return origin_margin() > 1e-9; }

  bool contains(const PlanePoint& p, double tol = 0.0) const;

 private:
  std::vector<PlanePoint> vertices_;
};

/// ⋂_j {x : x·θ_j <= γ_j}. Throws DegenerateIntersection if the numeric
/// intersection is empty or unbounded.
ConvexPolygon build_wulff(const SupportFunction& gamma);

/// The r > 0 with (r cos θ, r sin θ) on the boundary. Throws OriginNotInterior.
double radial_width(const ConvexPolygon& w, double theta);

/// h(θ) = max over vertices of v·θ.
double support_value(const ConvexPolygon& w, double theta);

/// γ̄(θ_j) = 1 / radial_width(w, θ_j + π).
SupportFunction dual_support(const ConvexPolygon& w, int grid);

/// Both routes to the dual Wulff shape, before the cross-check.
struct DualConstruction {
  ConvexPolygon from_dual_support;   // build_wulff(dual_support(w))
  ConvexPolygon from_inverted_graph; // conv(inv(graph(h_w))) on the grid
  double discrepancy;                // Hausdorff between the two
  double tolerance;                  // bound the discrepancy is checked against
};

DualConstruction dual_constructions(const ConvexPolygon& w, int grid);

/// DW: the dual-support route, cross-checked against the inverted-graph
/// hull. Throws DualMismatch if they disagree beyond dual_check_tolerance.
ConvexPolygon dual_wulff(const ConvexPolygon& w, int grid);

/// DW of a polygonal Wulff shape with no sampling: the negated polar of its
/// vertex set. Throws OriginNotInterior.
ConvexPolygon exact_dual(const ConvexPolygon& w);

/// kDualXcheckTol at grid 720, scaled as grid^-2.
double dual_xcheck_tol(int grid);

/// Symmetric Hausdorff distance. Exact for convex polygons: distance to a
/// convex set is convex, so its maximum over a polygon sits at a vertex.
double hausdorff_planar(const ConvexPolygon& a, const ConvexPolygon& b);

/// Distance from p to the polygon (0 inside).
double distance_to_polygon(const ConvexPolygon& w, const PlanePoint& p);

ConvexPolygon rotate(const ConvexPolygon& w, double angle);
ConvexPolygon negate(const ConvexPolygon& w);

struct Congruence {
  bool congruent = false;
  double angle = 0.0;     // a ≈ R(angle)·M·b, angle in [0, 2π)
  double residual = 0.0;  // Hausdorff(a, R(angle)·M·b)
  bool reflected = false; // M is the mirror (u, v) -> (u, -v) when set, else identity
};

/// Rotations about the origin; reflections through lines via the origin only
/// when allowed and no rotation matches. Translations are never considered.
Congruence congruent_up_to_rotation(const ConvexPolygon& a, const ConvexPolygon& b, double tol,
                                    bool allow_reflection = false);

bool is_centrally_symmetric(const ConvexPolygon& w, double tol);

/// Exterior angle at each vertex; sums to 2π.
std::vector<double> turning_angles(const ConvexPolygon& w);

}  // namespace wulff
