#pragma once

// Parameterized constructors for the worked examples: the unit disc, tilted
// caps, constant-width π/2 spherical triangles, Reuleaux triangles and the
// regular 2m-gons whose dual is a rotated copy.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wulff/euclidean_wulff.hpp"
#include "wulff/spherical_body.hpp"

namespace wulff {

enum class CatalogKind { Disc, RotatedCap, OctantTriangle, Reuleaux, Regular2mGon, SquareA4 };

std::string_view to_string(CatalogKind kind);
std::optional<CatalogKind> parse_catalog_kind(std::string_view name);

struct CatalogEntryInfo {
  CatalogKind kind;
  std::string_view parameters;  // human-readable ranges for `catalog list`
};
const std::vector<CatalogEntryInfo>& catalog_entries();

struct CatalogSpec {
  CatalogKind kind = CatalogKind::Disc;
  int grid = 720;
  double angle = 0.0;           // rotated_cap / octant tilt, radians
  PlanePoint axis{0.0, 1.0};    // horizontal tilt axis
  double spin = 0.0;            // octant spin about N
  double width = 1.6;           // reuleaux
  PlanePoint offset{};          // reuleaux center offset
  int m = 2;                    // regular_2m_gon
  std::optional<double> a;      // circumradius; empty selects the self-dual radius cos(pi/2m)^(-1/2)
  double phase = 0.0;           // angle of vertex 0
};

struct CatalogShape {
  std::string provenance;
  ConvexPolygon planar;
  SphericalPolygon body;
};

/// Builds any catalog entry in both planar and lifted form. Throws
/// BodyLeavesHemisphere / OriginNotInterior / InvalidInput on bad parameters.
CatalogShape make_catalog(const CatalogSpec& spec);

/// build_wulff(γ ≡ 1).
ConvexPolygon make_disc(int grid);

/// Lift the disc, tilt S^2 by `angle` about the horizontal axis, project back.
/// Self-dual for every admissible angle. Requires |angle| < π/4.
ConvexPolygon make_rotated_cap(double angle, PlanePoint axis, int grid);

/// Rotation taking (1,1,1)/√3 to N and e1 to the half-plane y = 0, x > 0.
Rotation3 octant_to_north();

/// s_conv of R·{e1, e2, e3} followed by a spin about N.
SphericalPolygon make_octant_triangle(const Rotation3& rotation = octant_to_north(), double extra_spin = 0.0);

/// Support function of the Reuleaux triangle of the given width whose center
/// sits at `center_offset`; vertex 0 points along +y.
SupportFunction reuleaux_support(double width, PlanePoint center_offset, int grid);
ConvexPolygon make_reuleaux(double width, PlanePoint center_offset, int grid);

/// Positive root of sin((π - 2π/(2m))/2) = (1/a)/a, by bisection.
double solve_star_equation(int m);

/// Regular 2m-gon centered at the origin with circumradius a, vertex 0 at
/// angle `phase`. Built from exact vertices.
ConvexPolygon make_regular_2m_gon(int m, double a, double phase = 0.0);

/// h_w(θ_j) sampled on the grid (the gauge of a polygon as a Wulff shape).
SupportFunction polygon_gauge(const ConvexPolygon& w, int grid);

}  // namespace wulff
