#pragma once

// JSON records for shapes and reports, and the deterministic SVG writer.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "json.hpp"

#include "wulff/euclidean_wulff.hpp"
#include "wulff/spherical_body.hpp"

namespace wulff {

/// {"kind": "polygon2" | "spolygon" | "support", ...}. Shapes are validated on
/// load by the in-memory constructors; failures name the offending field.
struct ShapeRecord {
  std::variant<ConvexPolygon, SphericalPolygon, SupportFunction> shape;
  std::string provenance;

  std::string_view kind() const;
};

ShapeRecord shape_from_json(const nlohmann::json& j);
nlohmann::json shape_to_json(const ShapeRecord& r);

/// Parse errors are reported as InvalidInput with the parser's line/column.
ShapeRecord read_shape(std::istream& in);
/// One JSON document, doubles in shortest round-trip form, trailing newline.
void write_shape(std::ostream& out, const ShapeRecord& r);

struct ReportRecord {
  bool self_dual = false;
  bool constant_width = false;
  double gap = 0.0;
  double min_width = 0.0;
  double max_width = 0.0;
  double diameter = 0.0;
  double tol = 0.0;
  int width_samples = 0;
  std::optional<bool> congruent_dual;  // planar input only
  std::optional<double> congruence_angle;
  std::optional<bool> congruence_reflected;
  std::string provenance;
};

nlohmann::json report_to_json(const ReportRecord& r);

enum class SvgStyle { Single, Overlay };

/// 800×800 canvas showing [-2.2, 2.2]² with y pointing up, coordinates
/// printed to 4 decimals, unit circle and origin as reference marks. Shapes
/// are drawn in order; Overlay draws the second one dashed.
std::string render_svg(std::span<const ConvexPolygon> shapes, SvgStyle style);

}  // namespace wulff
