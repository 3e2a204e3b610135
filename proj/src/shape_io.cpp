#include "wulff/shape_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace wulff {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  throw GeometryError(ErrorCode::InvalidInput, "field '" + field + "': " + what);
}

double number_at(const json& arr, std::size_t i, const std::string& field) {
  const json& x = arr.at(i);
  if (!x.is_number()) bad_field(field, "expected a number");
  const double d = x.get<double>();
  if (!std::isfinite(d)) bad_field(field, "not finite");
  return d;
}

const json& array_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad_field(name, "missing");
  if (!it->is_array()) bad_field(name, "expected an array");
  return *it;
}

std::vector<double> coords(const json& row, std::size_t dim, const std::string& field) {
  if (!row.is_array() || row.size() != dim) {
    bad_field(field, "expected an array of " + std::to_string(dim) + " numbers");
  }
  std::vector<double> out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k] = number_at(row, k, field);
  return out;
}

// Re-raise constructor failures with the record field attached.
template <class F>
auto validated(const char* field, F&& make) {
  try {
    return make();
  } catch (const GeometryError& e) {
    throw GeometryError(e.code(), std::string("field '") + field + "': " + e.what());
  }
}

std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

constexpr double kCanvas = 800.0;
constexpr double kWorld = 2.2;

PlanePoint to_canvas(const PlanePoint& p) {
  const double scale = kCanvas / (2.0 * kWorld);
  return {(p.u + kWorld) * scale, (kWorld - p.v) * scale};
}

std::string path_data(const ConvexPolygon& w) {
  std::ostringstream d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const PlanePoint c = to_canvas(w[i]);
    d << (i == 0 ? "M" : " L") << fixed4(c.u) << " " << fixed4(c.v);
  }
  d << " Z";
  return d.str();
}

}  // namespace

std::string_view ShapeRecord::kind() const {
  switch (shape.index()) {
    case 0: return "polygon2";
    case 1: return "spolygon";
    default: return "support";
  }
}

ShapeRecord shape_from_json(const json& j) {
  if (!j.is_object()) throw GeometryError(ErrorCode::InvalidInput, "shape record must be a JSON object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) bad_field("kind", "missing or not a string");
  const std::string kind = kind_it->get<std::string>();

  std::string provenance;
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_string()) bad_field("provenance", "expected a string");
    provenance = it->get<std::string>();
  }

  if (kind == "polygon2") {
    const json& rows = array_field(j, "vertices");
    std::vector<PlanePoint> verts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto c = coords(rows[i], 2, "vertices[" + std::to_string(i) + "]");
      verts.push_back({c[0], c[1]});
    }
    return {validated("vertices", [&] { return ConvexPolygon(std::move(verts)); }), provenance};
  }
  if (kind == "spolygon") {
    const json& rows = array_field(j, "vertices");
    std::vector<SPoint> verts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string field = "vertices[" + std::to_string(i) + "]";
      const auto c = coords(rows[i], 3, field);
      const double len = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
      if (std::abs(len - 1.0) > 1e-6) bad_field(field, "not a unit vector");
      verts.emplace_back(c[0], c[1], c[2]);
    }
    std::optional<SPoint> witness;
    if (auto it = j.find("witness"); it != j.end()) {
      const auto c = coords(*it, 3, "witness");
      witness = validated("witness", [&] { return SPoint(c[0], c[1], c[2]); });
    }
    return {validated("vertices", [&] { return SphericalPolygon(std::move(verts), witness); }), provenance};
  }
  if (kind == "support") {
    const json& rows = array_field(j, "values");
    auto n_it = j.find("n_samples");
    if (n_it == j.end() || !n_it->is_number_integer()) bad_field("n_samples", "missing or not an integer");
    if (n_it->get<long long>() != static_cast<long long>(rows.size())) {
      bad_field("n_samples", "does not match the length of values");
    }
    std::vector<double> values;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const json& x = rows[i];
      if (!x.is_number()) bad_field("values[" + std::to_string(i) + "]", "expected a number");
      values.push_back(x.get<double>());
    }
    return {validated("values", [&] { return SupportFunction(std::move(values)); }), provenance};
  }
  bad_field("kind", "unknown kind '" + kind + "'");
}

json shape_to_json(const ShapeRecord& r) {
  json j;
  j["kind"] = std::string(r.kind());
  if (!r.provenance.empty()) j["provenance"] = r.provenance;
  if (const auto* w = std::get_if<ConvexPolygon>(&r.shape)) {
    json rows = json::array();
    for (const PlanePoint& p : w->vertices()) rows.push_back({p.u, p.v});
    j["vertices"] = std::move(rows);
  } else if (const auto* b = std::get_if<SphericalPolygon>(&r.shape)) {
    json rows = json::array();
    for (const SPoint& p : b->vertices()) rows.push_back({p.x(), p.y(), p.z()});
    j["vertices"] = std::move(rows);
    const SPoint& c = b->witness();
    j["witness"] = {c.x(), c.y(), c.z()};
  } else {
    const auto& g = std::get<SupportFunction>(r.shape);
    j["n_samples"] = g.size();
    j["values"] = std::vector<double>(g.values().begin(), g.values().end());
  }
  return j;
}

ShapeRecord read_shape(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw GeometryError(ErrorCode::InvalidInput, e.what());
  }
  return shape_from_json(j);
}

void write_shape(std::ostream& out, const ShapeRecord& r) { out << shape_to_json(r).dump(2) << '\n'; }

json report_to_json(const ReportRecord& r) {
  json j;
  j["self_dual"] = r.self_dual;
  j["constant_width"] = r.constant_width;
  j["gap"] = r.gap;
  j["min_width"] = r.min_width;
  j["max_width"] = r.max_width;
  j["diameter"] = r.diameter;
  j["tolerances"] = {{"self_dual", r.tol}, {"width_samples", r.width_samples}};
  if (r.congruent_dual) j["congruent_dual"] = *r.congruent_dual;
  if (r.congruence_angle) j["congruence_angle"] = *r.congruence_angle;
  if (r.congruence_reflected) j["congruence_reflected"] = *r.congruence_reflected;
  if (!r.provenance.empty()) j["provenance"] = r.provenance;
  return j;
}

std::string render_svg(std::span<const ConvexPolygon> shapes, SvgStyle style) {
  static constexpr const char* kStroke[] = {"#1f4e99", "#b22222", "#2e7d32", "#6a1b9a"};
  static constexpr const char* kLabel[] = {"P", "Q", "R", "S"};

  std::ostringstream svg;
  const PlanePoint o = to_canvas({0.0, 0.0});
  const double unit = kCanvas / (2.0 * kWorld);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n"
      << "<circle cx=\"" << fixed4(o.u) << "\" cy=\"" << fixed4(o.v) << "\" r=\"" << fixed4(unit)
      << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n"
      << "<path d=\"M" << fixed4(o.u - 6) << " " << fixed4(o.v) << " L" << fixed4(o.u + 6) << " " << fixed4(o.v)
      << " M" << fixed4(o.u) << " " << fixed4(o.v - 6) << " L" << fixed4(o.u) << " " << fixed4(o.v + 6)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const ConvexPolygon& w = shapes[s];
    const char* stroke = kStroke[s % 4];
    const bool dashed = style == SvgStyle::Overlay && s % 2 == 1;
    svg << "<path d=\"" << path_data(w) << "\" fill=\"" << stroke << "\" fill-opacity=\"0.12\" stroke=\"" << stroke
        << "\" stroke-width=\"2\"" << (dashed ? " stroke-dasharray=\"8 4\"" : "") << "/>\n";
    if (w.size() > 12) continue;
    // Vertex labels, pushed away from the origin.
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double r = norm(w[i]);
      const PlanePoint out = r > 1e-12 ? w[i] * ((r + 0.12) / r) : w[i];
      const PlanePoint c = to_canvas(out);
      svg << "<text x=\"" << fixed4(c.u) << "\" y=\"" << fixed4(c.v)
          << "\" font-family=\"serif\" font-size=\"16\" text-anchor=\"middle\" fill=\"" << stroke << "\">"
          << kLabel[s % 4] << "<tspan font-size=\"11\" dy=\"4\">" << i + 1 << "</tspan></text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace wulff
