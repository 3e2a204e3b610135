// wulff: build Wulff shapes, dualize them and decide self-duality.
//
// Exit codes: 0 success / self-dual, 1 negative verdict, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wulff/catalog.hpp"
#include "wulff/shape_io.hpp"

using namespace wulff;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageError("parameter " + key + ": not a number: '" + text + "'");
  return x;
}

PlanePoint parse_pair(const std::string& key, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("parameter " + key + ": expected u,v");
  return {parse_double(key, text.substr(0, comma)), parse_double(key, text.substr(comma + 1))};
}

CatalogSpec catalog_spec(const std::string& name, const std::vector<std::string>& params) {
  const auto kind = parse_catalog_kind(name);
  if (!kind) throw UsageError("unknown catalog entry '" + name + "' (try `wulff catalog list`)");
  CatalogSpec spec;
  spec.kind = *kind;
  bool star = true;
  for (const std::string& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "grid") spec.grid = static_cast<int>(parse_double(key, val));
    else if (key == "angle") spec.angle = parse_double(key, val);
    else if (key == "axis") spec.axis = parse_pair(key, val);
    else if (key == "spin") spec.spin = parse_double(key, val);
    else if (key == "width") spec.width = parse_double(key, val);
    else if (key == "offset") spec.offset = parse_pair(key, val);
    else if (key == "m") spec.m = static_cast<int>(parse_double(key, val));
    else if (key == "a") spec.a = parse_double(key, val), star = false;
    else if (key == "phase") spec.phase = parse_double(key, val);
    else if (key == "star") {
      if (val != "true" && val != "false") throw UsageError("parameter star: expected true or false");
      star = val == "true";
    } else {
      throw UsageError("unknown parameter '" + key + "'");
    }
  }
  if (spec.kind == CatalogKind::Regular2mGon && !star && !spec.a) {
    throw UsageError("regular_2m_gon: give a=<value> or star=true");
  }
  if (star && spec.kind == CatalogKind::Regular2mGon) spec.a.reset();
  return spec;
}

// "catalog:<name>[:k=v,k=v]" or a path ("-" for stdin).
ShapeRecord load_input(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    std::string rest = source.substr(8);
    std::vector<std::string> params;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      std::stringstream list(rest.substr(colon + 1));
      for (std::string kv; std::getline(list, kv, ',');) {
        // axis/offset values contain a comma themselves: glue u,v back together.
        if (!params.empty() && kv.find('=') == std::string::npos) params.back() += "," + kv;
        else params.push_back(kv);
      }
      rest = rest.substr(0, colon);
    }
    const CatalogSpec spec = catalog_spec(rest, params);
    CatalogShape s = make_catalog(spec);
    if (spec.kind == CatalogKind::OctantTriangle) return {std::move(s.body), s.provenance};
    return {std::move(s.planar), s.provenance};
  }
  if (source == "-") return read_shape(std::cin);
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open '" + source + "'");
  return read_shape(in);
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string record_text(const ShapeRecord& r) {
  std::ostringstream s;
  write_shape(s, r);
  return s.str();
}

ConvexPolygon as_planar(const ShapeRecord& r) {
  if (const auto* w = std::get_if<ConvexPolygon>(&r.shape)) return *w;
  if (const auto* b = std::get_if<SphericalPolygon>(&r.shape)) return project_body(*b);
  return build_wulff(std::get<SupportFunction>(r.shape));
}

SupportFunction gamma_from(const std::string& source, int grid) {
  if (source == "disc") return SupportFunction::sample(grid, [](double) { return 1.0; }, SupportFunction::Preset::Disc);
  if (source.rfind("reuleaux", 0) == 0) {
    double width = 1.6;
    if (source.size() > 8) {
      if (source[8] != ':') throw UsageError("preset reuleaux takes the form reuleaux:<width>");
      width = parse_double("reuleaux", source.substr(9));
    }
    return reuleaux_support(width, {}, grid);
  }
  ShapeRecord r = load_input(source);
  if (auto* g = std::get_if<SupportFunction>(&r.shape)) return *g;
  return polygon_gauge(as_planar(r), grid);
}

int cmd_build(const std::string& gamma, int grid, const std::string& out) {
  const SupportFunction g = gamma_from(gamma, grid);
  emit(out, record_text({build_wulff(g), "build " + gamma}));
  return 0;
}

int cmd_dual(const std::string& in, const std::string& out, int grid, bool exact) {
  const ShapeRecord r = load_input(in);
  const ConvexPolygon w = as_planar(r);
  ConvexPolygon dw = exact ? exact_dual(w) : dual_wulff(w, grid);
  const double gap = hausdorff_planar(w, dw);
  emit(out, record_text({std::move(dw), "dual of " + (r.provenance.empty() ? in : r.provenance)}));
  std::ostringstream line;
  line.precision(17);
  line << "hausdorff " << gap << "\n";
  (out == "-" ? std::cerr : std::cout) << line.str();
  return 0;
}

int cmd_check(const std::string& in, double tol, bool reflections, const std::string& out) {
  const ShapeRecord r = load_input(in);
  ReportRecord rep;
  rep.provenance = r.provenance.empty() ? in : r.provenance;
  rep.tol = tol;
  rep.width_samples = 256;

  const SphericalPolygon body = [&] {
    if (const auto* b = std::get_if<SphericalPolygon>(&r.shape)) return *b;
    return lift_body(as_planar(r));
  }();
  if (!std::holds_alternative<SphericalPolygon>(r.shape)) {
    const ConvexPolygon w = as_planar(r);
    const Congruence c = congruent_up_to_rotation(w, exact_dual(w), tol, reflections);
    rep.congruent_dual = c.congruent;
    if (c.congruent) {
      rep.congruence_angle = c.angle;
      rep.congruence_reflected = c.reflected;
    }
  }
  const SelfDualReport sd = is_self_dual(body, tol);
  rep.self_dual = sd.self_dual;
  rep.constant_width = sd.constant_width;
  rep.gap = sd.gap;
  rep.min_width = sd.widths.min_width;
  rep.max_width = sd.widths.max_width;
  rep.diameter = diameter(body);
  emit(out, report_to_json(rep).dump(2) + "\n");
  return rep.self_dual ? 0 : kExitNegative;
}

int cmd_render(const std::vector<std::string>& inputs, const std::string& out, const std::string& style) {
  if (inputs.empty() || inputs.size() > 4) throw UsageError("render takes one to four shape records");
  std::vector<ConvexPolygon> shapes;
  for (const std::string& in : inputs) shapes.push_back(as_planar(load_input(in)));
  SvgStyle s = SvgStyle::Single;
  if (style == "overlay") s = SvgStyle::Overlay;
  else if (style != "single") throw UsageError("unknown style '" + style + "'");
  emit(out, render_svg(shapes, s));
  return 0;
}

int cmd_catalog(const std::vector<std::string>& args, const std::string& out, bool spherical) {
  if (args.empty()) throw UsageError("catalog needs a name or `list`");
  if (args[0] == "list") {
    std::ostringstream s;
    for (const CatalogEntryInfo& e : catalog_entries()) s << to_string(e.kind) << "\t" << e.parameters << "\n";
    emit(out, s.str());
    return 0;
  }
  CatalogShape shape = make_catalog(catalog_spec(args[0], {args.begin() + 1, args.end()}));
  if (spherical) emit(out, record_text({std::move(shape.body), shape.provenance}));
  else emit(out, record_text({std::move(shape.planar), shape.provenance}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wulff shapes, dual Wulff shapes and self-duality on S^2"};
  app.require_subcommand(1);

  std::string gamma;
  std::string out = "-";
  int grid = kDefaultGrid;
  auto* build = app.add_subcommand("build", "Wulff shape of a support function");
  build->add_option("--gamma", gamma, "support record, shape record, or preset disc | reuleaux[:width]")->required();
  build->add_option("--grid", grid, "number of sample directions")->capture_default_str()->check(CLI::Range(8, 1 << 22));
  build->add_option("-o,--output", out, "output path, - for stdout")->capture_default_str();

  std::string input;
  bool exact = false;
  auto* dual = app.add_subcommand("dual", "dual Wulff shape; prints Hausdorff(input, dual)");
  dual->add_option("input", input, "polygon2 record, catalog:<name>, or -")->required();
  dual->add_option("-o,--output", out, "output path, - for stdout")->capture_default_str();
  dual->add_option("--grid", grid, "sample directions for the dual support")->capture_default_str()->check(CLI::Range(8, 1 << 22));
  dual->add_flag("--exact", exact, "polygon polar instead of the sampled construction");

  double tol = kSelfDualTolSampled;
  auto* check = app.add_subcommand("check", "decide self-duality; exit 0 self-dual, 1 not");
  check->add_option("input", input, "polygon2 / spolygon record, catalog:<name>, or -")->required();
  check->add_option("--tol", tol, "Hausdorff / width tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  check->add_option("-o,--output", out, "report path, - for stdout")->capture_default_str();
  bool reflections = false;
  check->add_flag("--reflections", reflections, "let the dual congruence test use reflections too");

  std::vector<std::string> inputs;
  std::string style = "overlay";
  auto* render = app.add_subcommand("render", "SVG of one shape or a shape and its dual");
  render->add_option("inputs", inputs, "shape records or catalog:<name>")->required();
  render->add_option("-o,--output", out, "SVG path, - for stdout")->capture_default_str();
  render->add_option("--style", style, "overlay | single")->capture_default_str();

  std::vector<std::string> cat_args;
  bool spherical = false;
  auto* catalog = app.add_subcommand("catalog", "worked examples: `catalog list` or `catalog <name> key=value ...`");
  catalog->add_option("args", cat_args, "list, or a name followed by key=value parameters")->required();
  catalog->add_option("-o,--output", out, "output path, - for stdout")->capture_default_str();
  catalog->add_flag("--spherical", spherical, "emit the lifted spherical polygon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*build) return cmd_build(gamma, grid, out);
    if (*dual) return cmd_dual(input, out, grid, exact);
    if (*check) return cmd_check(input, tol, reflections, out);
    if (*render) return cmd_render(inputs, out, style);
    if (*catalog) return cmd_catalog(cat_args, out, spherical);
  } catch (const GeometryError& e) {
    std::cerr << "wulff: " << e.what() << "\n";
    return kExitError;
  } catch (const UsageError& e) {
    std::cerr << "wulff: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
