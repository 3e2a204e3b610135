#include "doctest.h"

#include <cmath>

#include "wulff/catalog.hpp"

using namespace wulff;
using doctest::Approx;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("expected a GeometryError");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("disc") {
  const ConvexPolygon d = make_disc(360);
  CHECK(d.size() == 360);
  CHECK(d.origin_margin() == Approx(1.0).epsilon(1e-12));
  CHECK(is_centrally_symmetric(d, 1e-12));
  CHECK(is_self_dual(lift_body(d), kSelfDualTolSampled).self_dual);
  CHECK_THROWS_AS(make_disc(4), GeometryError);
}

TEST_CASE("rotated caps") {
  CHECK(hausdorff_planar(make_rotated_cap(0.0, {0, 1}, 360), make_disc(360)) < 1e-12);

  const ConvexPolygon c = make_rotated_cap(0.3, {0, 1}, 720);
  CHECK(is_self_dual(lift_body(c), kSelfDualTolSampled).self_dual);
  CHECK_FALSE(is_centrally_symmetric(c, 1e-2));
  CHECK(hausdorff_planar(c, make_disc(720)) > 0.05);

  // tilting back recovers the disc
  const SphericalPolygon back = rotate(lift_body(c), Rotation3::about_axis({0, 1, 0}, -0.3));
  CHECK(hausdorff_planar(project_body(back), make_disc(720)) < 1e-9);

  CHECK(code_of([] { make_rotated_cap(0.8, {0, 1}, 360); }) == ErrorCode::BodyLeavesHemisphere);
  CHECK(code_of([] { make_rotated_cap(-kPi / 4, {1, 0}, 360); }) == ErrorCode::BodyLeavesHemisphere);
}

TEST_CASE("octant triangles") {
  const Rotation3 r = octant_to_north();
  const Vec3 c = r.apply(Vec3{1, 1, 1} / std::sqrt(3.0));
  CHECK(c.z == Approx(1.0).epsilon(1e-15));
  const Vec3 e1 = r.apply(Vec3{1, 0, 0});
  CHECK(std::abs(e1.y) < 1e-15);
  CHECK(e1.x > 0.0);

  for (double spin : {0.0, kPi / 12, kPi / 6, 1.234}) {
    const SphericalPolygon t = make_octant_triangle(r, spin);
    const WidthReport w = width_report(t, 512, kHalfPi, 1e-9);
    CHECK(w.verdict);
    const SelfDualReport s = is_self_dual(t, kSelfDualTolExact);
    CHECK(s.self_dual);
    // the projected triangle is a planar self-dual Wulff shape
    const ConvexPolygon p = project_body(t);
    CHECK(hausdorff_planar(p, exact_dual(p)) < 1e-12);
  }
  const ConvexPolygon p = project_body(make_octant_triangle());
  for (const PlanePoint& v : p.vertices()) CHECK(norm(v) == Approx(std::sqrt(2.0)).epsilon(1e-14));

  const Rotation3 tilt = Rotation3::about_axis({0, 1, 0}, 0.7);
  CHECK(code_of([&] { make_octant_triangle(tilt * r); }) == ErrorCode::BodyLeavesHemisphere);
}

TEST_CASE("Reuleaux triangle") {
  const SupportFunction g = reuleaux_support(1.6, {}, 720);
  for (std::size_t j = 0; j < 360; ++j) CHECK(g.value(j) + g.value(j + 360) == Approx(1.6).epsilon(1e-12));

  const ConvexPolygon w = make_reuleaux(1.6, {}, 720);
  int corners = 0;
  for (double t : turning_angles(w)) corners += t > 0.5;
  CHECK(corners == 3);
  for (double t : turning_angles(w))
    if (t > 0.5) CHECK(t == Approx(kPi / 3).epsilon(0.02));

  CHECK_FALSE(is_self_dual(lift_body(w), kSelfDualTolSampled).self_dual);
  CHECK(code_of([] { make_reuleaux(1.6, {1.5, 0.0}, 720); }) == ErrorCode::OriginNotInterior);
  CHECK(code_of([] { make_reuleaux(-1.0, {}, 720); }) == ErrorCode::InvalidInput);
}

TEST_CASE("star equation") {
  const double a4 = solve_star_equation(2);
  CHECK(std::abs(a4 * a4 - std::sqrt(2.0)) <= 1e-12);
  const double a6 = solve_star_equation(3);
  CHECK(a6 * a6 == Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));
  // substituting back into the transcendental form
  CHECK(std::sin((kPi - 2 * kPi / 6) / 2) == Approx(1.0 / (a6 * a6)).epsilon(1e-13));
  CHECK(solve_star_equation(1000) == Approx(1.0).epsilon(1e-5));
  CHECK(solve_star_equation(1000) > 1.0);
  CHECK_THROWS_AS(solve_star_equation(1), GeometryError);
}

TEST_CASE("regular 2m-gons") {
  for (int m : {2, 3, 5}) {
    const double a = solve_star_equation(m);
    const ConvexPolygon x = make_regular_2m_gon(m, a);
    const ConvexPolygon dx = exact_dual(x);
    const Congruence c = congruent_up_to_rotation(x, dx, 1e-9);
    CHECK(c.congruent);
    CHECK(c.angle == Approx(kPi / (2 * m)).epsilon(1e-9));
    CHECK(hausdorff_planar(x, dx) > 1e-2);
  }
  // the dual of the a4 square sits a4 - 1/a4 away
  const double a4 = solve_star_equation(2);
  const ConvexPolygon sq = make_regular_2m_gon(2, a4);
  CHECK(hausdorff_planar(sq, exact_dual(sq)) == Approx(a4 - 1.0 / a4).epsilon(1e-12));
  CHECK(hausdorff_planar(sq, exact_dual(sq)) == Approx(0.34831).epsilon(1e-4));

  const ConvexPolygon off = make_regular_2m_gon(2, 1.5);
  const Congruence c = congruent_up_to_rotation(off, exact_dual(off), 1e-2);
  CHECK_FALSE(c.congruent);
  CHECK(c.residual > 1e-2);

  CHECK_THROWS_AS(make_regular_2m_gon(1, 1.5), GeometryError);
  CHECK_THROWS_AS(make_regular_2m_gon(2, 0.9), GeometryError);
}

TEST_CASE("catalog verdict table") {
  struct Row {
    CatalogSpec spec;
    bool self_dual;
    bool congruent_dual;
  };
  auto spec = [](CatalogKind k) {
    CatalogSpec s;
    s.kind = k;
    return s;
  };
  std::vector<Row> rows;
  rows.push_back({spec(CatalogKind::Disc), true, true});
  for (double angle : {0.1, 0.3, -0.5}) {
    CatalogSpec s = spec(CatalogKind::RotatedCap);
    s.angle = angle;
    rows.push_back({s, true, true});
  }
  for (double spin : {0.0, kPi / 12, kPi / 6}) {
    CatalogSpec s = spec(CatalogKind::OctantTriangle);
    s.spin = spin;
    rows.push_back({s, true, true});
  }
  rows.push_back({spec(CatalogKind::Reuleaux), false, false});
  rows.push_back({spec(CatalogKind::SquareA4), false, true});
  for (int m : {2, 3}) {
    CatalogSpec s = spec(CatalogKind::Regular2mGon);
    s.m = m;
    rows.push_back({s, false, true});
  }

  for (const Row& row : rows) {
    CAPTURE(to_string(row.spec.kind));
    const CatalogShape shape = make_catalog(row.spec);
    const SelfDualReport r = is_self_dual(shape.body, kSelfDualTolSampled);
    CHECK(r.self_dual == row.self_dual);
    CHECK(r.constant_width == row.self_dual);
    const ConvexPolygon& w = shape.planar;
    CHECK(congruent_up_to_rotation(w, exact_dual(w), kSelfDualTolSampled).congruent == row.congruent_dual);
    // among catalog shapes only the disc is centrally symmetric and self-dual
    if (is_centrally_symmetric(w, 1e-9) && r.self_dual) CHECK(row.spec.kind == CatalogKind::Disc);
  }
}

TEST_CASE("catalog names") {
  for (const CatalogEntryInfo& e : catalog_entries()) {
    const auto k = parse_catalog_kind(to_string(e.kind));
    REQUIRE(k.has_value());
    CHECK(*k == e.kind);
  }
  CHECK_FALSE(parse_catalog_kind("dodecahedron").has_value());
  CatalogSpec s;
  s.kind = CatalogKind::SquareA4;
  CHECK(make_catalog(s).provenance.find("square_a4") != std::string::npos);
}
