#include "doctest.h"

#include <cmath>

#include "support/generators.hpp"
#include "wulff/spherical_core.hpp"

using namespace wulff;
using doctest::Approx;

TEST_CASE("SPoint normalizes and rejects the zero vector") {
  const SPoint p(3.0, 0.0, 4.0);
  CHECK(p.x() == Approx(0.6).epsilon(1e-15));
  CHECK(p.z() == Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(SPoint(0.0, 0.0, 0.0), GeometryError);
  try {
    SPoint(0.0, 0.0, 0.0);
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
}

TEST_CASE("hemisphere membership is closed") {
  const Hemisphere h{SPoint::north()};
  CHECK(h.contains(SPoint(1, 0, 0)));
  CHECK(h.contains(SPoint(1, 0, 0.1)));
  CHECK_FALSE(h.contains(SPoint(1, 0, -0.1)));
}

TEST_CASE("lune needs distinct, non-opposite poles") {
  const SPoint n = SPoint::north();
  CHECK_THROWS_AS(Lune(n, n), GeometryError);
  CHECK_THROWS_AS(Lune(n, -n), GeometryError);
  // Poles at distance π/3 leave a lune of thickness 2π/3.
  const Lune l(n, SPoint(std::sin(kPi / 3), 0.0, std::cos(kPi / 3)));
  CHECK(lune_thickness(l) == Approx(2.0 * kPi / 3.0).epsilon(1e-14));
}

TEST_CASE("arc length") {
  CHECK(arc_length(SPoint(1, 0, 0), SPoint(0, 1, 0)) == Approx(kHalfPi).epsilon(1e-15));
  CHECK(arc_length(SPoint(1, 0, 0), SPoint(-1, 0, 0)) == Approx(kPi).epsilon(1e-15));
  // Tiny separations keep full relative precision.
  const double eps = 1e-9;
  CHECK(arc_length(SPoint(1, 0, 0), SPoint(std::cos(eps), std::sin(eps), 0)) == Approx(eps).epsilon(1e-6));
}

TEST_CASE("arc_point and point_at_arc_length") {
  const SPoint a(1, 0, 0), b(0, 1, 0);
  const SPoint mid = arc_point(a, b, 0.5);
  CHECK(mid.x() == Approx(std::sqrt(0.5)));
  CHECK(mid.y() == Approx(std::sqrt(0.5)));
  CHECK_THROWS_AS(arc_point(a, -a, 0.5), GeometryError);

  const SPoint q = point_at_arc_length(a, b, kPi / 6);
  CHECK(q.x() == Approx(std::cos(kPi / 6)).epsilon(1e-14));
  CHECK(q.y() == Approx(0.5).epsilon(1e-14));
  CHECK(arc_length(a, q) == Approx(kPi / 6).epsilon(1e-14));
}

TEST_CASE("central projection round trip") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const PlanePoint x{gen::uniform(rng, -3, 3), gen::uniform(rng, -3, 3)};
    const PlanePoint y = central_project(lift_to_sphere(x));
    CHECK(y.u == Approx(x.u).epsilon(1e-13));
    CHECK(y.v == Approx(x.v).epsilon(1e-13));
  }
  CHECK_THROWS_AS(central_project(SPoint(1, 0, 0)), GeometryError);
  CHECK_THROWS_AS(central_project(SPoint(0, 0, -1)), GeometryError);
  const PlanePoint up = central_project(SPoint(1, 1, 2));
  CHECK(up.u == Approx(0.5));
  CHECK(up.v == Approx(0.5));
}

TEST_CASE("polar-plot inversion") {
  const PlanePoint y = invert_polar_plot({2.0, 0.0});
  CHECK(y.u == Approx(-0.5));
  CHECK(y.v == Approx(0.0));
  const PlanePoint z = invert_polar_plot({0.0, 0.25});
  CHECK(z.v == Approx(-4.0));
  CHECK_THROWS_AS(invert_polar_plot({0.0, 0.0}), GeometryError);
  gen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const PlanePoint x{gen::uniform(rng, -2, 2), gen::uniform(rng, -2, 2)};
    const PlanePoint back = invert_polar_plot(invert_polar_plot(x));
    CHECK(back.u == Approx(x.u).epsilon(1e-12));
    CHECK(back.v == Approx(x.v).epsilon(1e-12));
  }
}

TEST_CASE("gnomonic frame is right handed and matches central projection at N") {
  gen::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const GnomonicFrame f(gen::random_direction(rng));
    const Vec3 c = cross(f.e1(), f.e2());
    CHECK(c.x == Approx(f.center().x()).epsilon(1e-12));
    CHECK(c.y == Approx(f.center().y()).epsilon(1e-12));
    CHECK(c.z == Approx(f.center().z()).epsilon(1e-12));
    const SPoint p = gen::point_in_cap(rng, f.center(), 1.2);
    const SPoint q = f.lift(f.project(p));
    CHECK(arc_length(p, q) < 1e-12);
  }
  const GnomonicFrame n(SPoint::north());
  const SPoint p(0.3, -0.2, 0.9);
  const PlanePoint a = n.project(p);
  const PlanePoint b = central_project(p);
  CHECK(a.u == Approx(b.u).epsilon(1e-14));
  CHECK(a.v == Approx(b.v).epsilon(1e-14));
  CHECK_THROWS_AS(n.project(SPoint(0, 0, -1)), GeometryError);
}

TEST_CASE("rotations") {
  const Rotation3 r = Rotation3::about_axis({0, 0, 1}, kHalfPi);
  const Vec3 x = r.apply(Vec3{1, 0, 0});
  CHECK(x.x == Approx(0.0).epsilon(1e-15));
  CHECK(x.y == Approx(1.0));
  const Rotation3 id = r * r.transpose();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id.at(i, j) == Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));
  // reflections and non-orthonormal rows are rejected
  CHECK_THROWS_AS(Rotation3({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}), GeometryError);
  CHECK_THROWS_AS(Rotation3({{{1, 0.1, 0}, {0, 1, 0}, {0, 0, 1}}}), GeometryError);

  gen::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const Rotation3 q = gen::random_rotation(rng);
    const SPoint a = gen::random_direction(rng), b = gen::random_direction(rng);
    CHECK(arc_length(q.apply(a), q.apply(b)) == Approx(arc_length(a, b)).epsilon(1e-12));
  }
}
