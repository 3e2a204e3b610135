#pragma once

// Primitive geometry on the unit sphere S^2 and the plane z = 1 that the
// central projection maps the open upper hemisphere onto.

#include <array>
#include <cmath>
#include <numbers>

#include "wulff/error.hpp"
#include "wulff/tolerances.hpp"

namespace wulff {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// A point of S^2. The constructor renormalizes, so ‖p‖ = 1 to rounding.
class SPoint {
 public:
  SPoint(double x, double y, double z);
  explicit SPoint(const Vec3& v);

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }

  SPoint operator-() const;

  static SPoint north() { return SPoint(0.0, 0.0, 1.0); }

 private:
  Vec3 v_;
};

inline double dot(const SPoint& a, const SPoint& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const SPoint& a, const SPoint& b) { return cross(a.vec(), b.vec()); }

/// H(P) = {Q : P·Q >= 0}, identified by its pole.
struct Hemisphere {
  SPoint pole;

  bool contains(const SPoint& q, double tol = kAngTol) const { return dot(pole, q) >= -tol; }
};

/// H(p) ∩ H(q) for p ≠ ±q.
class Lune {
 public:
  Lune(const SPoint& p, const SPoint& q);

  const SPoint& p() const { return p_; }
  const SPoint& q() const { return q_; }

 private:
  SPoint p_;
  SPoint q_;
};

struct PlanePoint {
  double u = 0.0;
  double v = 0.0;

  constexpr PlanePoint operator+(const PlanePoint& o) const { return {u + o.u, v + o.v}; }
  constexpr PlanePoint operator-(const PlanePoint& o) const { return {u - o.u, v - o.v}; }
  constexpr PlanePoint operator-() const { return {-u, -v}; }
  constexpr PlanePoint operator*(double s) const { return {u * s, v * s}; }
  constexpr bool operator==(const PlanePoint&) const = default;
};

constexpr double dot(const PlanePoint& a, const PlanePoint& b) { return a.u * b.u + a.v * b.v; }
constexpr double cross(const PlanePoint& a, const PlanePoint& b) { return a.u * b.v - a.v * b.u; }
inline double norm(const PlanePoint& a) { return std::hypot(a.u, a.v); }
inline PlanePoint unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// ((1-t)p + tq) / ‖(1-t)p + tq‖. Not uniform in arc length; see point_at_arc_length.
SPoint arc_point(const SPoint& p, const SPoint& q, double t);

/// Geodesic distance in [0, π].
double arc_length(const SPoint& p, const SPoint& q);

/// The point at geodesic distance s from p along the minor arc towards q.
SPoint point_at_arc_length(const SPoint& p, const SPoint& q, double s);

/// π - |PQ|.
double lune_thickness(const Lune& lune);

/// α_N restricted to the open upper hemisphere: (x/z, y/z).
PlanePoint central_project(const SPoint& p);

/// Inverse of central_project: (u, v, 1) / ‖(u, v, 1)‖.
SPoint lift_to_sphere(const PlanePoint& x);

/// inv(θ, r) = (-θ, 1/r) in polar coordinates.
PlanePoint invert_polar_plot(const PlanePoint& x);

/// Gnomonic projection through an arbitrary center. The tangent frame is
/// right handed (e1 × e2 = center), so CCW order viewed from outside the
/// sphere maps to CCW order in the plane. For center = N this coincides
/// with central_project / lift_to_sphere.
class GnomonicFrame {
 public:
  explicit GnomonicFrame(const SPoint& center);

  const SPoint& center() const { return center_; }
  const Vec3& e1() const { return e1_; }
  const Vec3& e2() const { return e2_; }

  /// Throws EquatorOrBelow unless p·center > min_height.
  PlanePoint project(const SPoint& p, double min_height = 1e-12) const;
  SPoint lift(const PlanePoint& x) const;

 private:
  SPoint center_;
  Vec3 e1_;
  Vec3 e2_;
};

/// Proper rotation of R^3 stored row-major.
class Rotation3 {
 public:
  Rotation3();
  explicit Rotation3(const std::array<std::array<double, 3>, 3>& rows);

  /// Right-hand rotation by `angle` about `axis` (normalized internally).
  static Rotation3 about_axis(const Vec3& axis, double angle);

  Vec3 apply(const Vec3& v) const;
  SPoint apply(const SPoint& p) const { return SPoint(apply(p.vec())); }
  Rotation3 operator*(const Rotation3& rhs) const;
  Rotation3 transpose() const;
  double at(int r, int c) const { return m_[r][c]; }

 private:
  std::array<std::array<double, 3>, 3> m_;
};

}  // namespace wulff
