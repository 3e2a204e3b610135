#include "wulff/spherical_core.hpp"

#include <algorithm>
#include <string>

namespace wulff {

namespace {

Vec3 normalized_or_throw(const Vec3& v, const char* what) {
  const double n = norm(v);
  if (!std::isfinite(n) || n < 1e-300) {
    throw GeometryError(ErrorCode::InvalidInput, std::string(what) + ": zero or non-finite vector");
  }
  return v / n;
}

}  // namespace

SPoint::SPoint(double x, double y, double z) : SPoint(Vec3{x, y, z}) {}

SPoint::SPoint(const Vec3& v) : v_(normalized_or_throw(v, "SPoint")) {}

SPoint SPoint::operator-() const { return SPoint(-v_); }

Lune::Lune(const SPoint& p, const SPoint& q) : p_(p), q_(q) {
  if (std::abs(dot(p, q)) >= 1.0 - kAntipodalTol) {
    throw GeometryError(ErrorCode::InvalidInput, "lune poles must satisfy p != ±q");
  }
}

SPoint arc_point(const SPoint& p, const SPoint& q, double t) {
  if (dot(p, q) <= -1.0 + kAntipodalTol) {
    throw GeometryError(ErrorCode::AntipodalPair, "arc between antipodal points is not unique");
  }
  return SPoint((1.0 - t) * p.vec() + t * q.vec());
}

double arc_length(const SPoint& p, const SPoint& q) {
  // atan2 form equals arccos(clamp(p·q)) but keeps full precision near 0 and π.
  return std::atan2(norm(cross(p, q)), dot(p, q));
}

SPoint point_at_arc_length(const SPoint& p, const SPoint& q, double s) {
  const double c = dot(p, q);
  if (c <= -1.0 + kAntipodalTol) {
    throw GeometryError(ErrorCode::AntipodalPair, "arc between antipodal points is not unique");
  }
  const Vec3 tangent = q.vec() - c * p.vec();
  const double tn = norm(tangent);
  if (tn < 1e-300) return p;
  return SPoint(std::cos(s) * p.vec() + std::sin(s) * (tangent / tn));
}

double lune_thickness(const Lune& lune) { return kPi - arc_length(lune.p(), lune.q()); }

PlanePoint central_project(const SPoint& p) {
  if (p.z() <= 1e-12) {
    throw GeometryError(ErrorCode::EquatorOrBelow, "central projection needs z > 0");
  }
  return {p.x() / p.z(), p.y() / p.z()};
}

SPoint lift_to_sphere(const PlanePoint& x) { return SPoint(x.u, x.v, 1.0); }

PlanePoint invert_polar_plot(const PlanePoint& x) {
  const double r2 = dot(x, x);
  if (!(r2 > 1e-24)) {
    throw GeometryError(ErrorCode::OriginNotInvertible, "inversion undefined at the origin");
  }
  // (θ, r) -> (-θ, 1/r) is x -> -x / ‖x‖².
  return {-x.u / r2, -x.v / r2};
}

GnomonicFrame::GnomonicFrame(const SPoint& center) : center_(center) {
  const Vec3& c = center.vec();
  const Vec3 helper = std::abs(c.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{0.0, 1.0, 0.0};
  const Vec3 a = cross(helper, c);
  e1_ = a / norm(a);
  e2_ = cross(c, e1_);
}

PlanePoint GnomonicFrame::project(const SPoint& p, double min_height) const {
  const double h = dot(p, center_);
  if (h <= min_height) {
    throw GeometryError(ErrorCode::EquatorOrBelow, "point not strictly inside the projection hemisphere");
  }
  return {dot(p.vec(), e1_) / h, dot(p.vec(), e2_) / h};
}

SPoint GnomonicFrame::lift(const PlanePoint& x) const {
  return SPoint(center_.vec() + x.u * e1_ + x.v * e2_);
}

Rotation3::Rotation3() : m_{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}} {}

Rotation3::Rotation3(const std::array<std::array<double, 3>, 3>& rows) : m_(rows) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[i][k] * m_[j][k];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-9) {
        throw GeometryError(ErrorCode::InvalidInput, "rotation matrix is not orthonormal");
      }
    }
  }
  const Vec3 r0{m_[0][0], m_[0][1], m_[0][2]};
  const Vec3 r1{m_[1][0], m_[1][1], m_[1][2]};
  const Vec3 r2{m_[2][0], m_[2][1], m_[2][2]};
  if (dot(cross(r0, r1), r2) < 0.0) {
    throw GeometryError(ErrorCode::InvalidInput, "rotation matrix has determinant -1");
  }
}

Rotation3 Rotation3::about_axis(const Vec3& axis, double angle) {
  const Vec3 k = normalized_or_throw(axis, "rotation axis");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1.0 - c;
  Rotation3 r;
  r.m_ = {{{c + t * k.x * k.x, t * k.x * k.y - s * k.z, t * k.x * k.z + s * k.y},
           {t * k.y * k.x + s * k.z, c + t * k.y * k.y, t * k.y * k.z - s * k.x},
           {t * k.z * k.x - s * k.y, t * k.z * k.y + s * k.x, c + t * k.z * k.z}}};
  return r;
}

Vec3 Rotation3::apply(const Vec3& v) const {
  return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z,
          m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
          m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z};
}

Rotation3 Rotation3::operator*(const Rotation3& rhs) const {
  Rotation3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[i][k] * rhs.m_[k][j];
      out.m_[i][j] = s;
    }
  }
  return out;
}

Rotation3 Rotation3::transpose() const {
  Rotation3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m_[i][j] = m_[j][i];
  return out;
}

}  // namespace wulff
