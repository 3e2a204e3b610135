#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wulff::oracle {

namespace {

double dist(const SPoint& p, const SPoint& q) {
  const Vec3 c = cross(p.vec(), q.vec());
  return std::atan2(norm(c), dot(p.vec(), q.vec()));
}

SPoint slerp(const SPoint& a, const SPoint& b, double t) {
  const double omega = dist(a, b);
  if (omega < 1e-15) return a;
  const double s = std::sin(omega);
  return SPoint(a.vec() * (std::sin((1.0 - t) * omega) / s) + b.vec() * (std::sin(t * omega) / s));
}

// count points spread over the closed chain by arc length, starting at v[0].
std::vector<SPoint> chain_samples(const std::vector<SPoint>& v, int count) {
  const std::size_t n = v.size();
  std::vector<double> len(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += len[i] = dist(v[i], v[(i + 1) % n]);
  std::vector<SPoint> out;
  const double step = total / count;
  double s = 0.0;
  std::size_t i = 0;
  double start = 0.0;
  for (int k = 0; k < count; ++k, s += step) {
    while (i + 1 < n && s > start + len[i]) start += len[i++];
    const double t = len[i] > 0.0 ? std::clamp((s - start) / len[i], 0.0, 1.0) : 0.0;
    out.push_back(slerp(v[i], v[(i + 1) % n], t));
  }
  return out;
}

std::vector<SPoint> vertex_list(const SphericalPolygon& b) { return {b.vertices().begin(), b.vertices().end()}; }

std::vector<SPoint> own_edge_poles(const SphericalPolygon& b) {
  std::vector<SPoint> poles;
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) poles.emplace_back(cross(b[i].vec(), b[(i + 1) % n].vec()));
  return poles;
}

SPoint interior_point(const SphericalPolygon& b) {
  Vec3 s{};
  for (const SPoint& v : b.vertices()) s += v.vec();
  return SPoint(s);
}

}  // namespace

SphericalPolygon brute_polar(const SphericalPolygon& b, int grid) {
  const int total = grid * grid;
  const int on_boundary = total * 3 / 4;
  std::vector<SPoint> pts = chain_samples(vertex_list(b), on_boundary);
  const SPoint c = interior_point(b);
  const std::vector<SPoint> ring = chain_samples(vertex_list(b), grid);
  const int layers = std::max(1, (total - on_boundary) / grid);
  for (int l = 1; l <= layers; ++l) {
    const double t = static_cast<double>(l) / (layers + 1);
    for (const SPoint& q : ring) pts.emplace_back(q.vec() * (1.0 - t) + c.vec() * t);
  }
  return vertex_enumeration(pts).body;
}

double brute_width(const SphericalPolygon& b, const SPoint& p, int m) {
  double lowest = 1e300;
  for (const SPoint& v : b.vertices()) lowest = std::min(lowest, dot(p.vec(), v.vec()));
  if (lowest < -1e-6 || lowest > 1e-6) {
    throw GeometryError(ErrorCode::NotSupporting, "H(p) does not support the body");
  }
  // Every supporting hemisphere has its pole on the boundary of the polar set,
  // whose vertices are the edge poles of b.
  const std::vector<SPoint> poles = own_edge_poles(b);
  std::vector<SPoint> qs = chain_samples(poles, m);
  qs.insert(qs.end(), poles.begin(), poles.end());
  double best = 1e300;
  for (const SPoint& q : qs) {
    const double c = dot(p.vec(), q.vec());
    if (std::abs(c) > 1.0 - 1e-12) continue;  // H(p) ∩ H(q) is not a lune
    bool contains = true;
    for (const SPoint& v : b.vertices()) contains = contains && dot(q.vec(), v.vec()) >= -1e-9;
    if (contains) best = std::min(best, kPi - dist(p, q));
  }
  return best;
}

double brute_diameter(const SphericalPolygon& b, int grid) {
  std::vector<SPoint> pts = vertex_list(b);
  const std::vector<SPoint> ring = chain_samples(pts, grid);
  pts.insert(pts.end(), ring.begin(), ring.end());
  const SPoint c = interior_point(b);
  for (std::size_t k = 0; k < ring.size(); k += 8) pts.emplace_back(ring[k].vec() + c.vec());
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, dist(pts[i], pts[j]));
  return best;
}

}  // namespace wulff::oracle
