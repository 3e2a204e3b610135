#pragma once

// Planar kernels shared by the Wulff construction and the gnomonic-plane
// algorithms on the sphere.

#include <cstddef>
#include <span>
#include <vector>

#include "wulff/spherical_core.hpp"

namespace wulff::planar {

/// Orientation of (o, a, b): > 0 for a left turn.
constexpr double orient(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
  return cross(a - o, b - o);
}

/// Indices of the strict convex hull in CCW order (Andrew's monotone chain).
/// Collinear and duplicate points are dropped using a relative tolerance.
std::vector<std::size_t> convex_hull(std::span<const PlanePoint> points);

struct HalfPlaneIntersection {
  std::vector<PlanePoint> vertices;   // CCW
  std::vector<std::size_t> active;    // constraint index per edge, CCW
  std::vector<std::size_t> redundant; // constraints not supporting an edge
};

/// Intersection of the half-planes {x : a_i · x <= 1}. Every constraint
/// contains the origin, so the region is the polar of conv{a_i}: hull
/// vertices are the irredundant constraints and hull edges are the region's
/// vertices. Throws DegenerateIntersection when the origin is not strictly
/// inside conv{a_i} (region unbounded).
HalfPlaneIntersection intersect_origin_halfplanes(std::span<const PlanePoint> normals);

/// Euclidean distance from p to the closed segment [a, b].
double point_segment_distance(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b);

}  // namespace wulff::planar
