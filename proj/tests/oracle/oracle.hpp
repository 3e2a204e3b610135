#pragma once

// Brute-force references for the fast paths. They work straight from the
// definitions with SPoint arithmetic and dense sampling, and are slow on
// purpose.

#include "wulff/spherical_body.hpp"

namespace wulff::oracle {

/// ⋂ H(P) over a dense sample of b (boundary by arc length plus interior
/// blends toward the witness). Converges to polar(b) as grid grows.
SphericalPolygon brute_polar(const SphericalPolygon& b, int grid);

/// min thickness of H(p) ∩ H(Q) over m supporting poles Q sampled along the
/// boundary of the polar set. Throws NotSupporting unless H(p) supports b.
double brute_width(const SphericalPolygon& b, const SPoint& p, int m);

/// max pairwise distance over vertices, grid boundary samples and a few
/// interior points.
double brute_diameter(const SphericalPolygon& b, int grid);

}  // namespace wulff::oracle
