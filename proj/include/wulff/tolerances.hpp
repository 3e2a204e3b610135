#pragma once

namespace wulff {

/// Sign predicates on exactly constructed data (dot products, turn tests).
inline constexpr double kAngTol = 1e-9;

/// |p·q| above 1 - kAntipodalTol means p and q are (anti)parallel.
inline constexpr double kAntipodalTol = 1e-12;

/// Distance from a supporting pole's great circle to the body.
inline constexpr double kSupportTol = 1e-6;

inline constexpr int kDefaultGrid = 720;

/// Agreement of the two dual constructions at kDefaultGrid; scales as grid^-2.
inline constexpr double kDualXcheckTol = 5e-3;

inline constexpr double kSelfDualTolExact = 1e-6;
inline constexpr double kSelfDualTolSampled = 5e-3;

/// Subdivisions per edge when sampling spherical polygon boundaries.
inline constexpr int kArcGrid = 16;

/// is_self_dual flags a mismatch only when one test passes at tol and the
/// other fails at kVerdictSlack * tol.
inline constexpr double kVerdictSlack = 3.0;

}  // namespace wulff
