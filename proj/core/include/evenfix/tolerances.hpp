#pragma once

#include <cstddef>

namespace evenfix::tol {

// Orthogonality, determinant and matrix-identity comparisons.
inline constexpr double orth = 1e-9;
// Unit-norm check on quaternion components.
inline constexpr double norm = 1e-12;
// Canonical keys round every entry to this grid (2^-32).
inline constexpr double key_grid = 1.0 / 4294967296.0;
// Singular values below this are treated as zero; accepted and rejected
// values must be separated by at least `rank_gap`.
inline constexpr double rank = 1e-7;
inline constexpr double rank_gap = 1e3;
// Equivariance checks of polynomial maps.
inline constexpr double equivariance = 1e-8;
// Character-formula rounding.
inline constexpr double character_rounding = 1e-6;
// Regularity threshold on the circle scalar derivative.
inline constexpr double regular = 1e-6;
// Residual required of a refined zero, and the degeneracy cut-off.
inline constexpr double zero_residual = 1e-10;
inline constexpr double degenerate = 1e-10;

inline constexpr std::size_t default_closure_bound = 1'000'000;

}  // namespace evenfix::tol
