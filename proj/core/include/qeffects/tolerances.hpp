#pragma once

// Numerical thresholds shared across the library. Decision thresholds are
// one order looser than identity residuals, which are in turn looser than
// the eigensolver's reconstruction residual.
namespace qeffects::tol {

// Max-entry deviation from M == M^dagger, relative to max(1, max |M_ij|).
inline constexpr double kHermiticity = 1e-10;
// Eigenvalue gap (relative to max(1, ||M||)) that separates spectral clusters.
inline constexpr double kClustering = 1e-8;
// Eigenvalues with |lambda| below this (relative to max(1, ||M||)) are
// treated as exact zeros by the positive square root.
inline constexpr double kSqrtFlush = 64.0 * 2.220446049250313e-16;

inline constexpr double kEffectSpectrum = 1e-9;
inline constexpr double kStateSpectrum = 1e-9;
inline constexpr double kStateTrace = 1e-10;

inline constexpr double kDecision = 1e-9;
inline constexpr double kIdentity = 1e-10;
inline constexpr double kBruteforce = 1e-8;

inline constexpr double kObservableSum = 1e-9;
inline constexpr double kDistributionSum = 1e-10;
inline constexpr double kDistributionFloor = 1e-12;
inline constexpr double kConvexWeights = 1e-12;

}  // namespace qeffects::tol
