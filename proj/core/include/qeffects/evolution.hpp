#pragma once

#include <optional>
#include <span>

#include "qeffects/effect.hpp"

namespace qeffects {

/// b(t|a) = e^{-ita} b e^{ita}.
Effect effect_evolution(const Effect& b, const Effect& a, double t);

/// d^n/dt^n b(t|a) = i^n [...[[b(t|a), a], a]..., a] with [X, Y] = XY - YX.
/// Throws InvalidOrder for n < 1.
HermitianOperator evolution_derivative(const Effect& b, const Effect& a, double t, int n = 1);

/// a[t]b = (a o b)(t|a) = a o b(t|a). Both forms are evaluated and must
/// agree within tol::kIdentity, otherwise NumericalInconsistency is thrown.
Effect time_seq_product(const Effect& a, const Effect& b, double t);

/// d/dt a[t]b = i [a[t]b, a].
HermitianOperator seq_product_derivative(const Effect& a, const Effect& b, double t);

struct ScaledProjectionDecomposition {
    double lambda;
    Effect projection;
};

/// (lambda, p) when the spectrum of `a` clusters into {0, lambda} with a
/// single nonzero cluster; p is that cluster's spectral projection.
std::optional<ScaledProjectionDecomposition> classify_scaled_projection(const Effect& a);

enum class ConstancyReason { Commuting, ScaledProjection, Neither };

struct ConstancyReport {
    bool constant = false;
    ConstancyReason reason = ConstancyReason::Neither;
    /// ||[a o b, a]||.
    double residual = 0.0;
    /// Populated when reason == ScaledProjection.
    std::optional<ScaledProjectionDecomposition> scaled_projection;
};

const char* to_string(ConstancyReason reason);

/// Decides whether a[t]b is constant in t from ||[a o b, a]|| <= tolerance.
/// The reason branch checks Commuting before ScaledProjection. Throws
/// ClassifierInconsistency if the pair is constant but neither branch holds.
ConstancyReport constancy_classifier(const Effect& a, const Effect& b,
                                     double tolerance = tol::kDecision);

/// max_t ||a[t]b - a o b|| <= tol::kBruteforce over `grid`. Throws EmptyGrid.
bool constancy_bruteforce(const Effect& a, const Effect& b, std::span<const double> grid);
/// The maximal deviation itself, for diagnostics.
double constancy_deviation(const Effect& a, const Effect& b, std::span<const double> grid);

/// ||b(t|a) - b||.
double deviation_norm(const Effect& b, const Effect& a, double t);

/// b + 2(1 - cos lambda t) pbp + (e^{-i lambda t} - 1) pb + (e^{i lambda t} - 1) bp,
/// the a-evolution of b for a = lambda p. Throws NotAProjection.
Effect projection_evolution_closed_form(const Effect& b, double lambda, const Effect& p, double t);

bool is_projection(const Effect& p, double tolerance = tol::kDecision);

}  // namespace qeffects
