#pragma once

#include <memory>

#include "qeffects/operator.hpp"
#include "qeffects/tolerances.hpp"

namespace qeffects {

/// An operator 0 <= a <= I. Construction goes through validate_effect, which
/// also caches the spectral decomposition and the positive square root; every
/// operation that produces a new effect re-validates its result.
class Effect {
public:
    const HermitianOperator& op() const noexcept { return op_; }
    const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
    Index dim() const noexcept { return op_.dim(); }

    const SpectralDecomposition& spectrum() const noexcept { return *cache_->spectrum; }
    /// a^{1/2}. Eigenvalues within tol::kSqrtFlush of zero map to exactly 0.
    const ComplexMatrix& sqrt() const noexcept { return cache_->sqrt; }
    /// e^{-ita}, computed from the cached decomposition.
    ComplexMatrix unitary(double t) const { return unitary_exp(spectrum(), t); }

    /// Raw eigenvalues as computed.
    double min_eigenvalue() const noexcept;
    double max_eigenvalue() const noexcept;
    /// Eigenvalues for display: values within the effect tolerance outside
    /// [0, 1] are clamped onto the boundary.
    RealVector reported_eigenvalues() const;

    static Effect identity(Index dim);
    static Effect zero(Index dim);

private:
    struct Cache {
        std::shared_ptr<const SpectralDecomposition> spectrum;
        ComplexMatrix sqrt;
    };

    Effect(HermitianOperator op, std::shared_ptr<const Cache> cache)
        : op_(std::move(op)), cache_(std::move(cache)) {}

    friend Effect validate_effect(const HermitianOperator& m, double spectrum_tol);

    HermitianOperator op_;
    std::shared_ptr<const Cache> cache_;
};

/// Throws NonHermitian, or SpectrumOutOfRange carrying the offending eigenvalue.
Effect validate_effect(const HermitianOperator& m, double spectrum_tol = tol::kEffectSpectrum);
Effect validate_effect(const ComplexMatrix& m, double spectrum_tol = tol::kEffectSpectrum);

/// Positive semidefinite, unit trace.
class State {
public:
    const HermitianOperator& op() const noexcept { return op_; }
    const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
    Index dim() const noexcept { return op_.dim(); }
    const RealVector& eigenvalues() const noexcept { return eigenvalues_; }

    static State maximally_mixed(Index dim);

private:
    State(HermitianOperator op, RealVector eigenvalues)
        : op_(std::move(op)), eigenvalues_(std::move(eigenvalues)) {}

    friend State validate_state(const ComplexMatrix& m);

    HermitianOperator op_;
    RealVector eigenvalues_;
};

/// Throws NonHermitian or NotAState.
State validate_state(const ComplexMatrix& m);

/// a = a1 + c, b = b1 + c with a1 + b1 + c <= I. Plain data; the verifier
/// checks the invariant so that violating witnesses can be represented.
struct CoexistenceWitness {
    Effect a1;
    Effect b1;
    Effect c;
};

/// tr(rho a), clamped onto [0, 1] when within tolerance of the boundary.
double probability(const State& rho, const Effect& a);

/// a o b = a^{1/2} b a^{1/2}.
Effect sequential_product(const Effect& a, const Effect& b);

/// ||ab - ba|| <= tolerance * max(1, ||a|| ||b||).
bool commutes(const Effect& a, const Effect& b, double tolerance = tol::kDecision);

bool verify_coexistence_witness(const Effect& a, const Effect& b, const CoexistenceWitness& w,
                                double tolerance = tol::kDecision);

/// (a - ab, b - ab, ab). Throws NotCommuting.
CoexistenceWitness commuting_witness(const Effect& a, const Effect& b,
                                     double tolerance = tol::kDecision);

/// e^{ita} rho e^{-ita}.
State evolve_state(const State& rho, const Effect& a, double t);

}  // namespace qeffects
