#include "qeffects/effect.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qeffects {

double Effect::min_eigenvalue() const noexcept { return spectrum().eigenvalues(0); }

double Effect::max_eigenvalue() const noexcept {
    const auto& ev = spectrum().eigenvalues;
    return ev(ev.size() - 1);
}

RealVector Effect::reported_eigenvalues() const {
    RealVector ev = spectrum().eigenvalues;
    for (Index i = 0; i < ev.size(); ++i) ev(i) = std::clamp(ev(i), 0.0, 1.0);
    return ev;
}

Effect Effect::identity(Index dim) { return validate_effect(ComplexMatrix::Identity(dim, dim)); }

Effect Effect::zero(Index dim) { return validate_effect(ComplexMatrix::Zero(dim, dim)); }

Effect validate_effect(const HermitianOperator& m, double spectrum_tol) {
    auto spectrum = std::make_shared<const SpectralDecomposition>(eigh(m));
    const auto& ev = spectrum->eigenvalues;
    const double lo = ev(0);
    const double hi = ev(ev.size() - 1);
    if (lo < -spectrum_tol) {
        throw Error(ErrorKind::SpectrumOutOfRange,
                    "eigenvalue " + std::to_string(lo) + " below 0", lo);
    }
    if (hi > 1.0 + spectrum_tol) {
        throw Error(ErrorKind::SpectrumOutOfRange,
                    "eigenvalue " + std::to_string(hi) + " above 1", hi);
    }

    const double flush = tol::kSqrtFlush * std::max(1.0, spectrum->norm());
    ComplexMatrix root = spectrum->apply([flush](double lambda) {
        return Complex(lambda <= flush ? 0.0 : std::sqrt(lambda), 0.0);
    });

    auto cache = std::make_shared<const Effect::Cache>(Effect::Cache{std::move(spectrum), std::move(root)});
    return Effect(m, std::move(cache));
}

Effect validate_effect(const ComplexMatrix& m, double spectrum_tol) {
    return validate_effect(HermitianOperator(m), spectrum_tol);
}

State State::maximally_mixed(Index dim) {
    return validate_state(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

State validate_state(const ComplexMatrix& m) {
    HermitianOperator op(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    RealVector ev = solver.eigenvalues();
    if (ev(0) < -tol::kStateSpectrum) {
        throw Error(ErrorKind::NotAState, "negative eigenvalue " + std::to_string(ev(0)), ev(0));
    }
    const double trace = op.matrix().trace().real();
    if (std::abs(trace - 1.0) > tol::kStateTrace) {
        throw Error(ErrorKind::NotAState, "trace " + std::to_string(trace) + " != 1", trace);
    }
    return State(std::move(op), std::move(ev));
}

double probability(const State& rho, const Effect& a) {
    require_same_dim(rho.dim(), a.dim(), "probability");
    const double p = (rho.matrix() * a.matrix()).trace().real();
    if (p < 0.0 && p >= -tol::kEffectSpectrum) return 0.0;
    if (p > 1.0 && p <= 1.0 + tol::kEffectSpectrum) return 1.0;
    return p;
}

Effect sequential_product(const Effect& a, const Effect& b) {
    require_same_dim(a.dim(), b.dim(), "sequential_product");
    const ComplexMatrix& root = a.sqrt();
    return validate_effect(ComplexMatrix(root * b.matrix() * root));
}

bool commutes(const Effect& a, const Effect& b, double tolerance) {
    require_same_dim(a.dim(), b.dim(), "commutes");
    const double scale = std::max(1.0, a.spectrum().norm() * b.spectrum().norm());
    return spectral_norm(commutator(a.matrix(), b.matrix())) <= tolerance * scale;
}

bool verify_coexistence_witness(const Effect& a, const Effect& b, const CoexistenceWitness& w,
                                double tolerance) {
    require_same_dim(a.dim(), b.dim(), "verify_coexistence_witness");
    for (const Effect* member : {&w.a1, &w.b1, &w.c}) {
        require_same_dim(a.dim(), member->dim(), "verify_coexistence_witness");
    }

    const ComplexMatrix total = w.a1.matrix() + w.b1.matrix() + w.c.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(total, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().maxCoeff() > 1.0 + tolerance) return false;

    const double da = spectral_norm(a.matrix() - (w.a1.matrix() + w.c.matrix()));
    const double db = spectral_norm(b.matrix() - (w.b1.matrix() + w.c.matrix()));
    return da <= tolerance && db <= tolerance;
}

CoexistenceWitness commuting_witness(const Effect& a, const Effect& b, double tolerance) {
    if (!commutes(a, b, tolerance)) {
        const double residual = spectral_norm(commutator(a.matrix(), b.matrix()));
        throw Error(ErrorKind::NotCommuting, "commuting_witness requires [a, b] = 0", residual);
    }
    // Symmetrized product: ab is Hermitian only up to the commutator residual.
    const ComplexMatrix ab = 0.5 * (a.matrix() * b.matrix() + b.matrix() * a.matrix());
    return CoexistenceWitness{
        validate_effect(ComplexMatrix(a.matrix() - ab)),
        validate_effect(ComplexMatrix(b.matrix() - ab)),
        validate_effect(ab),
    };
}

State evolve_state(const State& rho, const Effect& a, double t) {
    require_same_dim(rho.dim(), a.dim(), "evolve_state");
    const ComplexMatrix u = a.unitary(t);
    return validate_state(u.adjoint() * rho.matrix() * u);
}

}  // namespace qeffects
