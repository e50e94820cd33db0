#include "qeffects/evolution.hpp"

#include <cmath>
#include <string>

namespace qeffects {

namespace {

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& x) {
    return u * x * u.adjoint();
}

}  // namespace

Effect effect_evolution(const Effect& b, const Effect& a, double t) {
    require_same_dim(b.dim(), a.dim(), "effect_evolution");
    if (t == 0.0) return b;
    return validate_effect(conjugate(a.unitary(t), b.matrix()));
}

HermitianOperator evolution_derivative(const Effect& b, const Effect& a, double t, int n) {
    require_same_dim(b.dim(), a.dim(), "evolution_derivative");
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "derivative order must be >= 1", n);

    ComplexMatrix nested = conjugate(a.unitary(t), b.matrix());
    Complex prefactor{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        nested = commutator(nested, a.matrix());
        prefactor *= Complex{0.0, 1.0};
    }
    return HermitianOperator(prefactor * nested);
}

Effect time_seq_product(const Effect& a, const Effect& b, double t) {
    require_same_dim(a.dim(), b.dim(), "time_seq_product");
    const Effect product = sequential_product(a, b);
    if (t == 0.0) return product;

    const ComplexMatrix u = a.unitary(t);
    const ComplexMatrix evolved_product = conjugate(u, product.matrix());
    const ComplexMatrix& root = a.sqrt();
    const ComplexMatrix product_of_evolved = root * conjugate(u, b.matrix()) * root;

    const double mismatch = max_abs_entry(evolved_product - product_of_evolved);
    if (mismatch > tol::kIdentity) {
        throw Error(ErrorKind::NumericalInconsistency,
                    "(a o b)(t|a) and a o b(t|a) disagree by " + std::to_string(mismatch), mismatch);
    }
    return validate_effect(evolved_product);
}

HermitianOperator seq_product_derivative(const Effect& a, const Effect& b, double t) {
    const Effect evolved = time_seq_product(a, b, t);
    return HermitianOperator(Complex{0.0, 1.0} * commutator(evolved.matrix(), a.matrix()));
}

std::optional<ScaledProjectionDecomposition> classify_scaled_projection(const Effect& a) {
    const SpectralDecomposition& s = a.spectrum();
    const double zero_band = tol::kClustering * std::max(1.0, s.norm());

    std::optional<std::size_t> nonzero;
    for (std::size_t k = 0; k < s.clusters.size(); ++k) {
        if (std::abs(s.cluster_value(k)) <= zero_band) continue;
        if (nonzero) return std::nullopt;
        nonzero = k;
    }
    if (!nonzero) return std::nullopt;

    return ScaledProjectionDecomposition{s.cluster_value(*nonzero),
                                         validate_effect(s.cluster_projection(*nonzero))};
}

const char* to_string(ConstancyReason reason) {
    switch (reason) {
        case ConstancyReason::Commuting: return "Commuting";
        case ConstancyReason::ScaledProjection: return "ScaledProjection";
        case ConstancyReason::Neither: return "Neither";
    }
    return "Unknown";
}

ConstancyReport constancy_classifier(const Effect& a, const Effect& b, double tolerance) {
    require_same_dim(a.dim(), b.dim(), "constancy_classifier");
    const Effect product = sequential_product(a, b);

    ConstancyReport report;
    report.residual = spectral_norm(commutator(product.matrix(), a.matrix()));
    report.constant = report.residual <= tolerance;
    if (!report.constant) return report;

    if (commutes(a, b, tolerance)) {
        report.reason = ConstancyReason::Commuting;
        return report;
    }
    if (auto decomposition = classify_scaled_projection(a)) {
        report.reason = ConstancyReason::ScaledProjection;
        report.scaled_projection = std::move(decomposition);
        return report;
    }
    throw Error(ErrorKind::ClassifierInconsistency,
                "[a o b, a] vanishes but a neither commutes with b nor is a scaled projection",
                report.residual);
}

double constancy_deviation(const Effect& a, const Effect& b, std::span<const double> grid) {
    require_same_dim(a.dim(), b.dim(), "constancy_bruteforce");
    if (grid.empty()) throw Error(ErrorKind::EmptyGrid, "time grid is empty");

    const ComplexMatrix& root = a.sqrt();
    const ComplexMatrix product = root * b.matrix() * root;
    double worst = 0.0;
    for (double t : grid) {
        const ComplexMatrix evolved = conjugate(a.unitary(t), product);
        worst = std::max(worst, spectral_norm(evolved - product));
    }
    return worst;
}

bool constancy_bruteforce(const Effect& a, const Effect& b, std::span<const double> grid) {
    return constancy_deviation(a, b, grid) <= tol::kBruteforce;
}

double deviation_norm(const Effect& b, const Effect& a, double t) {
    require_same_dim(b.dim(), a.dim(), "deviation_norm");
    if (t == 0.0) return 0.0;
    const Effect evolved = effect_evolution(b, a, t);
    return operator_norm(HermitianOperator(evolved.matrix() - b.matrix()));
}

bool is_projection(const Effect& p, double tolerance) {
    const ComplexMatrix& m = p.matrix();
    return max_abs_entry(m * m - m) <= tolerance && p.max_eigenvalue() > 0.5;
}

Effect projection_evolution_closed_form(const Effect& b, double lambda, const Effect& p, double t) {
    require_same_dim(b.dim(), p.dim(), "projection_evolution_closed_form");
    if (!is_projection(p)) {
        throw Error(ErrorKind::NotAProjection, "p must be a nonzero projection");
    }
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw Error(ErrorKind::SpectrumOutOfRange, "lambda must lie in (0, 1]", lambda);
    }

    const ComplexMatrix& pm = p.matrix();
    const ComplexMatrix& bm = b.matrix();
    const double phase = lambda * t;
    const Complex down = std::polar(1.0, -phase) - 1.0;
    const Complex up = std::polar(1.0, phase) - 1.0;

    ComplexMatrix out = bm + 2.0 * (1.0 - std::cos(phase)) * (pm * bm * pm);
    out += down * (pm * bm);
    out += up * (bm * pm);
    return validate_effect(out);
}

}  // namespace qeffects
