#include "qeffects/oracles.hpp"

#include <cmath>

namespace qeffects::oracles {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

ComplexMatrix qubit(C m00, C m01, C m10, C m11) {
    ComplexMatrix m(2, 2);
    m << m00, m01, m10, m11;
    return m;
}

}  // namespace

ComplexMatrix example1_a() { return qubit(1.0, 0.0, 0.0, 0.5); }

ComplexMatrix example1_b() { return qubit(0.5, 0.5, 0.5, 0.5); }

ComplexMatrix example1_evolution(double t) {
    const C down = std::exp(-kI * t / 2.0);
    const C up = std::exp(kI * t / 2.0);
    return 0.5 * qubit(1.0, down, up, 1.0);
}

ComplexMatrix example1_derivative(double t) {
    const C down = std::exp(-kI * t / 2.0);
    const C up = std::exp(kI * t / 2.0);
    return (kI / 4.0) * qubit(0.0, -down, up, 0.0);
}

std::pair<double, double> example1_derivative_eigs() { return {-0.25, 0.25}; }

Effect example2_b(const QubitExampleParams& params) {
    return validate_effect(qubit(params.b11, params.b12, std::conj(params.b12), params.b22));
}

ComplexMatrix example2_a(const QubitExampleParams& params) {
    return qubit(params.lambda, 0.0, 0.0, 0.0);
}

ComplexMatrix example2_evolution(const QubitExampleParams& params, double t) {
    const C phase = std::exp(-kI * params.lambda * t);
    return qubit(params.b11, phase * params.b12, std::conj(phase) * std::conj(params.b12),
                 params.b22);
}

double example2_deviation(const QubitExampleParams& params, double t) {
    return std::sqrt(2.0 * (1.0 - std::cos(params.lambda * t))) * std::abs(params.b12);
}

std::pair<double, double> example2_derivative_eigs(const QubitExampleParams& params) {
    const double magnitude = params.lambda * std::abs(params.b12);
    return {-magnitude, magnitude};
}

Effect example3_constant_product(double lambda, const Effect& p, const Effect& b, double /*t*/) {
    require_same_dim(p.dim(), b.dim(), "example3_constant_product");
    const ComplexMatrix& pm = p.matrix();
    if ((pm * pm - pm).cwiseAbs().maxCoeff() > tol::kDecision) {
        throw Error(ErrorKind::NotAProjection, "p must satisfy p^2 = p");
    }
    return validate_effect(ComplexMatrix(lambda * pm * b.matrix() * pm));
}

}  // namespace qeffects::oracles
