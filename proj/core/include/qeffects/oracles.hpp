#pragma once

#include <complex>
#include <utility>

#include "qeffects/effect.hpp"

// Closed-form qubit references. Nothing in here calls into the evolution
// module: every value is written out from its displayed formula so the
// generic code can be checked against it.
namespace qeffects::oracles {

/// a = diag(1, 1/2).
ComplexMatrix example1_a();
/// b = (1/2) [[1, 1], [1, 1]].
ComplexMatrix example1_b();

/// (1/2) [[1, e^{-it/2}], [e^{it/2}, 1]].
ComplexMatrix example1_evolution(double t);
/// (i/4) [[0, -e^{-it/2}], [e^{it/2}, 0]].
ComplexMatrix example1_derivative(double t);
/// (-1/4, +1/4) for every t.
std::pair<double, double> example1_derivative_eigs();

struct QubitExampleParams {
    double lambda = 1.0;
    double b11 = 0.5;
    double b22 = 0.5;
    std::complex<double> b12{0.0, 0.0};
};

/// [[b11, b12], [conj(b12), b22]], validated as an effect.
Effect example2_b(const QubitExampleParams& params);
/// lambda * diag(1, 0).
ComplexMatrix example2_a(const QubitExampleParams& params);
/// [[b11, e^{-i lambda t} b12], [e^{i lambda t} conj(b12), b22]].
ComplexMatrix example2_evolution(const QubitExampleParams& params, double t);
/// sqrt(2 (1 - cos lambda t)) |b12|.
double example2_deviation(const QubitExampleParams& params, double t);
/// (-lambda |b12|, +lambda |b12|).
std::pair<double, double> example2_derivative_eigs(const QubitExampleParams& params);

/// lambda p b p for a projection p, independent of t. Throws NotAProjection.
Effect example3_constant_product(double lambda, const Effect& p, const Effect& b, double t);

}  // namespace qeffects::oracles
