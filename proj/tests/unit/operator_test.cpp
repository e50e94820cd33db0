#include "qeffects/operator.hpp"

#include "test_support.hpp"

using namespace qeffects;
using namespace qeffects::testing;

TEST(Eigh, DiagonalExampleEffect) {
    const auto s = eigh(HermitianOperator(diag({1.0, 0.5})));
    EXPECT_DOUBLE_EQ(s.eigenvalues(0), 0.5);
    EXPECT_DOUBLE_EQ(s.eigenvalues(1), 1.0);
    // Standard basis up to phase: eigenvalue 1/2 belongs to e_1.
    EXPECT_NEAR(std::abs(s.eigenvectors(1, 0)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(s.eigenvectors(0, 1)), 1.0, 1e-14);
    EXPECT_EQ(s.clusters.size(), 2u);
}

TEST(Eigh, ZeroMatrix) {
    const auto s = eigh(HermitianOperator::zero(3));
    EXPECT_EQ(s.eigenvalues, RealVector::Zero(3));
    EXPECT_MATRIX_NEAR(s.eigenvectors, ComplexMatrix::Identity(3, 3), 0.0);
    ASSERT_EQ(s.clusters.size(), 1u);
    EXPECT_EQ(s.clusters[0].size(), 3u);
}

TEST(Eigh, RankOneHalfOnes) {
    // det(M - x) = x^2 - x for M = (1/2)[[1, 1], [1, 1]].
    const auto s = eigh(HermitianOperator(mat2(0.5, 0.5, 0.5, 0.5)));
    EXPECT_NEAR(s.eigenvalues(0), 0.0, 1e-15);
    EXPECT_NEAR(s.eigenvalues(1), 1.0, 1e-15);
}

TEST(Eigh, RejectsNonHermitian) {
    try {
        HermitianOperator(mat2(1.0, 0.5, 0.0, 1.0));
        FAIL() << "expected NonHermitian";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonHermitian);
        EXPECT_DOUBLE_EQ(e.value(), 0.5);
    }
}

TEST(Eigh, RejectsNonSquareAndNonFinite) {
    EXPECT_THROW(HermitianOperator(ComplexMatrix::Zero(2, 3)), Error);
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    try {
        HermitianOperator{m};
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonFinite);
    }
}

TEST(Eigh, SymmetrizesTinyAsymmetry) {
    ComplexMatrix m = mat2(1.0, Complex(0.3, 0.1), Complex(0.3, -0.1), 0.2);
    m(0, 1) += 1e-12;
    const HermitianOperator h(m);
    EXPECT_EQ(hermiticity_residual(h.matrix()), 0.0);
    EXPECT_NEAR(h.input_residual(), 1e-12, 1e-16);
}

TEST(Eigh, ClustersDegenerateEigenvalues) {
    Rng rng(7);
    const ComplexMatrix u = random_unitary(4, rng);
    RealVector v(4);
    v << 0.2, 0.2 + 1e-12, 0.7, 0.7;
    const auto s = eigh(HermitianOperator(with_spectrum(u, v)));
    ASSERT_EQ(s.clusters.size(), 2u);
    EXPECT_NEAR(s.cluster_value(0), 0.2, 1e-12);
    const ComplexMatrix p = s.cluster_projection(1);
    EXPECT_MATRIX_NEAR(p * p, p, 1e-12);
    EXPECT_NEAR(p.trace().real(), 2.0, 1e-12);
}

TEST(EighProperty, ReconstructionAndUnitarity) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Index dim = 2 + trial % 7;
        const HermitianOperator m(random_hermitian(dim, rng));
        const auto s = eigh(m);
        const double scale = std::max(1.0, operator_norm(m));
        EXPECT_LE(spectral_norm(m.matrix() - s.reconstruct()), 1e-12 * scale);
        EXPECT_LE(spectral_norm(s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::Identity(dim, dim)),
                  1e-10);
        for (Index i = 1; i < dim; ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
    }
}

TEST(MatrixFunction, IdentityMap) {
    const HermitianOperator a(diag({1.0, 0.5}));
    EXPECT_MATRIX_NEAR(matrix_function(a, [](double x) { return Complex(x); }), a.matrix(), 1e-15);
}

TEST(MatrixFunction, SquareRootOfDiagonal) {
    const HermitianOperator a(diag({1.0, 0.5}));
    const auto root = matrix_function(a, [](double x) { return Complex(std::sqrt(x)); });
    EXPECT_MATRIX_NEAR(root, diag({1.0, 1.0 / std::sqrt(2.0)}), 1e-15);
}

TEST(MatrixFunction, PhaseOfExampleEffect) {
    const HermitianOperator a(diag({1.0, 0.5}));
    const double t = 1.7;
    const auto u = matrix_function(a, [t](double x) { return std::exp(-kI * t * x); });
    EXPECT_MATRIX_NEAR(u, diag({std::exp(-kI * t), std::exp(-kI * t / 2.0)}), 1e-15);
}

TEST(MatrixFunction, RealFunctionGivesHermitian) {
    Rng rng(3);
    const HermitianOperator m(random_hermitian(5, rng));
    const auto c = matrix_function(m, [](double x) { return Complex(std::cos(x)); });
    EXPECT_LE(hermiticity_residual(c), 1e-13);
}

TEST(UnitaryExp, ZeroTimeIsExactIdentity) {
    Rng rng(5);
    const HermitianOperator a(random_hermitian(4, rng));
    EXPECT_EQ(unitary_exp(a, 0.0), ComplexMatrix::Identity(4, 4));
}

TEST(UnitaryExp, Diagonal) {
    const double t = -2.3;
    EXPECT_MATRIX_NEAR(unitary_exp(HermitianOperator(diag({1.0, 0.5})), t),
                       diag({std::exp(-kI * t), std::exp(-kI * t / 2.0)}), 1e-15);
}

TEST(UnitaryExp, ScaledProjection) {
    Rng rng(9);
    const ComplexMatrix u = random_unitary(3, rng);
    RealVector v(3);
    v << 1.0, 0.0, 0.0;
    const ComplexMatrix p = with_spectrum(u, v);
    const double lambda = 0.6;
    const double t = 2.1;
    const ComplexMatrix expected =
        std::exp(-kI * lambda * t) * p + (ComplexMatrix::Identity(3, 3) - p);
    EXPECT_MATRIX_NEAR(unitary_exp(HermitianOperator(lambda * p), t), expected, 1e-14);
}

TEST(UnitaryExpProperty, GroupLawUnitarityAndInverse) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Index dim = 2 + trial % 7;
        const HermitianOperator a(random_hermitian(dim, rng));
        const double t1 = uniform(rng, -10, 10);
        const double t2 = uniform(rng, -10, 10);
        const ComplexMatrix u1 = unitary_exp(a, t1);
        const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
        EXPECT_LE(spectral_norm(u1.adjoint() * u1 - id), 1e-10);
        EXPECT_LE(spectral_norm(u1 * unitary_exp(a, t2) - unitary_exp(a, t1 + t2)), 1e-10);
        // exp(-it.) composed with its inverse is the identity map on M.
        const ComplexMatrix m = random_hermitian(dim, rng);
        EXPECT_LE(max_diff(unitary_exp(a, -t1) * (u1 * m * u1.adjoint()) * unitary_exp(a, -t1).adjoint(), m),
                  1e-10 * std::max(1.0, max_abs_entry(m)));
    }
}

TEST(Commutator, Basics) {
    Rng rng(17);
    const ComplexMatrix a = gaussian_matrix(3, rng);
    const ComplexMatrix b = gaussian_matrix(3, rng);
    EXPECT_EQ(commutator(a, a), ComplexMatrix::Zero(3, 3));
    EXPECT_EQ(commutator(diag({1.0, 2.0}), diag({3.0, 0.5})), ComplexMatrix::Zero(2, 2));
    EXPECT_MATRIX_NEAR(commutator(a, b), -commutator(b, a), 0.0);
    EXPECT_MATRIX_NEAR(commutator(a, b), a * b - b * a, 0.0);
}

TEST(Commutator, DimensionMismatch) {
    try {
        commutator(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(Commutator, ExampleOneDerivativeMatrix) {
    const double t = 0.9;
    const ComplexMatrix bt = 0.5 * mat2(1.0, std::exp(-kI * t / 2.0), std::exp(kI * t / 2.0), 1.0);
    const ComplexMatrix expected = (kI / 4.0) * mat2(0.0, -std::exp(-kI * t / 2.0), std::exp(kI * t / 2.0), 0.0);
    EXPECT_MATRIX_NEAR(kI * commutator(bt, diag({1.0, 0.5})), expected, 1e-16);
}

TEST(OperatorNorm, Values) {
    EXPECT_EQ(operator_norm(HermitianOperator::zero(3)), 0.0);
    const ComplexMatrix d = (kI / 4.0) * mat2(0.0, -std::exp(-kI * 0.4), std::exp(kI * 0.4), 0.0);
    EXPECT_NEAR(operator_norm(HermitianOperator(d)), 0.25, 1e-15);
    EXPECT_NEAR(operator_norm(HermitianOperator(diag({-3.0, 2.0}))), 3.0, 0.0);
}

TEST(OperatorNorm, ExampleTwoDeviation) {
    const double lambda = 0.7;
    const double t = 2.2;
    const Complex b12(0.2, -0.1);
    const ComplexMatrix d = mat2(0.0, (std::exp(-kI * lambda * t) - 1.0) * b12,
                                 (std::exp(kI * lambda * t) - 1.0) * std::conj(b12), 0.0);
    EXPECT_NEAR(operator_norm(HermitianOperator(d)),
                std::sqrt(2.0 * (1.0 - std::cos(lambda * t))) * std::abs(b12), 1e-15);
}

TEST(OperatorNormProperty, UnitaryInvariance) {
    Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const Index dim = 2 + trial % 7;
        const HermitianOperator m(random_hermitian(dim, rng));
        const ComplexMatrix u = unitary_exp(HermitianOperator(random_hermitian(dim, rng)), uniform(rng, -5, 5));
        const double scale = std::max(1.0, operator_norm(m));
        EXPECT_NEAR(operator_norm(HermitianOperator(u * m.matrix() * u.adjoint())), operator_norm(m), 1e-12 * scale);
        EXPECT_NEAR(spectral_norm(m.matrix()), operator_norm(m), 1e-12 * scale);
    }
}
