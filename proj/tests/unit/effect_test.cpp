#include "qeffects/effect.hpp"

#include "qeffects/evolution.hpp"
#include "test_support.hpp"

using namespace qeffects;
using namespace qeffects::testing;

namespace {

const ComplexMatrix kA = diag({1.0, 0.5});
const ComplexMatrix kB = mat2(0.5, 0.5, 0.5, 0.5);

}  // namespace

TEST(ValidateEffect, AcceptsExampleEffects) {
    const Effect a = validate_effect(kA);
    EXPECT_DOUBLE_EQ(a.min_eigenvalue(), 0.5);
    EXPECT_DOUBLE_EQ(a.max_eigenvalue(), 1.0);
    const Effect b = validate_effect(kB);
    EXPECT_NEAR(b.min_eigenvalue(), 0.0, 1e-15);
    EXPECT_NEAR(b.max_eigenvalue(), 1.0, 1e-15);
    EXPECT_NO_THROW(validate_effect(ComplexMatrix::Identity(3, 3)));
}

TEST(ValidateEffect, RejectsScaledIdentity) {
    try {
        validate_effect(ComplexMatrix(2.0 * ComplexMatrix::Identity(2, 2)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SpectrumOutOfRange);
        EXPECT_DOUBLE_EQ(e.value(), 2.0);
    }
}

TEST(ValidateEffect, RejectsNegativeAndNonHermitian) {
    try {
        validate_effect(diag({-0.1, 0.5}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SpectrumOutOfRange);
        EXPECT_DOUBLE_EQ(e.value(), -0.1);
    }
    try {
        validate_effect(mat2(0.5, 0.1, 0.0, 0.5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonHermitian);
    }
}

TEST(ValidateEffect, ClampsReportedEigenvaluesWithinTolerance) {
    const Effect e = validate_effect(diag({-5e-10, 1.0 + 5e-10}));
    EXPECT_DOUBLE_EQ(e.min_eigenvalue(), -5e-10);
    EXPECT_DOUBLE_EQ(e.max_eigenvalue(), 1.0 + 5e-10);
    const RealVector shown = e.reported_eigenvalues();
    EXPECT_EQ(shown(0), 0.0);
    EXPECT_EQ(shown(1), 1.0);
    EXPECT_THROW(validate_effect(diag({-2e-9, 0.5})), Error);
}

TEST(ValidateState, Checks) {
    EXPECT_NO_THROW(validate_state(diag({0.25, 0.75})));
    try {
        validate_state(diag({0.5, 0.6}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAState);
    }
    EXPECT_THROW(validate_state(diag({1.5, -0.5})), Error);
}

TEST(Probability, Values) {
    Rng rng(1);
    const State rho = random_state(3, rng);
    EXPECT_NEAR(probability(rho, Effect::identity(3)), 1.0, 1e-14);
    EXPECT_NEAR(probability(State::maximally_mixed(2), validate_effect(diag({1.0, 0.0}))), 0.5, 1e-16);
    // tr(diag(1, 0) diag(1, 1/2)) = 1.
    EXPECT_EQ(probability(validate_state(diag({1.0, 0.0})), validate_effect(kA)), 1.0);
    EXPECT_THROW(probability(rho, Effect::identity(2)), Error);
}

TEST(SequentialProduct, IdentityAbsorbs) {
    Rng rng(2);
    const Effect a = random_effect(4, rng);
    EXPECT_MATRIX_NEAR(sequential_product(a, Effect::identity(4)).matrix(), a.matrix(), 1e-14);
    EXPECT_MATRIX_NEAR(sequential_product(Effect::identity(4), a).matrix(), a.matrix(), 1e-14);
}

TEST(SequentialProduct, ExampleOnePair) {
    // diag(1, s) b diag(1, s) with s = 2^{-1/2}.
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix expected = 0.5 * mat2(1.0, s, s, 0.5);
    EXPECT_MATRIX_NEAR(sequential_product(validate_effect(kA), validate_effect(kB)).matrix(), expected, 1e-15);
}

TEST(SequentialProduct, ScaledProjectionIsLambdaPbp) {
    Rng rng(3);
    const Effect p = random_projection(3, 2, rng);
    const Effect b = random_effect(3, rng);
    const double lambda = 0.35;
    const Effect a = validate_effect(ComplexMatrix(lambda * p.matrix()));
    EXPECT_MATRIX_NEAR(sequential_product(a, b).matrix(), lambda * p.matrix() * b.matrix() * p.matrix(), 1e-14);
}

TEST(SequentialProduct, DimensionMismatch) {
    EXPECT_THROW(sequential_product(Effect::identity(2), Effect::identity(3)), Error);
}

TEST(SequentialProductProperty, DominatedByFirstFactorAndCommutingCase) {
    Rng rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const Index dim = 2 + trial % 5;
        const Effect a = random_effect(dim, rng);
        const Effect b = random_effect(dim, rng);
        const Effect ab = sequential_product(a, b);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> gap(ab.matrix() - a.matrix(), Eigen::EigenvaluesOnly);
        EXPECT_LE(gap.eigenvalues().maxCoeff(), 1e-9);

        const auto [c, d] = random_commuting_pair(dim, rng);
        EXPECT_MATRIX_NEAR(sequential_product(c, d).matrix(), c.matrix() * d.matrix(), 1e-12);
    }
}

TEST(SequentialProductProperty, SymmetricIffCommuting) {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Index dim = 2 + trial % 5;
        const bool commuting = trial % 2 == 0;
        auto [a, b] = commuting ? random_commuting_pair(dim, rng)
                                : std::pair{random_effect(dim, rng), random_effect(dim, rng)};
        const double asym = spectral_norm(sequential_product(a, b).matrix() - sequential_product(b, a).matrix());
        EXPECT_EQ(commutes(a, b), commuting);
        EXPECT_EQ(asym <= 1e-8, commutes(a, b)) << "asymmetry " << asym;
    }
}

TEST(Commutes, Examples) {
    EXPECT_TRUE(commutes(validate_effect(diag({0.2, 0.9})), validate_effect(diag({0.7, 0.1}))));
    EXPECT_FALSE(commutes(validate_effect(kA), validate_effect(kB)));
    Rng rng(6);
    const Effect a = random_effect(4, rng);
    EXPECT_TRUE(commutes(a, validate_effect(ComplexMatrix(a.matrix() * a.matrix()))));
}

TEST(Coexistence, SelfWitness) {
    Rng rng(7);
    const Effect a = random_effect(3, rng);
    const CoexistenceWitness w{Effect::zero(3), Effect::zero(3), a};
    EXPECT_TRUE(verify_coexistence_witness(a, a, w));
}

TEST(Coexistence, ViolatingWitnessRejected) {
    const Effect a = Effect::identity(2);
    // a1 + b1 + c = 2I although a = a1 + c and b = b1 + c hold.
    const CoexistenceWitness w{Effect::zero(2), Effect::identity(2), Effect::identity(2)};
    EXPECT_FALSE(verify_coexistence_witness(a, a, w));
    const CoexistenceWitness wrong_sum{Effect::zero(2), Effect::zero(2), validate_effect(diag({0.5, 0.5}))};
    EXPECT_FALSE(verify_coexistence_witness(a, a, wrong_sum));
}

TEST(Coexistence, CommutingWitnessExamples) {
    Rng rng(8);
    const Effect a = random_effect(3, rng);
    const CoexistenceWitness w = commuting_witness(a, Effect::identity(3));
    EXPECT_MATRIX_NEAR(w.a1.matrix(), ComplexMatrix::Zero(3, 3), 1e-14);
    EXPECT_MATRIX_NEAR(w.b1.matrix(), ComplexMatrix::Identity(3, 3) - a.matrix(), 1e-14);
    EXPECT_MATRIX_NEAR(w.c.matrix(), a.matrix(), 1e-14);

    const Effect p = random_projection(3, 1, rng);
    const CoexistenceWitness wp = commuting_witness(p, p);
    EXPECT_MATRIX_NEAR(wp.a1.matrix(), ComplexMatrix::Zero(3, 3), 1e-14);
    EXPECT_MATRIX_NEAR(wp.b1.matrix(), ComplexMatrix::Zero(3, 3), 1e-14);
    EXPECT_MATRIX_NEAR(wp.c.matrix(), p.matrix(), 1e-14);

    const CoexistenceWitness wd = commuting_witness(validate_effect(kA), validate_effect(diag({0.5, 0.5})));
    EXPECT_MATRIX_NEAR(wd.a1.matrix(), diag({0.5, 0.25}), 1e-16);
    EXPECT_MATRIX_NEAR(wd.b1.matrix(), diag({0.0, 0.25}), 1e-16);
    EXPECT_MATRIX_NEAR(wd.c.matrix(), diag({0.5, 0.25}), 1e-16);
}

TEST(Coexistence, CommutingWitnessRequiresCommutation) {
    try {
        commuting_witness(validate_effect(kA), validate_effect(kB));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCommuting);
    }
}

TEST(CoexistenceProperty, CommutingWitnessAlwaysVerifies) {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const auto [a, b] = random_commuting_pair(2 + trial % 5, rng);
        EXPECT_TRUE(verify_coexistence_witness(a, b, commuting_witness(a, b)));
    }
}

TEST(EvolveState, Basics) {
    Rng rng(10);
    const State rho = random_state(3, rng);
    const Effect a = random_effect(3, rng);
    EXPECT_MATRIX_NEAR(evolve_state(rho, a, 0.0).matrix(), rho.matrix(), 0.0);

    const State diag_rho = validate_state(diag({0.3, 0.7}));
    EXPECT_MATRIX_NEAR(evolve_state(diag_rho, validate_effect(kA), 4.2).matrix(), diag_rho.matrix(), 1e-15);

    const State evolved = evolve_state(rho, a, 3.3);
    EXPECT_NEAR(evolved.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_LE((evolved.eigenvalues() - rho.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(EvolveStateProperty, DualityWithEffectEvolution) {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Index dim = 2 + trial % 5;
        const State rho = random_state(dim, rng);
        const Effect a = random_effect(dim, rng);
        const Effect b = random_effect(dim, rng);
        const double t = uniform(rng, -10, 10);
        const double lhs = (evolve_state(rho, a, t).matrix() * b.matrix()).trace().real();
        const double rhs = (rho.matrix() * effect_evolution(b, a, t).matrix()).trace().real();
        EXPECT_NEAR(lhs, rhs, 1e-10);
    }
}
