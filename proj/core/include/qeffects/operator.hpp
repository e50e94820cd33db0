#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qeffects/error.hpp"

namespace qeffects {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Scalar map applied to eigenvalues by matrix_function.
using SpectralMap = std::function<Complex(double)>;

/// Largest |M_ij - conj(M_ji)|.
double hermiticity_residual(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);

/// Throws DimensionMismatch unless `lhs == rhs`; `context` names the caller.
void require_same_dim(Index lhs, Index rhs, std::string_view context);

/// A square, finite matrix equal to its adjoint within
/// tol::kHermiticity * max(1, max |M_ij|). The stored matrix is the
/// symmetrized (M + M^dagger) / 2.
class HermitianOperator {
public:
    explicit HermitianOperator(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Index dim() const noexcept { return m_.rows(); }
    /// Residual of the input before symmetrization.
    double input_residual() const noexcept { return input_residual_; }

    static HermitianOperator identity(Index dim);
    static HermitianOperator zero(Index dim);

private:
    ComplexMatrix m_;
    double input_residual_ = 0.0;
};

/// M = U diag(eigenvalues) U^dagger with eigenvalues ascending.
///
/// `clusters` groups eigenvalue indices into numerically distinct values:
/// consecutive eigenvalues closer than tol::kClustering * max(1, ||M||)
/// share a cluster. Spectral projections are formed per cluster.
struct SpectralDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
    std::vector<std::vector<Index>> clusters;

    Index dim() const noexcept { return eigenvalues.size(); }
    double norm() const;
    /// Mean eigenvalue of cluster `k`.
    double cluster_value(std::size_t k) const;
    /// Orthogonal projection onto the eigenspace of cluster `k`.
    ComplexMatrix cluster_projection(std::size_t k) const;
    /// U diag(f(lambda_i)) U^dagger.
    ComplexMatrix apply(const SpectralMap& f) const;
    ComplexMatrix reconstruct() const;
};

SpectralDecomposition eigh(const HermitianOperator& m);

ComplexMatrix matrix_function(const HermitianOperator& m, const SpectralMap& f);

/// e^{-ita}. Returns the identity exactly at t == 0.
ComplexMatrix unitary_exp(const HermitianOperator& a, double t);
ComplexMatrix unitary_exp(const SpectralDecomposition& a, double t);

/// [X, Y] = XY - YX.
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// max_i |lambda_i(M)|.
double operator_norm(const HermitianOperator& m);

/// Largest singular value; agrees with operator_norm on Hermitian input and
/// is used for commutators and other non-Hermitian intermediates.
double spectral_norm(const ComplexMatrix& m);

}  // namespace qeffects
