#include "qeffects/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qeffects/tolerances.hpp"

namespace qeffects {

double hermiticity_residual(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_entry(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

void require_same_dim(Index lhs, Index rhs, std::string_view context) {
    if (lhs != rhs) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(context) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
    }
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorKind::NonSquare,
                    "expected a nonempty square matrix, got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    if (!m.allFinite()) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");

    input_residual_ = hermiticity_residual(m);
    const double bound = tol::kHermiticity * std::max(1.0, max_abs_entry(m));
    if (input_residual_ > bound) {
        throw Error(ErrorKind::NonHermitian,
                    "max |M - M^dagger| = " + std::to_string(input_residual_), input_residual_);
    }
    m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::identity(Index dim) {
    return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Index dim) {
    return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

double SpectralDecomposition::norm() const {
    if (eigenvalues.size() == 0) return 0.0;
    return std::max(std::abs(eigenvalues(0)), std::abs(eigenvalues(eigenvalues.size() - 1)));
}

double SpectralDecomposition::cluster_value(std::size_t k) const {
    const auto& members = clusters.at(k);
    double sum = 0.0;
    for (Index i : members) sum += eigenvalues(i);
    return sum / static_cast<double>(members.size());
}

ComplexMatrix SpectralDecomposition::cluster_projection(std::size_t k) const {
    const auto& members = clusters.at(k);
    ComplexMatrix p = ComplexMatrix::Zero(dim(), dim());
    for (Index i : members) {
        const auto v = eigenvectors.col(i);
        p.noalias() += v * v.adjoint();
    }
    return p;
}

ComplexMatrix SpectralDecomposition::apply(const SpectralMap& f) const {
    Eigen::VectorXcd values(dim());
    for (Index i = 0; i < dim(); ++i) values(i) = f(eigenvalues(i));
    return eigenvectors * values.asDiagonal() * eigenvectors.adjoint();
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition eigh(const HermitianOperator& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NumericalInconsistency, "Hermitian eigensolver did not converge");
    }

    SpectralDecomposition out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();

    const double gap = tol::kClustering * std::max(1.0, out.norm());
    for (Index i = 0; i < out.eigenvalues.size(); ++i) {
        if (i == 0 || out.eigenvalues(i) - out.eigenvalues(i - 1) > gap) {
            out.clusters.emplace_back();
        }
        out.clusters.back().push_back(i);
    }
    return out;
}

ComplexMatrix matrix_function(const HermitianOperator& m, const SpectralMap& f) {
    return eigh(m).apply(f);
}

ComplexMatrix unitary_exp(const SpectralDecomposition& a, double t) {
    if (t == 0.0) return ComplexMatrix::Identity(a.dim(), a.dim());
    return a.apply([t](double lambda) { return std::polar(1.0, -t * lambda); });
}

ComplexMatrix unitary_exp(const HermitianOperator& a, double t) {
    if (t == 0.0) return ComplexMatrix::Identity(a.dim(), a.dim());
    return unitary_exp(eigh(a), t);
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x.rows(), y.rows(), "commutator");
    require_same_dim(x.cols(), y.cols(), "commutator");
    return x * y - y * x;
}

double operator_norm(const HermitianOperator& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double spectral_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace qeffects
