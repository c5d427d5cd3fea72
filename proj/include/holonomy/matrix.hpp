#ifndef HOLONOMY_MATRIX_HPP
#define HOLONOMY_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace holonomy {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

inline Matrix dagger(const Matrix& m) { return m.adjoint(); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Largest absolute entry; the workhorse norm for entrywise comparisons.
inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

/// Spectral (operator) norm via singular values.
inline double operator_norm(const Matrix& m)
{
    return m.jacobiSvd().singularValues()(0);
}

inline bool is_hermitian(const Matrix& m, double tol = 1e-12)
{
    return max_abs(m - m.adjoint()) < tol;
}

inline bool is_unitary(const Matrix& m, double tol = 1e-12)
{
    Matrix id = Matrix::Identity(m.rows(), m.cols());
    return max_abs(m.adjoint() * m - id) < tol;
}

inline double hermitian_residual(const Matrix& m)
{
    return 0.5 * max_abs(m + m.adjoint());
}

inline Matrix antihermitian_part(const Matrix& m)
{
    return 0.5 * (m - m.adjoint());
}

/// exp(i t H) for Hermitian H, with the eigendecomposition cached so that
/// repeated evaluations (frames, time steps) cost two small matrix products.
class HermitianExp {
public:
    explicit HermitianExp(const Matrix& h)
    {
        if (!is_hermitian(h, 1e-10))
            throw std::invalid_argument("HermitianExp: matrix is not Hermitian");
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        vectors_ = es.eigenvectors();
        values_ = es.eigenvalues();
    }

    Matrix exp_i(double t) const
    {
        Vector phases(values_.size());
        for (Eigen::Index k = 0; k < values_.size(); ++k)
            phases(k) = std::exp(kI * (t * values_(k)));
        return vectors_ * phases.asDiagonal() * vectors_.adjoint();
    }

    const RealVector& eigenvalues() const { return values_; }
    const Matrix& eigenvectors() const { return vectors_; }

private:
    Matrix vectors_;
    RealVector values_;
};

/// exp(A) for anti-Hermitian A (A = iS with S Hermitian).
inline Matrix exp_antihermitian(const Matrix& a)
{
    Matrix s = -kI * a;
    if (!is_hermitian(s, 1e-9))
        throw std::invalid_argument("exp_antihermitian: matrix is not anti-Hermitian");
    return HermitianExp(0.5 * (s + s.adjoint())).exp_i(1.0);
}

/// Nearest unitary in Frobenius norm (polar factor).
inline Matrix polar_unitary(const Matrix& m)
{
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace holonomy

#endif
