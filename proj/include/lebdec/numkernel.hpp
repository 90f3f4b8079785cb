#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "lebdec/errors.hpp"
#include "lebdec/tolerances.hpp"

namespace lebdec {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

constexpr double kInfAlpha = std::numeric_limits<double>::infinity();

/// Dense complex matrix certified Hermitian on construction.
class HermitianMatrix {
  public:
    HermitianMatrix(CMatrix entries, const Tolerances& tol = {});

    int dim() const { return static_cast<int>(entries_.rows()); }
    const CMatrix& entries() const { return entries_; }

  private:
    CMatrix entries_;
};

/// Hermitian matrix with a certified nonnegative spectrum.  Construction
/// eigendecomposes once; eigenvalues below -psd_slack (relative) reject the
/// input, tiny roundoff negatives are clipped to zero.
class PsdOperator {
  public:
    explicit PsdOperator(const HermitianMatrix& h, const Tolerances& tol = {});
    explicit PsdOperator(const CMatrix& m, const Tolerances& tol = {});

    int dim() const { return static_cast<int>(matrix_.rows()); }
    int rank() const { return rank_; }
    const CMatrix& matrix() const { return matrix_; }
    /// Non-increasing, clipped to >= 0.
    const RVector& eigvals() const { return eigvals_; }
    const CMatrix& eigvecs() const { return eigvecs_; }
    double max_eig() const { return dim() > 0 ? eigvals_(0) : 0.0; }
    double rank_cutoff() const { return cutoff_; }

    static PsdOperator zero(int dim, const Tolerances& tol = {});
    static PsdOperator identity(int dim, const Tolerances& tol = {});

  private:
    CMatrix matrix_;
    RVector eigvals_;
    CMatrix eigvecs_;
    int rank_ = 0;
    double cutoff_ = 0.0;
};

/// Hermitian idempotent (P^2 = P = P*).
class Projection {
  public:
    explicit Projection(CMatrix m, const Tolerances& tol = {});

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const CMatrix& matrix() const { return matrix_; }
    Projection complement() const;

    static Projection zero(int dim);
    static Projection identity(int dim);

  private:
    CMatrix matrix_;
};

/// Eigenvalues in non-increasing order with a unitary eigenvector matrix.
std::pair<RVector, CMatrix> eigendecompose(const HermitianMatrix& h);

/// Moore-Penrose pseudoinverse restricted to the numerical support.
PsdOperator pseudo_inverse(const PsdOperator& a, const Tolerances& tol = {});

/// Orthogonal projection onto the numerical range of a.
Projection support_projection(const PsdOperator& a, const Tolerances& tol = {});

/// Unique PSD square root.
PsdOperator sqrt_psd(const PsdOperator& a, const Tolerances& tol = {});

/// min{alpha >= 0 : A <= alpha B}, +inf when range(A) escapes range(B).
double max_generalized_eig(const PsdOperator& a, const PsdOperator& b,
                           const Tolerances& tol = {});

double frobenius_norm(const CMatrix& m);
double operator_norm(const CMatrix& m);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

}  // namespace lebdec
