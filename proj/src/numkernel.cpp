#include "lebdec/numkernel.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace lebdec {

double frobenius_norm(const CMatrix& m) { return m.norm(); }

double operator_norm(const CMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).norm() <= tol;
}

HermitianMatrix::HermitianMatrix(CMatrix entries, const Tolerances& tol)
    : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols())
        throw NonHermitian("matrix must be square with dim >= 1");
    double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    if (dev > tol.hermitian_abs * scale)
        throw NonHermitian("symmetry deviation " + std::to_string(dev));
    // Exact symmetrization so downstream solvers see a clean input.
    entries_ = ((entries_ + entries_.adjoint()) / 2.0).eval();
}

std::pair<RVector, CMatrix> eigendecompose(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.entries());
    if (solver.info() != Eigen::Success)
        throw NoConvergence("eigensolver failed");
    // Eigen returns ascending order; the contract is non-increasing.
    RVector vals = solver.eigenvalues().reverse();
    CMatrix vecs = solver.eigenvectors().rowwise().reverse();
    return {vals, vecs};
}

PsdOperator::PsdOperator(const HermitianMatrix& h, const Tolerances& tol) {
    auto [vals, vecs] = eigendecompose(h);
    double max_eig = vals.size() > 0 ? std::max(vals(0), 0.0) : 0.0;
    double reject = tol.psd_slack * std::max(max_eig, 1.0);
    if (vals.size() > 0 && vals(vals.size() - 1) < -reject)
        throw NotPsd("eigenvalue " + std::to_string(vals(vals.size() - 1)) +
                     " below -" + std::to_string(reject));
    double min_val = vals.size() > 0 ? vals(vals.size() - 1) : 0.0;
    vals = vals.cwiseMax(0.0);
    cutoff_ = tol.rank_cutoff(max_eig, h.dim());
    rank_ = static_cast<int>((vals.array() > cutoff_).count());
    eigvals_ = vals;
    eigvecs_ = vecs;
    if (min_val < -cutoff_) {
        // A clipped eigenvalue was large enough to matter; rebuild the
        // stored matrix from the clipped spectrum so it is genuinely PSD.
        CMatrix m = vecs * vals.asDiagonal() * vecs.adjoint();
        matrix_ = ((m + m.adjoint()) / 2.0).eval();
    } else {
        matrix_ = h.entries();
    }
}

PsdOperator::PsdOperator(const CMatrix& m, const Tolerances& tol)
    : PsdOperator(HermitianMatrix(m, tol), tol) {}

PsdOperator PsdOperator::zero(int dim, const Tolerances& tol) {
    return PsdOperator(CMatrix::Zero(dim, dim), tol);
}

PsdOperator PsdOperator::identity(int dim, const Tolerances& tol) {
    return PsdOperator(CMatrix::Identity(dim, dim), tol);
}

Projection::Projection(CMatrix m, const Tolerances& tol)
    : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
        throw NotAProjection("projection must be square");
    double dev = std::max((matrix_ * matrix_ - matrix_).norm(),
                          (matrix_ - matrix_.adjoint()).norm());
    if (dev > 1e-10 * std::max(1.0, matrix_.norm()))
        throw NotAProjection("P^2 = P = P* violated, deviation " +
                             std::to_string(dev));
    (void)tol;
}

Projection Projection::complement() const {
    return Projection(CMatrix::Identity(dim(), dim()) - matrix_);
}

Projection Projection::zero(int dim) {
    return Projection(CMatrix::Zero(dim, dim));
}

Projection Projection::identity(int dim) {
    return Projection(CMatrix::Identity(dim, dim));
}

PsdOperator pseudo_inverse(const PsdOperator& a, const Tolerances& tol) {
    RVector inv = RVector::Zero(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        if (a.eigvals()(i) > a.rank_cutoff()) inv(i) = 1.0 / a.eigvals()(i);
    CMatrix m = a.eigvecs() * inv.asDiagonal() * a.eigvecs().adjoint();
    return PsdOperator(m, tol);
}

Projection support_projection(const PsdOperator& a, const Tolerances& tol) {
    int r = a.rank();
    if (r == 0) return Projection::zero(a.dim());
    CMatrix v = a.eigvecs().leftCols(r);
    (void)tol;
    return Projection(v * v.adjoint());
}

PsdOperator sqrt_psd(const PsdOperator& a, const Tolerances& tol) {
    RVector roots = a.eigvals().cwiseSqrt();
    CMatrix m = a.eigvecs() * roots.asDiagonal() * a.eigvecs().adjoint();
    return PsdOperator(m, tol);
}

double max_generalized_eig(const PsdOperator& a, const PsdOperator& b,
                           const Tolerances& tol) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("max_generalized_eig: dims differ");
    if (a.max_eig() <= a.rank_cutoff()) return 0.0;  // A numerically zero
    // range(A) must be contained in range(B).  Checked as escaped mass of A
    // rather than as an angle between support projections, which would be
    // dominated by near-null eigendirections of A.
    Projection pb = support_projection(b, tol);
    CMatrix qb = pb.complement().matrix();
    double escaped = (qb * a.matrix() * qb).norm();
    if (escaped > tol.support * std::max(a.max_eig(), 1.0)) return kInfAlpha;
    PsdOperator bph = sqrt_psd(pseudo_inverse(b, tol), tol);
    CMatrix s = bph.matrix() * a.matrix() * bph.matrix();
    Tolerances lax = tol;
    // Entries of s can be huge when b has tiny eigenvalues; the symmetry
    // check must scale with them.
    lax.hermitian_abs = std::max(tol.hermitian_abs, 1e-12 * s.norm());
    auto [vals, vecs] =
        eigendecompose(HermitianMatrix((s + s.adjoint()) / 2.0, lax));
    (void)vecs;
    return std::max(vals(0), 0.0);
}

}  // namespace lebdec
