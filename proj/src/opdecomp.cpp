#include "lebdec/opdecomp.hpp"

namespace lebdec {

namespace {

bool numerically_zero(const PsdOperator& a) {
    return a.max_eig() <= a.rank_cutoff();
}

void check_dims(int a, int b, const char* who) {
    if (a != b) throw DimensionMismatch(std::string(who) + ": dims differ");
}

// The pseudo-inverse in the parallel-sum formula can amplify roundoff in
// ill-conditioned cases; results are PSD in exact arithmetic, so internally
// computed operators get a wider clipping slack than user inputs.
Tolerances internal(const Tolerances& tol) {
    Tolerances lax = tol;
    lax.psd_slack = std::max(tol.psd_slack, 1e-6);
    return lax;
}

}  // namespace

PsdOperator parallel_sum(const PsdOperator& a, const PsdOperator& b,
                         const Tolerances& tol) {
    check_dims(a.dim(), b.dim(), "parallel_sum");
    if (numerically_zero(a) || numerically_zero(b))
        return PsdOperator::zero(a.dim(), tol);
    // A:B = A - A(A+B)^+ A.  The subtraction form with a symmetric factor
    // keeps intermediate magnitudes at ||A|| even when ||B|| is huge, which
    // the direct product A(A+B)^+ B does not.
    PsdOperator sum(a.matrix() + b.matrix(), tol);
    CMatrix c = a.matrix() * sqrt_psd(pseudo_inverse(sum, tol), tol).matrix();
    CMatrix m = a.matrix() - c * c.adjoint();
    return PsdOperator((m + m.adjoint()) / 2.0, internal(tol));
}

PsdOperator shorted_operator(const PsdOperator& a, const Projection& p,
                             const Tolerances& tol) {
    check_dims(a.dim(), p.dim(), "shorted_operator");
    int d = a.dim();
    if ((p.matrix() - CMatrix::Identity(d, d)).norm() <= tol.support)
        return a;
    if (p.matrix().norm() <= tol.support) return PsdOperator::zero(d, tol);
    // Krein's formula: the shorted operator is A^{1/2} K A^{1/2} where K
    // projects onto {h : A^{1/2} h in range(P)}, the kernel of Q A^{1/2}.
    // Building the result as B B* keeps it positive by construction, which
    // the explicit Schur-complement subtraction does not guarantee in
    // floating point.
    CMatrix root = sqrt_psd(a, tol).matrix();
    CMatrix qr = p.complement().matrix() * root;
    Eigen::JacobiSVD<CMatrix> svd(qr, Eigen::ComputeFullV);
    double smax = svd.singularValues().size() > 0
                      ? svd.singularValues()(0)
                      : 0.0;
    double thresh = d * 1e-12 * std::max(smax, 1.0);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > thresh) ++rank;
    if (rank == d) return PsdOperator::zero(d, tol);
    CMatrix b = root * svd.matrixV().rightCols(d - rank);
    CMatrix s = b * b.adjoint();
    return PsdOperator((s + s.adjoint()) / 2.0, internal(tol));
}

OperatorDecomposition operator_lebesgue(const PsdOperator& a,
                                        const PsdOperator& b, DecompMode mode,
                                        const Tolerances& tol) {
    check_dims(a.dim(), b.dim(), "operator_lebesgue");
    int d = a.dim();
    PsdOperator regular = PsdOperator::zero(d, tol);
    int iterations = 0;
    if (numerically_zero(b)) {
        // everything is singular to the zero operator
    } else if (numerically_zero(a)) {
        // zero decomposes trivially
    } else if (mode == DecompMode::schur) {
        regular = shorted_operator(a, support_projection(b, tol), tol);
    } else {
        // A:(nB) approaches the limit like S + D/n, so the Richardson
        // extrapolant 2*S(2n) - S(n) gains a factor 1/n and reaches the
        // stopping tolerance before roundoff from the summand n*B (which
        // grows like eps*n*||B||) takes over.
        PsdOperator iter_prev = parallel_sum(a, b, tol);
        CMatrix extra_prev = iter_prev.matrix();
        CMatrix best = extra_prev;
        bool converged = false;
        double n = 1.0;
        double prev_diff = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 41; ++k) {
            n *= 2.0;
            PsdOperator next =
                parallel_sum(a, PsdOperator(n * b.matrix(), tol), tol);
            ++iterations;
            CMatrix extra = 2.0 * next.matrix() - iter_prev.matrix();
            double diff = (extra - extra_prev).norm();
            if (diff < tol.iter_stop) {
                best = extra;
                converged = true;
                break;
            }
            // The increment sequence can hump while small eigenvalues of B
            // are still being resolved, so growth alone is not a stopping
            // signal.  Growth at an already tiny increment means roundoff
            // from the summand n*B has taken over; the previous extrapolant
            // is then the best available limit.
            if (diff > prev_diff &&
                prev_diff < 1e-8 * std::max(a.max_eig(), 1.0)) {
                best = extra_prev;
                converged = true;
                break;
            }
            prev_diff = diff;
            best = extra;
            extra_prev = extra;
            iter_prev = next;
        }
        if (!converged)
            throw NoConvergence("iterative mode: A:(nB) not settled by n=2^42");
        regular = PsdOperator((best + best.adjoint()) / 2.0, internal(tol));
    }
    PsdOperator singular(a.matrix() - regular.matrix(), internal(tol));
    // Snap roundoff-sized parts to exact zeros so trivial splits stay trivial.
    double snap = d * 1e-14 * std::max(a.max_eig(), 1.0);
    if (singular.max_eig() <= snap) {
        regular = a;
        singular = PsdOperator::zero(d, tol);
    } else if (regular.max_eig() <= snap) {
        regular = PsdOperator::zero(d, tol);
        singular = a;
    }
    double alpha = max_generalized_eig(regular, b, tol);
    return OperatorDecomposition{regular, singular, alpha, iterations};
}

bool operators_singular(const PsdOperator& a, const PsdOperator& b,
                        const Tolerances& tol) {
    check_dims(a.dim(), b.dim(), "operators_singular");
    PsdOperator ps = parallel_sum(a, b, tol);
    double scale = std::max({a.max_eig(), b.max_eig(), 1.0});
    return ps.max_eig() <= tol.singular * scale;
}

bool form_closable(const PsdOperator& f, const PsdOperator& g,
                   const Tolerances& tol) {
    check_dims(f.dim(), g.dim(), "form_closable");
    Projection pf = support_projection(f, tol);
    Projection pg = support_projection(g, tol);
    return (pg.complement().matrix() * pf.matrix()).norm() <= tol.support;
}

}  // namespace lebdec
