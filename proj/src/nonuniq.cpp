#include "lebdec/nonuniq.hpp"

#include <cmath>

namespace lebdec {

Tolerances lab_tolerances() {
    Tolerances tol;
    tol.rank_rel = 1e-60;
    return tol;
}

TruncationLab build_lab(int level) {
    if (level < 2) throw InvalidLevel("level must be >= 2");
    if (level > 40)
        throw UnderflowRisk("weights 10^-N degenerate beyond level 40");
    const int n = level;
    Tolerances tol = lab_tolerances();
    BlockAlgebra alg({n});

    CVector xi = CVector::Zero(n);
    CMatrix df = CMatrix::Zero(n, n);
    CMatrix dg = CMatrix::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        xi(k - 1) = std::pow(2.0, -k);
        df(k - 1, k - 1) = std::pow(2.0, -k);
        dg(k - 1, k - 1) = std::pow(10.0, -k);
    }
    std::vector<CVector> xi_prime;
    for (int j = 1; j <= n - 1; ++j) {
        CVector v = xi;
        v.head(j).setZero();
        xi_prime.push_back(v);
    }
    CMatrix dp = xi * xi.adjoint();
    return TruncationLab{n,
                         alg,
                         xi,
                         std::move(xi_prime),
                         PositiveFunctional(alg, {df}, tol),
                         PositiveFunctional(alg, {dg}, tol),
                         PositiveFunctional(alg, {dp}, tol),
                         tol};
}

AlgebraElement witness_operator(const TruncationLab& lab, int n) {
    if (n < 1 || n > lab.level - 1)
        throw IndexOutOfRange("witness index must be in 1..N-1");
    const CVector& xp = lab.xi_prime[n - 1];
    CMatrix a = lab.xi * xp.adjoint() / xp.squaredNorm();
    return AlgebraElement(lab.algebra, {a});
}

std::vector<BoundRow> bound_report(const TruncationLab& lab, int max_n) {
    std::vector<BoundRow> rows;
    const double slack = 1e-10;
    double norm_xi_sq = lab.xi.squaredNorm();
    double lambda_max =
        1.0 / max_generalized_eig(lab.p.density_block(0),
                                  lab.g.density_block(0), lab.tol);
    double alpha_min = max_generalized_eig(lab.f.density_block(0),
                                           lab.g.density_block(0), lab.tol);
    double p_floor = (1.0 - std::pow(4.0, -lab.level)) / 3.0;

    for (int n = 1; n <= std::min(max_n, lab.level - 1); ++n) {
        AlgebraElement a = witness_operator(lab, n);
        AlgebraElement asa = element_mul(element_adjoint(a), a);
        BoundRow row;
        row.n = n;
        row.p_an = std::real(evaluate(lab.p, asa));
        row.g_an = std::real(evaluate(lab.g, asa));
        row.paper_bound = (2.0 / 9.0) * std::pow(0.4, n) * (n + 1);
        row.lambda_max = lambda_max;
        row.alpha_min = alpha_min;
        row.witness_norm = gamma_norm(a);
        row.kadison_bound = std::pow(2.0, n) * std::sqrt(2.0 * (n + 1));
        row.within_bounds = row.p_an >= p_floor - slack &&
                            row.p_an <= norm_xi_sq + slack &&
                            row.p_an <= 1.0 / 3.0 + slack &&
                            row.g_an <= row.paper_bound + slack &&
                            row.witness_norm <= row.kadison_bound + slack &&
                            row.lambda_max <=
                                (2.0 / 3.0) * std::pow(0.4, n) * (n + 1) + slack;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lebdec
