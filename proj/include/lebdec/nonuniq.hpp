#pragma once

#include "lebdec/functionals.hpp"

namespace lebdec {

/// Level-N truncation of the canonical non-uniqueness construction: on M_N
/// take the functionals with densities
///   D_f = diag(2^-1, ..., 2^-N),  D_g = diag(10^-1, ..., 10^-N),
///   D_p = |xi><xi| with xi = sum_k 2^-k e_k,
/// plus rank-one witness operators a_n mapping xi'_n = sum_{k>n} 2^-k e_k
/// back onto xi.  At every finite N the decomposition of f + p w.r.t. g is
/// unique, but the dominance constant 5^N and the shrinking lambda_max
/// chart the degeneration toward the genuinely non-unique limit.
struct TruncationLab {
    int level = 0;
    BlockAlgebra algebra;
    CVector xi;
    std::vector<CVector> xi_prime;  // xi'_n for n = 1..N-1
    PositiveFunctional f, g, p;
    Tolerances tol;
};

/// Tolerance set for the lab: the weights 10^-N are far below any generic
/// relative rank cutoff, yet exact by construction, so the cutoff is
/// pushed out of their way.
Tolerances lab_tolerances();

TruncationLab build_lab(int level);

/// a_n = |xi><xi'_n| / ||xi'_n||^2; kills e_1..e_n, fixes xi.
AlgebraElement witness_operator(const TruncationLab& lab, int n);

struct BoundRow {
    int n = 0;
    double p_an = 0.0;         // p(a_n* a_n), = ||xi||^2
    double g_an = 0.0;         // g(a_n* a_n)
    double paper_bound = 0.0;  // (2/9)(2/5)^n (n+1)
    double lambda_max = 0.0;   // max lambda with lambda p <= g
    double alpha_min = 0.0;    // min alpha with f <= alpha g, = 5^N
    double witness_norm = 0.0;
    double kadison_bound = 0.0;  // 2^n sqrt(2(n+1))
    bool within_bounds = false;
};

/// One row per witness index n (capped at max_n); every row checks the
/// displayed quantitative bounds with 1e-10 slack.
std::vector<BoundRow> bound_report(const TruncationLab& lab, int max_n = 8);

}  // namespace lebdec
