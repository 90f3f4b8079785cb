#include "lebdec/lebesgue.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace lebdec {

namespace {

void check_pair(const PositiveFunctional& f, const PositiveFunctional& g) {
    if (!(f.algebra() == g.algebra()))
        throw AlgebraMismatch("functionals live in different algebras");
}

double min_eig(const CMatrix& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> s(((m + m.adjoint()) / 2.0).eval(),
                                             Eigen::EigenvaluesOnly);
    return s.eigenvalues()(0);
}

CMatrix random_gaussian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

// Random contraction 0 <= R <= I.
CMatrix random_contraction(int n, std::mt19937_64& rng) {
    CMatrix m = random_gaussian(n, rng);
    CMatrix r = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> s(r, Eigen::EigenvaluesOnly);
    double top = std::max(s.eigenvalues()(n - 1), 1e-30);
    return r / (top * (1.0 + 1e-12));
}

double density_scale(const PositiveFunctional& f) {
    double s = 1.0;
    for (const PsdOperator& d : f.density()) s = std::max(s, d.max_eig());
    return s;
}

}  // namespace

Decomposition decompose(const PositiveFunctional& f,
                        const PositiveFunctional& g, DecompMode mode) {
    check_pair(f, g);
    const Tolerances& tol = f.tol();
    std::vector<CMatrix> reg_blocks, sing_blocks;
    double alpha = 0.0;
    int iterations = 0;
    for (int i = 0; i < f.algebra().num_blocks(); ++i) {
        OperatorDecomposition od = operator_lebesgue(
            f.density_block(i), g.density_block(i), mode, tol);
        reg_blocks.push_back(od.regular.matrix());
        sing_blocks.push_back(od.singular.matrix());
        alpha = std::max(alpha, od.alpha_min);
        iterations = std::max(iterations, od.iterations_used);
    }
    Decomposition d{
        PositiveFunctional(f.algebra(), std::move(reg_blocks), tol),
        PositiveFunctional(f.algebra(), std::move(sing_blocks), tol),
        alpha, std::isfinite(alpha), iterations};
    return d;
}

std::pair<bool, double> is_unique(const PositiveFunctional& f,
                                  const PositiveFunctional& g) {
    check_pair(f, g);
    Decomposition d = decompose(f, g, DecompMode::schur);
    // Cross-check via the uniqueness criterion: the largest part
    // of f_r singular to g must vanish.
    double witness = 0.0;
    for (int i = 0; i < f.algebra().num_blocks(); ++i) {
        Projection sg = support_projection(g.density_block(i), f.tol());
        PsdOperator leak = shorted_operator(d.regular.density_block(i),
                                            sg.complement(), f.tol());
        witness = std::max(witness, leak.max_eig());
    }
    bool unique = std::isfinite(d.alpha_min) &&
                  witness <= 1e-8 * density_scale(f);
    return {unique, d.alpha_min};
}

VerificationReport verify_decomposition(const PositiveFunctional& f,
                                        const PositiveFunctional& g,
                                        const Decomposition& d,
                                        std::uint64_t seed, int samples) {
    VerificationReport report;
    const Tolerances& tol = f.tol();
    const BlockAlgebra& alg = f.algebra();
    double scale = std::max(density_scale(f), density_scale(g));

    double sum_err = 0.0;
    double psd_floor = 0.0;
    for (int i = 0; i < alg.num_blocks(); ++i) {
        sum_err += (f.density_block(i).matrix() -
                    d.regular.density_block(i).matrix() -
                    d.singular_part.density_block(i).matrix())
                       .squaredNorm();
        psd_floor = std::min({psd_floor,
                              min_eig(d.regular.density_block(i).matrix()),
                              min_eig(d.singular_part.density_block(i).matrix())});
    }
    sum_err = std::sqrt(sum_err);
    report.checks.push_back(
        {"regular + singular = f", sum_err <= tol.residual * scale, sum_err});
    report.checks.push_back(
        {"parts are positive", psd_floor >= -tol.psd_slack * scale, psd_floor});
    report.checks.push_back({"regular << g", abs_continuous(d.regular, g), 0.0});
    report.checks.push_back(
        {"singular part _|_ g", singular(d.singular_part, g), 0.0});
    report.checks.push_back({"singular part _|_ regular",
                             singular(d.singular_part, d.regular), 0.0});

    // Maximality: any f0 <= f with f0 << g must sit below f_r.  Candidates
    // are sqrt(D_f) R sqrt(D_f) shorted to the support of g.
    std::mt19937_64 rng(seed);
    double max_violation = 0.0;
    double leq_violation = 0.0;
    for (int s = 0; s < samples; ++s) {
        for (int i = 0; i < alg.num_blocks(); ++i) {
            int n = alg.block_dim(i);
            PsdOperator root = sqrt_psd(f.density_block(i), tol);
            CMatrix cand = root.matrix() * random_contraction(n, rng) *
                           root.matrix();
            PsdOperator shorted = shorted_operator(
                PsdOperator((cand + cand.adjoint()) / 2.0, tol),
                support_projection(g.density_block(i), tol), tol);
            max_violation = std::max(
                max_violation,
                -min_eig(d.regular.density_block(i).matrix() -
                         shorted.matrix()));
            // Hereditary restriction: anything below f_r stays << g.
            PsdOperator reg_root = sqrt_psd(d.regular.density_block(i), tol);
            CMatrix t = reg_root.matrix() * random_contraction(n, rng) *
                        reg_root.matrix();
            PsdOperator t_op((t + t.adjoint()) / 2.0, tol);
            Projection sg = support_projection(g.density_block(i), tol);
            leq_violation = std::max(
                leq_violation,
                (sg.complement().matrix() *
                 support_projection(t_op, tol).matrix())
                    .norm());
        }
    }
    report.checks.push_back({"maximality sampling",
                             max_violation <= tol.psd_slack * scale,
                             max_violation});
    report.checks.push_back({"parts below regular stay << g",
                             leq_violation <= tol.support, leq_violation});
    return report;
}

}  // namespace lebdec
