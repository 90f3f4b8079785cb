#include "lebdec/functionals.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "lebdec/opdecomp.hpp"

namespace lebdec {

PositiveFunctional::PositiveFunctional(BlockAlgebra algebra,
                                       std::vector<CMatrix> density,
                                       const Tolerances& tol)
    : algebra_(std::move(algebra)), tol_(tol) {
    if (static_cast<int>(density.size()) != algebra_.num_blocks())
        throw AlgebraMismatch("density block count mismatch");
    for (int i = 0; i < algebra_.num_blocks(); ++i) {
        int n = algebra_.block_dim(i);
        if (density[i].rows() != n || density[i].cols() != n)
            throw AlgebraMismatch("density block " + std::to_string(i) +
                                  " has wrong shape");
        density_.emplace_back(density[i], tol);
    }
}

AlgebraElement PositiveFunctional::density_element() const {
    std::vector<CMatrix> blocks;
    for (const PsdOperator& d : density_) blocks.push_back(d.matrix());
    return AlgebraElement(algebra_, std::move(blocks));
}

bool PositiveFunctional::is_zero() const {
    for (const PsdOperator& d : density_)
        if (d.rank() > 0) return false;
    return true;
}

PositiveFunctional PositiveFunctional::zero(const BlockAlgebra& a,
                                            const Tolerances& tol) {
    std::vector<CMatrix> blocks;
    for (int n : a.block_dims()) blocks.push_back(CMatrix::Zero(n, n));
    return PositiveFunctional(a, std::move(blocks), tol);
}

namespace {

void check_pair(const PositiveFunctional& f, const PositiveFunctional& g) {
    if (!(f.algebra() == g.algebra()))
        throw AlgebraMismatch("functionals live in different algebras");
}

// Smallest eigenvalue of a Hermitian matrix (0 for empty).
double min_eig(const CMatrix& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> s(
        ((m + m.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
    return s.eigenvalues()(0);
}

}  // namespace

Complex evaluate(const PositiveFunctional& f, const AlgebraElement& a) {
    if (!(f.algebra() == a.algebra()))
        throw AlgebraMismatch("element not in the functional's algebra");
    Complex v = 0.0;
    for (int i = 0; i < f.algebra().num_blocks(); ++i)
        v += (f.density_block(i).matrix() * a.block(i)).trace();
    return v;
}

bool order_leq(const PositiveFunctional& f, const PositiveFunctional& g) {
    check_pair(f, g);
    const Tolerances& tol = f.tol();
    for (int i = 0; i < f.algebra().num_blocks(); ++i) {
        CMatrix diff = g.density_block(i).matrix() - f.density_block(i).matrix();
        double scale = std::max(
            {f.density_block(i).max_eig(), g.density_block(i).max_eig(), 1.0});
        if (min_eig(diff) < -tol.psd_slack * scale) return false;
    }
    return true;
}

std::vector<AlgebraElement> left_kernel_basis(const PositiveFunctional& f) {
    std::vector<AlgebraElement> basis;
    for (int i = 0; i < f.algebra().num_blocks(); ++i) {
        const PsdOperator& d = f.density_block(i);
        int n = d.dim();
        // Eigenvectors below the rank cutoff span the kernel of D_i.
        for (int k = d.rank(); k < n; ++k) {
            CVector w = d.eigvecs().col(k);
            for (int p = 0; p < n; ++p) {
                AlgebraElement a = AlgebraElement::zero(f.algebra());
                std::vector<CMatrix> blocks = a.blocks();
                blocks[i] = CVector::Unit(n, p) * w.adjoint();
                basis.emplace_back(f.algebra(), std::move(blocks));
            }
        }
    }
    return basis;
}

AlgebraElement support(const PositiveFunctional& f) {
    std::vector<CMatrix> blocks;
    for (const PsdOperator& d : f.density())
        blocks.push_back(support_projection(d, f.tol()).matrix());
    return AlgebraElement(f.algebra(), std::move(blocks));
}

bool abs_continuous(const PositiveFunctional& f, const PositiveFunctional& g) {
    check_pair(f, g);
    // The containment test weighs escaped density mass, not projector
    // angles: near-null eigendirections of D_f would otherwise flip the
    // support projection while carrying no actual mass.
    AlgebraElement sg = support(g);
    for (int i = 0; i < f.algebra().num_blocks(); ++i) {
        int n = f.algebra().block_dim(i);
        CMatrix q = CMatrix::Identity(n, n) - sg.block(i);
        double mass = (q * f.density_block(i).matrix() * q).norm();
        double scale = std::max(f.density_block(i).max_eig(), 1.0);
        if (mass > f.tol().support * scale) return false;
    }
    return true;
}

AcWitness ac_witness(const PositiveFunctional& f, const PositiveFunctional& g) {
    check_pair(f, g);
    if (!abs_continuous(f, g))
        throw NotAbsolutelyContinuous("support(f) escapes support(g)");
    double alpha = 0.0;
    for (int i = 0; i < f.algebra().num_blocks(); ++i)
        alpha = std::max(alpha, max_generalized_eig(f.density_block(i),
                                                    g.density_block(i),
                                                    f.tol()));
    return AcWitness{{f}, {alpha}};
}

bool singular(const PositiveFunctional& f, const PositiveFunctional& g) {
    check_pair(f, g);
    const Tolerances& tol = f.tol();
    double worst = 0.0;
    double scale = 1.0;
    for (int i = 0; i < f.algebra().num_blocks(); ++i) {
        scale = std::max(
            {scale, f.density_block(i).max_eig(), g.density_block(i).max_eig()});
        PsdOperator ps =
            parallel_sum(f.density_block(i), g.density_block(i), tol);
        worst = std::max(worst, ps.max_eig());
    }
    return worst <= tol.singular * scale;
}

namespace {

// Flat basis of the block algebra: matrix units E^(s)_pq ordered by
// (block, row, column).
struct BasisIndex {
    int block, row, col;
};

std::vector<BasisIndex> algebra_basis(const BlockAlgebra& a) {
    std::vector<BasisIndex> basis;
    for (int s = 0; s < a.num_blocks(); ++s)
        for (int p = 0; p < a.block_dim(s); ++p)
            for (int q = 0; q < a.block_dim(s); ++q)
                basis.push_back({s, p, q});
    return basis;
}

}  // namespace

GnsData gns(const PositiveFunctional& f) {
    if (f.is_zero()) throw ZeroFunctional("gns of the zero functional");
    const BlockAlgebra& alg = f.algebra();
    const std::vector<BasisIndex> basis = algebra_basis(alg);
    const int dim = static_cast<int>(basis.size());

    // Gram matrix of the f-inner product <a,b> = f(b* a) on basis units:
    // f(E_rl* E_pq) = delta_pr D(q,l) within one block.
    CMatrix gram = CMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (basis[i].block != basis[j].block) continue;
            if (basis[i].row != basis[j].row) continue;
            // <E_pq, E_pl> = f(E_lp E_pq) = f(E_lq) = D(q,l)
            gram(j, i) = f.density_block(basis[i].block)
                             .matrix()(basis[i].col, basis[j].col);
        }

    // Modified Gram-Schmidt in the f-inner product with one
    // re-orthogonalization pass; vectors of L_f fall below the cutoff and
    // are dropped.
    double scale = std::max(gram.diagonal().real().maxCoeff(), 1.0);
    std::vector<CVector> kept;
    for (int i = 0; i < dim; ++i) {
        CVector v = CVector::Unit(dim, i);
        for (int pass = 0; pass < 2; ++pass)
            for (const CVector& q : kept) {
                Complex overlap = (q.adjoint() * (gram * v))(0);
                v -= overlap * q;
            }
        double norm2 = std::real((v.adjoint() * (gram * v))(0));
        if (norm2 <= 1e-12 * scale) continue;
        kept.push_back(v / std::sqrt(norm2));
    }
    const int d = static_cast<int>(kept.size());
    CMatrix q_mat(dim, d);
    for (int k = 0; k < d; ++k) q_mat.col(k) = kept[k];
    CMatrix coords = q_mat.adjoint() * gram;  // coefficient -> quotient coords

    GnsData out;
    out.quotient_dim = d;
    out.kernel_basis = left_kernel_basis(f);

    // pi(E_pq) acts by left multiplication: E_pq E_rl = delta_qr E_pl.
    for (int g = 0; g < dim; ++g) {
        CMatrix left = CMatrix::Zero(dim, dim);
        for (int j = 0; j < dim; ++j) {
            if (basis[j].block != basis[g].block) continue;
            if (basis[j].row != basis[g].col) continue;
            int target = -1;
            for (int t = 0; t < dim; ++t)
                if (basis[t].block == basis[g].block &&
                    basis[t].row == basis[g].row &&
                    basis[t].col == basis[j].col) {
                    target = t;
                    break;
                }
            left(target, j) = 1.0;
        }
        out.representation.push_back(coords * left * q_mat);
    }

    // Class of the identity element.
    CVector one = CVector::Zero(dim);
    for (int i = 0; i < dim; ++i)
        if (basis[i].row == basis[i].col) one(i) = 1.0;
    out.cyclic_vector = coords * one;
    return out;
}

namespace {

// Orthonormal basis of the range of a projection block.
CMatrix range_basis(const CMatrix& e) {
    Projection p(e);  // throws NotAProjection on bad input
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(p.matrix());
    int n = static_cast<int>(e.rows());
    int r = 0;
    for (int i = 0; i < n; ++i)
        if (solver.eigenvalues()(i) > 0.5) ++r;
    return solver.eigenvectors().rightCols(r);
}

}  // namespace

CornerFunctional corner_restrict(const PositiveFunctional& f,
                                 const AlgebraElement& e) {
    if (!(f.algebra() == e.algebra()))
        throw AlgebraMismatch("projection not in the functional's algebra");
    CornerFunctional out;
    for (int i = 0; i < f.algebra().num_blocks(); ++i) {
        CMatrix w = range_basis(e.block(i));
        out.density.push_back(w.adjoint() * f.density_block(i).matrix() * w);
    }
    return out;
}

PositiveFunctional corner_extension(const AlgebraElement& e,
                                    const CornerFunctional& f_on_corner,
                                    const BlockAlgebra& algebra,
                                    const Tolerances& tol) {
    if (!(e.algebra() == algebra))
        throw AlgebraMismatch("projection not in the target algebra");
    if (f_on_corner.density.size() != static_cast<size_t>(algebra.num_blocks()))
        throw AlgebraMismatch("corner density block count mismatch");
    std::vector<CMatrix> blocks;
    for (int i = 0; i < algebra.num_blocks(); ++i) {
        CMatrix w = range_basis(e.block(i));
        if (f_on_corner.density[i].rows() != w.cols())
            throw AlgebraMismatch("corner block " + std::to_string(i) +
                                  " does not match rank of e");
        blocks.push_back(w * f_on_corner.density[i] * w.adjoint());
    }
    return PositiveFunctional(algebra, std::move(blocks), tol);
}

bool representable(const PositiveFunctional& f,
                   const std::vector<std::set<int>>& seminorm_family) {
    if (f.is_zero()) return true;  // K = 0 works against any seminorm
    for (const std::set<int>& sel : seminorm_family) {
        bool inside = true;
        for (int i = 0; i < f.algebra().num_blocks() && inside; ++i)
            if (!sel.count(i) && f.density_block(i).rank() > 0) inside = false;
        if (inside) return true;
    }
    return false;
}

}  // namespace lebdec
