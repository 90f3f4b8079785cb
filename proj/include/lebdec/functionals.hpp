#pragma once

#include <vector>

#include "lebdec/staralg.hpp"

namespace lebdec {

/// Positive functional f(a) = sum_i tr(D_i a_i) on a block algebra, stored
/// through its block-diagonal PSD density D.  On a finite-dimensional
/// C*-algebra the trace pairing exhausts the positive functionals, and it
/// makes the order, absolute continuity and singularity computable.
class PositiveFunctional {
  public:
    PositiveFunctional(BlockAlgebra algebra, std::vector<CMatrix> density,
                       const Tolerances& tol = {});

    const BlockAlgebra& algebra() const { return algebra_; }
    const std::vector<PsdOperator>& density() const { return density_; }
    const PsdOperator& density_block(int i) const { return density_.at(i); }
    AlgebraElement density_element() const;
    const Tolerances& tol() const { return tol_; }
    bool is_zero() const;

    static PositiveFunctional zero(const BlockAlgebra& a,
                                   const Tolerances& tol = {});

  private:
    BlockAlgebra algebra_;
    std::vector<PsdOperator> density_;
    Tolerances tol_;
};

Complex evaluate(const PositiveFunctional& f, const AlgebraElement& a);

/// f <= g in the positive-functional order (blockwise D_g - D_f PSD).
bool order_leq(const PositiveFunctional& f, const PositiveFunctional& g);

/// Basis of the left kernel L_f = {a : f(a*a) = 0} = A(1 - s(f)).
std::vector<AlgebraElement> left_kernel_basis(const PositiveFunctional& f);

/// Blockwise support projection s(f); f(x) = f(s x s).
AlgebraElement support(const PositiveFunctional& f);

/// f << g.  At finite dimension this is support containment s(f) <= s(g).
bool abs_continuous(const PositiveFunctional& f, const PositiveFunctional& g);

struct AcWitness {
    std::vector<PositiveFunctional> sequence;
    std::vector<double> alphas;
};

/// Certificate for absolute continuity: a monotone sequence f_n <= alpha_n g
/// increasing to f.  At finite dimension the constant sequence f_n = f with
/// the minimal uniform bound already works.
AcWitness ac_witness(const PositiveFunctional& f, const PositiveFunctional& g);

/// f and g mutually singular: no nonzero positive functional below both.
bool singular(const PositiveFunctional& f, const PositiveFunctional& g);

struct GnsData {
    std::vector<CMatrix> representation;  // pi of each algebra basis element
    CVector cyclic_vector;
    std::vector<AlgebraElement> kernel_basis;
    int quotient_dim = 0;
};

/// Cyclic representation realizing f as a vector state: quotient the
/// algebra by L_f, orthonormalize in the f-inner product, represent by left
/// multiplication.
GnsData gns(const PositiveFunctional& f);

/// Functional on a corner algebra eAe, written in orthonormal coordinates
/// of the ranges of the blocks of e.
struct CornerFunctional {
    std::vector<CMatrix> density;  // r_i x r_i PSD blocks
};

/// Compress f to the corner cut out by the projection element e.
CornerFunctional corner_restrict(const PositiveFunctional& f,
                                 const AlgebraElement& e);

/// Norm-preserving positive extension of a corner functional:
/// f~(x) = f_corner(e x e).
PositiveFunctional corner_extension(const AlgebraElement& e,
                                    const CornerFunctional& f_on_corner,
                                    const BlockAlgebra& algebra,
                                    const Tolerances& tol = {});

/// True when |f| <= K sigma_F for some F in the family: the support of f
/// must live inside the blocks selected by some F.
bool representable(const PositiveFunctional& f,
                   const std::vector<std::set<int>>& seminorm_family);

}  // namespace lebdec
