#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "lebdec/numkernel.hpp"

namespace lebdec {

/// Finite direct sum of full matrix blocks M_{n_1} + ... + M_{n_k}.
class BlockAlgebra {
  public:
    explicit BlockAlgebra(std::vector<int> block_dims);

    int num_blocks() const { return static_cast<int>(dims_.size()); }
    int block_dim(int i) const { return dims_.at(i); }
    const std::vector<int>& block_dims() const { return dims_; }
    /// Sum of n_i^2, the linear dimension of the algebra.
    int total_dim() const { return total_; }

    bool operator==(const BlockAlgebra& other) const {
        return dims_ == other.dims_;
    }

  private:
    std::vector<int> dims_;
    int total_ = 0;
};

class AlgebraElement {
  public:
    AlgebraElement(BlockAlgebra algebra, std::vector<CMatrix> blocks);

    const BlockAlgebra& algebra() const { return algebra_; }
    const CMatrix& block(int i) const { return blocks_.at(i); }
    const std::vector<CMatrix>& blocks() const { return blocks_; }

    static AlgebraElement zero(const BlockAlgebra& a);
    static AlgebraElement identity(const BlockAlgebra& a);

  private:
    BlockAlgebra algebra_;
    std::vector<CMatrix> blocks_;
};

AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement element_sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement element_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement element_scale(Complex c, const AlgebraElement& x);
AlgebraElement element_adjoint(const AlgebraElement& x);

/// sup of block operator norms over the index set F (0 on the empty set).
double seminorm_sigma_F(const AlgebraElement& x, const std::set<int>& f);

/// Greatest C*-seminorm on a block algebra: sup over all blocks.
double gamma_norm(const AlgebraElement& x);

/// Matrix *-algebra given by generators acting on C^ambient_dim.
/// Adjoints of the generators are appended automatically.
class GeneratorPresentation {
  public:
    GeneratorPresentation(int ambient_dim, std::vector<CMatrix> generators);

    int ambient_dim() const { return ambient_; }
    /// Adjoint-closed generator list (identity included).
    const std::vector<CMatrix>& generators() const { return gens_; }

  private:
    int ambient_ = 0;
    std::vector<CMatrix> gens_;
};

struct WedderburnResult {
    CMatrix unitary;              // columns ordered by block
    std::vector<int> block_dims;  // one entry per equivalence class
    std::vector<int> multiplicities;
    double residual = 0.0;  // max off-block Frobenius mass over generators
};

/// Simultaneous unitary block-diagonalization of the *-algebra generated by
/// the presentation.  Deterministic for a fixed seed.
WedderburnResult wedderburn_decompose(const GeneratorPresentation& p,
                                      std::uint64_t seed = 0,
                                      const Tolerances& tol = {});

/// Irreducible dimensions, one copy per multiplicity (sorted ascending).
std::vector<int> irreducible_dimensions(const WedderburnResult& r);

/// Left regular representation of a finite group given by a 0-indexed
/// Cayley table (row = left factor, identity = element 0).  Validates the
/// group axioms.
GeneratorPresentation group_algebra(
    const std::vector<std::vector<int>>& cayley_table);

}  // namespace lebdec
