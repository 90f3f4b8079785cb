#include "lebdec/staralg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lebdec {

BlockAlgebra::BlockAlgebra(std::vector<int> block_dims)
    : dims_(std::move(block_dims)) {
    if (dims_.empty()) throw DimensionMismatch("algebra needs >= 1 block");
    for (int n : dims_) {
        if (n < 1) throw DimensionMismatch("block dims must be positive");
        total_ += n * n;
    }
}

AlgebraElement::AlgebraElement(BlockAlgebra algebra, std::vector<CMatrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != algebra_.num_blocks())
        throw AlgebraMismatch("block count mismatch");
    for (int i = 0; i < algebra_.num_blocks(); ++i) {
        int n = algebra_.block_dim(i);
        if (blocks_[i].rows() != n || blocks_[i].cols() != n)
            throw AlgebraMismatch("block " + std::to_string(i) +
                                  " has wrong shape");
    }
}

AlgebraElement AlgebraElement::zero(const BlockAlgebra& a) {
    std::vector<CMatrix> blocks;
    for (int n : a.block_dims()) blocks.push_back(CMatrix::Zero(n, n));
    return AlgebraElement(a, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const BlockAlgebra& a) {
    std::vector<CMatrix> blocks;
    for (int n : a.block_dims()) blocks.push_back(CMatrix::Identity(n, n));
    return AlgebraElement(a, std::move(blocks));
}

namespace {

void check_same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
    if (!(x.algebra() == y.algebra()))
        throw AlgebraMismatch("elements live in different algebras");
}

}  // namespace

AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_algebra(x, y);
    std::vector<CMatrix> blocks;
    for (int i = 0; i < x.algebra().num_blocks(); ++i)
        blocks.push_back(x.block(i) + y.block(i));
    return AlgebraElement(x.algebra(), std::move(blocks));
}

AlgebraElement element_sub(const AlgebraElement& x, const AlgebraElement& y) {
    return element_add(x, element_scale(-1.0, y));
}

AlgebraElement element_mul(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_algebra(x, y);
    std::vector<CMatrix> blocks;
    for (int i = 0; i < x.algebra().num_blocks(); ++i)
        blocks.push_back(x.block(i) * y.block(i));
    return AlgebraElement(x.algebra(), std::move(blocks));
}

AlgebraElement element_scale(Complex c, const AlgebraElement& x) {
    std::vector<CMatrix> blocks;
    for (const CMatrix& b : x.blocks()) blocks.push_back(c * b);
    return AlgebraElement(x.algebra(), std::move(blocks));
}

AlgebraElement element_adjoint(const AlgebraElement& x) {
    std::vector<CMatrix> blocks;
    for (const CMatrix& b : x.blocks()) blocks.push_back(b.adjoint());
    return AlgebraElement(x.algebra(), std::move(blocks));
}

double seminorm_sigma_F(const AlgebraElement& x, const std::set<int>& f) {
    double sup = 0.0;
    for (int i : f) {
        if (i < 0 || i >= x.algebra().num_blocks())
            throw IndexOutOfRange("block index " + std::to_string(i));
        sup = std::max(sup, operator_norm(x.block(i)));
    }
    return sup;
}

double gamma_norm(const AlgebraElement& x) {
    std::set<int> all;
    for (int i = 0; i < x.algebra().num_blocks(); ++i) all.insert(i);
    return seminorm_sigma_F(x, all);
}

GeneratorPresentation::GeneratorPresentation(int ambient_dim,
                                             std::vector<CMatrix> generators)
    : ambient_(ambient_dim) {
    if (ambient_ < 1) throw DimensionMismatch("ambient_dim must be >= 1");
    for (const CMatrix& g : generators) {
        if (g.rows() != ambient_ || g.cols() != ambient_)
            throw DimensionMismatch("generator has wrong shape");
    }
    gens_ = std::move(generators);
    // Close under the involution; keep the list deterministic.
    size_t base = gens_.size();
    for (size_t i = 0; i < base; ++i) {
        CMatrix adj = gens_[i].adjoint();
        bool present = false;
        for (size_t j = 0; j < gens_.size(); ++j) {
            if ((gens_[j] - adj).norm() <= 1e-12 * std::max(1.0, adj.norm())) {
                present = true;
                break;
            }
        }
        if (!present) gens_.push_back(adj);
    }
    gens_.push_back(CMatrix::Identity(ambient_, ambient_));
}

namespace {

// vec(G X - X G) = (I (x) G - G^T (x) I) vec(X), column-major vec.
CMatrix commutator_map(const CMatrix& g) {
    int d = static_cast<int>(g.rows());
    CMatrix c = CMatrix::Zero(d * d, d * d);
    CMatrix id = CMatrix::Identity(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            c.block(i * d, j * d, d, d) += id(j, i) * g;
            c.block(i * d, j * d, d, d) -= g.transpose()(i, j) * id;
        }
    return c;
}

// Orthonormal basis (as vec'd columns) of the joint nullspace of the
// commutator maps: the commutant of the presented algebra.
std::vector<CMatrix> commutant_basis(const std::vector<CMatrix>& gens, int d,
                                     double cutoff) {
    CMatrix n = CMatrix::Zero(d * d, d * d);
    for (const CMatrix& g : gens) {
        CMatrix c = commutator_map(g);
        n += c.adjoint() * c;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(n);
    std::vector<CMatrix> basis;
    double scale = std::max(solver.eigenvalues().cwiseAbs().maxCoeff(), 1.0);
    for (int k = 0; k < d * d; ++k) {
        if (solver.eigenvalues()(k) <= cutoff * scale) {
            CVector v = solver.eigenvectors().col(k);
            basis.push_back(Eigen::Map<const CMatrix>(v.data(), d, d));
        }
    }
    return basis;
}

int commutant_dim(const std::vector<CMatrix>& gens, int d) {
    return static_cast<int>(commutant_basis(gens, d, 1e-10).size());
}

struct Cluster {
    CMatrix isometry;           // d x m orthonormal columns
    std::vector<CMatrix> rep;   // restricted generators
};

// Schur-style intertwiner test: irreducible reps are equivalent iff
// R_a S = S R_b has a nonzero solution.
bool equivalent_irreps(const Cluster& a, const Cluster& b) {
    int m = static_cast<int>(a.isometry.cols());
    if (m != b.isometry.cols()) return false;
    CMatrix n = CMatrix::Zero(m * m, m * m);
    CMatrix id = CMatrix::Identity(m, m);
    for (size_t g = 0; g < a.rep.size(); ++g) {
        // vec(R_a S - S R_b) = (I (x) R_a - R_b^T (x) I) vec(S)
        CMatrix c = CMatrix::Zero(m * m, m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                c.block(i * m, j * m, m, m) += id(j, i) * a.rep[g];
                c.block(i * m, j * m, m, m) -= b.rep[g].transpose()(i, j) * id;
            }
        n += c.adjoint() * c;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(n);
    double scale = std::max(solver.eigenvalues().cwiseAbs().maxCoeff(), 1.0);
    return solver.eigenvalues()(0) <= 1e-9 * scale;
}

}  // namespace

WedderburnResult wedderburn_decompose(const GeneratorPresentation& p,
                                      std::uint64_t seed,
                                      const Tolerances& tol) {
    const int d = p.ambient_dim();
    const auto& gens = p.generators();
    std::vector<CMatrix> comm = commutant_basis(gens, d, 1e-10);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int max_retries = 8;

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        // Generic Hermitian element of the commutant.
        CMatrix x = CMatrix::Zero(d, d);
        for (const CMatrix& b : comm) {
            Complex c(gauss(rng), gauss(rng));
            x += c * b + std::conj(c) * b.adjoint();
        }
        x = ((x + x.adjoint()) / 2.0).eval();
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(x);
        RVector vals = solver.eigenvalues();
        double spread = std::max(vals(d - 1) - vals(0), 1.0);

        // Cluster the spectrum; each eigenspace of a generic commutant
        // element is an irreducible invariant subspace.
        std::vector<Cluster> clusters;
        int start = 0;
        bool ok = true;
        for (int i = 1; i <= d; ++i) {
            if (i == d || vals(i) - vals(i - 1) > 1e-6 * spread) {
                Cluster cl;
                cl.isometry = solver.eigenvectors().middleCols(start, i - start);
                for (const CMatrix& g : gens)
                    cl.rep.push_back(cl.isometry.adjoint() * g * cl.isometry);
                clusters.push_back(std::move(cl));
                start = i;
            }
        }
        // Certify: invariant under every generator, and irreducible.
        for (const Cluster& cl : clusters) {
            CMatrix v = cl.isometry;
            CMatrix proj_out = CMatrix::Identity(d, d) - v * v.adjoint();
            for (const CMatrix& g : gens) {
                if ((proj_out * (g * v)).norm() >
                    1e-8 * std::max(1.0, g.norm())) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            if (commutant_dim(cl.rep, static_cast<int>(v.cols())) != 1) {
                ok = false;  // eigenvalue collision merged two irreps
                break;
            }
        }
        if (!ok) continue;

        // Group equivalent irreducibles; cheap trace prefilter first.
        std::vector<int> class_of(clusters.size(), -1);
        std::vector<std::vector<int>> classes;
        for (size_t i = 0; i < clusters.size(); ++i) {
            for (size_t c = 0; c < classes.size(); ++c) {
                const Cluster& rep0 = clusters[classes[c][0]];
                if (rep0.isometry.cols() != clusters[i].isometry.cols())
                    continue;
                bool traces_match = true;
                for (size_t g = 0; g < gens.size() && traces_match; ++g)
                    if (std::abs(rep0.rep[g].trace() -
                                 clusters[i].rep[g].trace()) > 1e-6)
                        traces_match = false;
                if (traces_match && equivalent_irreps(rep0, clusters[i])) {
                    class_of[i] = static_cast<int>(c);
                    break;
                }
            }
            if (class_of[i] < 0) {
                class_of[i] = static_cast<int>(classes.size());
                classes.push_back({});
            }
            classes[class_of[i]].push_back(static_cast<int>(i));
        }

        // Order classes by dimension, then by first appearance.
        std::vector<int> order(classes.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return clusters[classes[a][0]].isometry.cols() <
                   clusters[classes[b][0]].isometry.cols();
        });

        WedderburnResult result;
        result.unitary = CMatrix::Zero(d, d);
        std::vector<int> cluster_sizes;
        int col = 0;
        for (int c : order) {
            result.block_dims.push_back(
                static_cast<int>(clusters[classes[c][0]].isometry.cols()));
            result.multiplicities.push_back(
                static_cast<int>(classes[c].size()));
            for (int j : classes[c]) {
                int m = static_cast<int>(clusters[j].isometry.cols());
                result.unitary.middleCols(col, m) = clusters[j].isometry;
                cluster_sizes.push_back(m);
                col += m;
            }
        }

        // Residual: off-block Frobenius mass of the conjugated generators.
        double residual = 0.0;
        for (const CMatrix& g : gens) {
            CMatrix b = result.unitary.adjoint() * g * result.unitary;
            int at = 0;
            for (int m : cluster_sizes) {
                b.block(at, at, m, m).setZero();
                at += m;
            }
            residual = std::max(residual, b.norm());
        }
        result.residual = residual;
        if (residual > tol.support) continue;
        return result;
    }
    throw NoConvergence(
        "wedderburn_decompose: no clean split after max retries; reseed");
}

std::vector<int> irreducible_dimensions(const WedderburnResult& r) {
    std::vector<int> dims = r.block_dims;
    std::sort(dims.begin(), dims.end());
    return dims;
}

GeneratorPresentation group_algebra(
    const std::vector<std::vector<int>>& cayley_table) {
    const int m = static_cast<int>(cayley_table.size());
    if (m < 1) throw NotAGroup("empty table");
    for (const auto& row : cayley_table) {
        if (static_cast<int>(row.size()) != m)
            throw NotAGroup("table is not square");
        for (int v : row)
            if (v < 0 || v >= m) throw NotAGroup("entry out of range");
    }
    for (int j = 0; j < m; ++j) {
        if (cayley_table[0][j] != j || cayley_table[j][0] != j)
            throw NotAGroup("element 0 is not a two-sided identity");
    }
    for (int i = 0; i < m; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < m; ++j)
            if (cayley_table[i][j] == 0 && cayley_table[j][i] == 0)
                has_inverse = true;
        if (!has_inverse)
            throw NotAGroup("element " + std::to_string(i) + " has no inverse");
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (cayley_table[cayley_table[i][j]][k] !=
                    cayley_table[i][cayley_table[j][k]])
                    throw NotAGroup("associativity fails at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + "," +
                                    std::to_string(k) + ")");

    // Left regular representation; L_g^* = L_{g^{-1}} so the set is
    // adjoint-closed by the group axioms.
    std::vector<CMatrix> gens;
    for (int g = 0; g < m; ++g) {
        CMatrix l = CMatrix::Zero(m, m);
        for (int h = 0; h < m; ++h) l(cayley_table[g][h], h) = 1.0;
        gens.push_back(l);
    }
    return GeneratorPresentation(m, std::move(gens));
}

}  // namespace lebdec
