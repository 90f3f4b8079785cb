#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lebdec/functionals.hpp"
#include "test_util.hpp"

using namespace lebdec;
using lebtest::cdiag;

namespace {

AlgebraElement random_element(const BlockAlgebra& a, std::mt19937_64& rng) {
    std::vector<CMatrix> blocks;
    for (int n : a.block_dims())
        blocks.push_back(lebtest::random_complex(n, n, rng));
    return AlgebraElement(a, std::move(blocks));
}

PositiveFunctional random_functional(const BlockAlgebra& a,
                                     std::mt19937_64& rng,
                                     bool allow_rank_deficient = true) {
    std::vector<CMatrix> blocks;
    for (int n : a.block_dims()) {
        int r = allow_rank_deficient ? 1 + static_cast<int>(rng() % n) : n;
        blocks.push_back(lebtest::random_psd_rank(n, r, rng));
    }
    return PositiveFunctional(a, std::move(blocks));
}

}  // namespace

TEST_CASE("evaluate: normalized trace, positivity, linearity") {
    BlockAlgebra m2({2});
    PositiveFunctional f(m2, {0.5 * CMatrix::Identity(2, 2)});
    CHECK(std::real(evaluate(f, AlgebraElement::identity(m2))) ==
          doctest::Approx(1.0));

    std::mt19937_64 rng(3);
    BlockAlgebra alg({2, 3});
    PositiveFunctional g = random_functional(alg, rng);
    for (int trial = 0; trial < 10; ++trial) {
        AlgebraElement a = random_element(alg, rng);
        Complex faa =
            evaluate(g, element_mul(element_adjoint(a), a));
        CHECK(std::abs(std::imag(faa)) < 1e-10);
        CHECK(std::real(faa) >= -1e-10);
        // f(a*) = conj f(a)
        CHECK(std::abs(evaluate(g, element_adjoint(a)) -
                       std::conj(evaluate(g, a))) < 1e-10);
    }
    CHECK_THROWS_AS(evaluate(f, AlgebraElement::identity(alg)),
                    AlgebraMismatch);
}

TEST_CASE("evaluate: geometric weights pick out rank-one projections") {
    const int n = 8;
    BlockAlgebra alg({n});
    CMatrix d = CMatrix::Zero(n, n);
    for (int k = 1; k <= n; ++k) d(k - 1, k - 1) = std::pow(2.0, -k);
    PositiveFunctional f(alg, {d});
    for (int j = 1; j <= n; ++j) {
        CMatrix proj = CMatrix::Zero(n, n);
        proj(j - 1, j - 1) = 1.0;
        CHECK(std::real(evaluate(f, AlgebraElement(alg, {proj}))) ==
              doctest::Approx(std::pow(2.0, -j)));
    }
}

TEST_CASE("order_leq") {
    BlockAlgebra m2({2});
    PositiveFunctional a(m2, {cdiag({1, 0})});
    PositiveFunctional b(m2, {cdiag({1, 1})});
    PositiveFunctional c(m2, {cdiag({2, 0})});
    CHECK(order_leq(a, a));
    CHECK(order_leq(a, b));
    CHECK_FALSE(order_leq(c, b));
}

TEST_CASE("left_kernel_basis") {
    BlockAlgebra m2({2});
    // faithful: trivial left kernel
    CHECK(left_kernel_basis(PositiveFunctional(m2, {cdiag({1, 2})})).empty());
    // diag(1,0): a diag(1,0) = 0 iff first column of a vanishes
    PositiveFunctional f(m2, {cdiag({1, 0})});
    auto basis = left_kernel_basis(f);
    CHECK(basis.size() == 2);
    for (const AlgebraElement& a : basis) {
        Complex v = evaluate(f, element_mul(element_adjoint(a), a));
        CHECK(std::abs(v) < 1e-12);
    }
    // zero functional: the whole algebra
    CHECK(left_kernel_basis(PositiveFunctional::zero(m2)).size() == 4);
}

TEST_CASE("support: projections and compression identity") {
    BlockAlgebra m2({2});
    CHECK((support(PositiveFunctional(m2, {cdiag({1, 2})})).block(0) -
           CMatrix::Identity(2, 2))
              .norm() < 1e-10);
    CHECK((support(PositiveFunctional(m2, {cdiag({3, 0})})).block(0) -
           cdiag({1, 0}))
              .norm() < 1e-10);

    std::mt19937_64 rng(7);
    BlockAlgebra alg({3, 2});
    for (int trial = 0; trial < 10; ++trial) {
        PositiveFunctional f = random_functional(alg, rng);
        AlgebraElement s = support(f);
        AlgebraElement x = random_element(alg, rng);
        Complex lhs = evaluate(f, x);
        CHECK(std::abs(evaluate(f, element_mul(s, x)) - lhs) < 1e-9);
        CHECK(std::abs(evaluate(f, element_mul(x, s)) - lhs) < 1e-9);
        CHECK(std::abs(evaluate(f, element_mul(s, element_mul(x, s))) - lhs) <
              1e-9);
    }
}

TEST_CASE("abs_continuous: support containment") {
    BlockAlgebra m2({2});
    std::mt19937_64 rng(11);
    PositiveFunctional faithful(m2, {lebtest::random_psd(2, rng) +
                                     0.1 * CMatrix::Identity(2, 2)});
    PositiveFunctional any = random_functional(m2, rng);
    CHECK(abs_continuous(any, faithful));
    CHECK(abs_continuous(any, any));
    PositiveFunctional e1(m2, {cdiag({1, 0})});
    PositiveFunctional e2(m2, {cdiag({0, 1})});
    CHECK_FALSE(abs_continuous(e1, e2));
}

TEST_CASE("ac_witness certifies the dominance sequence") {
    BlockAlgebra m2({2});
    std::mt19937_64 rng(13);
    PositiveFunctional g = random_functional(m2, rng, false);
    AcWitness w = ac_witness(g, g);
    CHECK(w.alphas.size() == 1);
    CHECK(w.alphas[0] == doctest::Approx(1.0).epsilon(1e-8));

    PositiveFunctional twice(m2, {2.0 * g.density_block(0).matrix()});
    CHECK(ac_witness(twice, g).alphas[0] == doctest::Approx(2.0).epsilon(1e-8));

    // each f_n <= alpha_n g
    PositiveFunctional f = random_functional(m2, rng, false);
    AcWitness wf = ac_witness(f, g);
    PositiveFunctional bound(
        m2, {wf.alphas[0] * (1 + 1e-9) * g.density_block(0).matrix()});
    CHECK(order_leq(wf.sequence[0], bound));

    PositiveFunctional e1(m2, {cdiag({1, 0})});
    PositiveFunctional e2(m2, {cdiag({0, 1})});
    CHECK_THROWS_AS(ac_witness(e1, e2), NotAbsolutelyContinuous);
}

TEST_CASE("singular") {
    BlockAlgebra m2({2});
    PositiveFunctional e1(m2, {cdiag({1, 0})});
    PositiveFunctional e2(m2, {cdiag({0, 1})});
    CHECK(singular(e1, e2));
    CHECK_FALSE(singular(e1, e1));
}

TEST_CASE("chain: f <= g implies f << g implies kernel containment") {
    std::mt19937_64 rng(17);
    BlockAlgebra alg({2, 3});
    for (int trial = 0; trial < 20; ++trial) {
        PositiveFunctional f = random_functional(alg, rng);
        std::vector<CMatrix> sum_blocks;
        PositiveFunctional extra = random_functional(alg, rng);
        for (int i = 0; i < 2; ++i)
            sum_blocks.push_back(f.density_block(i).matrix() +
                                 extra.density_block(i).matrix());
        PositiveFunctional g(alg, std::move(sum_blocks));
        REQUIRE(order_leq(f, g));
        CHECK(abs_continuous(f, g));
        // L_g inside L_f
        for (const AlgebraElement& a : left_kernel_basis(g)) {
            Complex v = evaluate(f, element_mul(element_adjoint(a), a));
            CHECK(std::abs(v) < 1e-9);
        }
    }
}

TEST_CASE("absolutely continuous and singular at once forces zero") {
    std::mt19937_64 rng(19);
    BlockAlgebra alg({3});
    for (int trial = 0; trial < 20; ++trial) {
        PositiveFunctional f = random_functional(alg, rng);
        PositiveFunctional g = random_functional(alg, rng);
        if (abs_continuous(f, g) && singular(f, g)) CHECK(f.is_zero());
    }
    // and directly: the zero functional satisfies both
    PositiveFunctional z = PositiveFunctional::zero(alg);
    PositiveFunctional g = random_functional(alg, rng);
    CHECK(abs_continuous(z, g));
    CHECK(singular(z, g));
}

TEST_CASE("gns: quotient dimensions") {
    BlockAlgebra m2({2});
    std::mt19937_64 rng(23);
    // faithful state: quotient is the whole 4-dimensional algebra
    PositiveFunctional faithful(
        m2, {lebtest::random_psd(2, rng) + 0.1 * CMatrix::Identity(2, 2)});
    CHECK(gns(faithful).quotient_dim == 4);
    // pure state: left kernel has dimension 2
    PositiveFunctional pure(m2, {cdiag({1, 0})});
    GnsData g = gns(pure);
    CHECK(g.quotient_dim == 2);
    CHECK(g.kernel_basis.size() == 2);
    // scalar algebra: trivial representation on C
    BlockAlgebra scalar({1});
    GnsData s = gns(PositiveFunctional(scalar, {cdiag({1})}));
    CHECK(s.quotient_dim == 1);
    CHECK(std::abs(std::abs(s.cyclic_vector(0)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(gns(PositiveFunctional::zero(m2)), ZeroFunctional);
}

TEST_CASE("gns: *-homomorphism, reconstruction and cyclicity") {
    std::mt19937_64 rng(29);
    BlockAlgebra alg({2, 2});
    PositiveFunctional f = random_functional(alg, rng);
    if (f.is_zero()) return;
    GnsData g = gns(f);
    const int d = g.quotient_dim;

    // enumerate basis elements in the module's (block,row,col) order
    std::vector<AlgebraElement> basis;
    for (int s = 0; s < alg.num_blocks(); ++s)
        for (int p = 0; p < alg.block_dim(s); ++p)
            for (int q = 0; q < alg.block_dim(s); ++q) {
                AlgebraElement e = AlgebraElement::zero(alg);
                std::vector<CMatrix> blocks = e.blocks();
                blocks[s](p, q) = 1.0;
                basis.emplace_back(alg, std::move(blocks));
            }
    REQUIRE(basis.size() == g.representation.size());

    // f(a) = <pi(a) xi, xi>
    for (size_t i = 0; i < basis.size(); ++i) {
        Complex rec = (g.cyclic_vector.adjoint() * g.representation[i] *
                       g.cyclic_vector)(0);
        CHECK(std::abs(rec - evaluate(f, basis[i])) < 1e-8);
    }
    // pi(xy) = pi(x) pi(y) and pi(x*) = pi(x)* on basis products
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            AlgebraElement prod = element_mul(basis[i], basis[j]);
            // expand the product in basis coordinates
            CMatrix expected = CMatrix::Zero(d, d);
            size_t idx = 0;
            for (int s = 0; s < alg.num_blocks(); ++s)
                for (int p = 0; p < alg.block_dim(s); ++p)
                    for (int q = 0; q < alg.block_dim(s); ++q) {
                        expected += prod.block(s)(p, q) * g.representation[idx];
                        ++idx;
                    }
            CHECK((g.representation[i] * g.representation[j] - expected)
                      .norm() < 1e-8);
        }
    for (size_t i = 0; i < basis.size(); ++i) {
        AlgebraElement adj = element_adjoint(basis[i]);
        CMatrix expected = CMatrix::Zero(d, d);
        size_t idx = 0;
        for (int s = 0; s < alg.num_blocks(); ++s)
            for (int p = 0; p < alg.block_dim(s); ++p)
                for (int q = 0; q < alg.block_dim(s); ++q) {
                    expected += adj.block(s)(p, q) * g.representation[idx];
                    ++idx;
                }
        CHECK((g.representation[i].adjoint() - expected).norm() < 1e-8);
    }
    // xi is cyclic: pi(basis) xi spans the quotient
    CMatrix span(d, static_cast<int>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        span.col(static_cast<int>(i)) = g.representation[i] * g.cyclic_vector;
    Eigen::ColPivHouseholderQR<CMatrix> qr(span);
    qr.setThreshold(1e-10);
    CHECK(qr.rank() == d);
}

TEST_CASE("corner extension: compression formula and norm preservation") {
    BlockAlgebra m2({2});
    AlgebraElement e(m2, {cdiag({1, 0})});
    CornerFunctional corner{{cdiag({2.5})}};
    PositiveFunctional ext = corner_extension(e, corner, m2);
    CHECK((ext.density_block(0).matrix() - 2.5 * cdiag({1, 0})).norm() < 1e-12);
    // restriction recovers the corner data
    CornerFunctional back = corner_restrict(ext, e);
    CHECK((back.density[0] - corner.density[0]).norm() < 1e-12);

    // e = identity: extension is the identity operation
    std::mt19937_64 rng(31);
    PositiveFunctional f(m2, {lebtest::random_psd(2, rng)});
    AlgebraElement id = AlgebraElement::identity(m2);
    PositiveFunctional same = corner_extension(id, corner_restrict(f, id), m2);
    CHECK((same.density_block(0).matrix() - f.density_block(0).matrix())
              .norm() < 1e-10);

    CHECK_THROWS_AS(
        corner_restrict(f, AlgebraElement(m2, {2.0 * CMatrix::Identity(2, 2)})),
        NotAProjection);
}

TEST_CASE("corner extension preserves order and absolute continuity") {
    std::mt19937_64 rng(37);
    BlockAlgebra alg({3, 2});
    // random projection element
    std::vector<CMatrix> proj_blocks;
    for (int n : alg.block_dims()) {
        CMatrix w = lebtest::random_complex(n, 1 + (int)(rng() % n), rng);
        Eigen::HouseholderQR<CMatrix> qr(w);
        CMatrix q = CMatrix(qr.householderQ()).leftCols(w.cols());
        proj_blocks.push_back(q * q.adjoint());
    }
    AlgebraElement e(alg, proj_blocks);

    for (int trial = 0; trial < 10; ++trial) {
        CornerFunctional cf, cg;
        for (const CMatrix& p : proj_blocks) {
            int r = static_cast<int>(std::lround(std::real(p.trace())));
            CMatrix small = lebtest::random_psd(r, rng);
            cf.density.push_back(small);
            cg.density.push_back(small + lebtest::random_psd(r, rng));
        }
        PositiveFunctional ef = corner_extension(e, cf, alg);
        PositiveFunctional eg = corner_extension(e, cg, alg);
        CHECK(order_leq(ef, eg));  // f <= g on the corner lifts
        // norm preservation: f~(1) = f_corner(corner identity)
        double corner_mass = 0.0;
        for (const CMatrix& c : cf.density)
            corner_mass += std::real(c.trace());
        CHECK(std::real(evaluate(ef, AlgebraElement::identity(alg))) ==
              doctest::Approx(corner_mass).epsilon(1e-10));
        // restriction direction: ef << eg downstairs too
        CHECK(abs_continuous(ef, eg));
    }
}

TEST_CASE("corner extension is the unique norm preserving one (2-block toy)") {
    // On C + C with e the first coordinate, a positive extension of value c
    // at e with total mass c must put zero in the second block.
    BlockAlgebra toy({1, 1});
    AlgebraElement e(toy, {cdiag({1}), cdiag({0})});
    CornerFunctional corner{{cdiag({3.0}), CMatrix::Zero(0, 0)}};
    PositiveFunctional ext = corner_extension(e, corner, toy);
    CHECK(std::real(ext.density_block(0).matrix()(0, 0)) ==
          doctest::Approx(3.0));
    CHECK(ext.density_block(1).rank() == 0);
    // the general positive extension has second-block mass t >= 0 and total
    // norm 3 + t: norm preservation forces t = 0, i.e. agreement with ext
    for (double t : {0.5, 1.0, 2.0}) {
        PositiveFunctional other(toy, {cdiag({3.0}), cdiag({t})});
        double norm_other =
            std::real(evaluate(other, AlgebraElement::identity(toy)));
        CHECK(norm_other > 3.0);  // not norm preserving
    }
}

TEST_CASE("representable: seminorm family support test") {
    BlockAlgebra alg({1, 1, 2});
    PositiveFunctional in_third(
        alg, {cdiag({0}), cdiag({0}), CMatrix::Identity(2, 2)});
    CHECK(representable(in_third, {{0, 1, 2}}));
    CHECK_FALSE(representable(in_third, {{0, 1}}));
    CHECK(representable(PositiveFunctional::zero(alg), {}));
    // zero-multiplication shadow: with no seminorms available, only the
    // zero functional is representable
    CHECK_FALSE(representable(in_third, {}));
}
