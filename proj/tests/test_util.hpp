#pragma once

#include <random>

#include "lebdec/numkernel.hpp"

namespace lebtest {

using namespace lebdec;

inline CMatrix random_complex(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

inline CMatrix random_hermitian(int n, std::mt19937_64& rng) {
    CMatrix m = random_complex(n, n, rng);
    return (m + m.adjoint()) / 2.0;
}

inline CMatrix random_psd(int n, std::mt19937_64& rng) {
    CMatrix m = random_complex(n, n, rng);
    return m * m.adjoint();
}

/// PSD with prescribed rank r < n.
inline CMatrix random_psd_rank(int n, int r, std::mt19937_64& rng) {
    CMatrix m = random_complex(n, r, rng);
    return m * m.adjoint();
}

inline CMatrix random_unitary(int n, std::mt19937_64& rng) {
    CMatrix m = random_complex(n, n, rng);
    Eigen::HouseholderQR<CMatrix> qr(m);
    CMatrix q = qr.householderQ();
    return q;
}

/// Random contraction 0 <= R <= I.
inline CMatrix random_contraction(int n, std::mt19937_64& rng) {
    CMatrix r = random_psd(n, rng);
    Eigen::SelfAdjointEigenSolver<CMatrix> s(r, Eigen::EigenvaluesOnly);
    return r / (s.eigenvalues()(n - 1) * (1.0 + 1e-12));
}

inline CMatrix cdiag(std::initializer_list<double> vals) {
    int n = static_cast<int>(vals.size());
    CMatrix m = CMatrix::Zero(n, n);
    int i = 0;
    for (double v : vals) m(i, i) = v, ++i;
    return m;
}

}  // namespace lebtest
