#pragma once

#include <cstdint>
#include <string>

#include "lebdec/functionals.hpp"
#include "lebdec/opdecomp.hpp"

namespace lebdec {

struct Decomposition {
    PositiveFunctional regular;
    PositiveFunctional singular_part;
    double alpha_min = 0.0;
    bool unique = false;
    int iterations_used = 0;
};

/// Lebesgue decomposition f = f_r + f_s with respect to g: f_r is the
/// greatest part absolutely continuous w.r.t. g, f_s is singular to g.
/// Computed blockwise on densities by shorting to the support of g (schur)
/// or by the iterated-parallel-sum limit (iterative).
Decomposition decompose(const PositiveFunctional& f,
                        const PositiveFunctional& g,
                        DecompMode mode = DecompMode::schur);

/// Uniqueness of the decomposition, certified by the uniform-dominance
/// bound alpha with f_r <= alpha g.  On a finite-dimensional algebra alpha
/// is always finite, so the answer is always (true, alpha); the cross-check
/// looks for a nonzero functional below f_r yet singular to g.
std::pair<bool, double> is_unique(const PositiveFunctional& f,
                                  const PositiveFunctional& g);

struct CheckResult {
    std::string name;
    bool passed = false;
    double measure = 0.0;  // residual or witness norm backing the verdict
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Re-derive every Decomposition invariant from scratch, plus sampled
/// maximality: no random f0 <= f with f0 << g may escape f0 <= f_r.
VerificationReport verify_decomposition(const PositiveFunctional& f,
                                        const PositiveFunctional& g,
                                        const Decomposition& d,
                                        std::uint64_t seed = 0,
                                        int samples = 20);

}  // namespace lebdec
