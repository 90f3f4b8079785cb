#pragma once

#include "lebdec/numkernel.hpp"

namespace lebdec {

// Operator-level Lebesgue theory.  The parallel-sum and shorted-operator
// formulas below are the classical ones from Ando's theory of operator
// absolute continuity (A:B = A(A+B)^+ B; shorting = generalized Schur
// complement); at finite dimension they are exact.

enum class DecompMode { schur, iterative };

struct OperatorDecomposition {
    PsdOperator regular;
    PsdOperator singular;
    double alpha_min = 0.0;  // +inf when the regular part escapes range(B)
    int iterations_used = 0;
};

/// Parallel sum A:B = A(A+B)^+ B, the PSD analogue of the harmonic mean.
PsdOperator parallel_sum(const PsdOperator& a, const PsdOperator& b,
                         const Tolerances& tol = {});

/// Largest PSD operator C <= A with range(C) inside range(P).
PsdOperator shorted_operator(const PsdOperator& a, const Projection& p,
                             const Tolerances& tol = {});

/// Split A into a part uniformly dominated by B plus a remainder singular
/// to B.  Schur mode shorts A to the support of B; iterative mode follows
/// the limit of A:(nB) over a doubling schedule.
OperatorDecomposition operator_lebesgue(const PsdOperator& a,
                                        const PsdOperator& b,
                                        DecompMode mode = DecompMode::schur,
                                        const Tolerances& tol = {});

/// True when no nonzero PSD operator sits below both A and B.
bool operators_singular(const PsdOperator& a, const PsdOperator& b,
                        const Tolerances& tol = {});

/// Kernel containment ker(G) <= ker(F): the finite-dimensional form of
/// closability of the quadratic form of F with respect to that of G.
bool form_closable(const PsdOperator& f, const PsdOperator& g,
                   const Tolerances& tol = {});

}  // namespace lebdec
