#pragma once

#include <cmath>
#include <limits>

namespace lebdec {

// All numerical thresholds used by the toolkit live here.  Every routine
// takes a Tolerances value explicitly; there are no global knobs.
struct Tolerances {
    // Relative rank / support cutoff.  A value of 0 selects the automatic
    // convention dim * machine_epsilon; any positive value overrides it.
    double rank_rel = 0.0;

    // Hermitian symmetry check on input matrices, relative to the largest
    // entry magnitude (and at least absolute at that value).
    double hermitian_abs = 1e-12;

    // Largest admissible relative negative eigenvalue before an input is
    // rejected as non-PSD.  Smaller negatives are clipped to zero.
    double psd_slack = 1e-8;

    // ||A:B|| below this (relative to max(||A||,||B||,1)) means singular.
    double singular = 1e-9;

    // Residual allowed in decomposition identities (regular + singular = A).
    double residual = 1e-8;

    // Iterative parallel-sum limit: stop when successive iterates differ by
    // less than this in Frobenius norm.
    double iter_stop = 1e-10;

    // Support-containment slack used by range checks (absolute, on
    // projections whose entries are O(1)).
    double support = 1e-7;

    double rank_cutoff(double max_eig, int dim) const {
        double rel = rank_rel > 0.0
                         ? rank_rel
                         : dim * std::numeric_limits<double>::epsilon();
        return rel * std::max(max_eig, 1.0);
    }
};

}  // namespace lebdec
