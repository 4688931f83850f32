#pragma once

#include "uff/bigint.hpp"

namespace uff {

// Floating-point evaluation of the closed-form estimates used in the
// dominance discussion, exactly as displayed there (no sharper correction
// terms), so the tests measure those formulas against exact binomials.

/// Stirling estimate of C(k,j):
///   (1/sqrt(2*pi)) * k^(k+1/2) / (j^(j+1/2) * (k-j)^(k-j+1/2)),
/// evaluated in log space.  The endpoints j = 0 and j = k are singular and
/// rejected with std::domain_error.
double stirling_binom(int k, int j);

/// sqrt(2/pi) * 2^n / sqrt(n), the central-layer estimate, in log space.
double central_binom_approx(int n);

/// First chain layer over the second: C(n,ceil(n/2)) / C(m-1,ceil((m-1)/2))
/// with m = ceil(n/2), against the printed estimate 2^((n-1)/2).
struct DominanceRatio {
    double exact_ratio;
    double paper_estimate;
};
DominanceRatio dominance_ratio(int n);

/// (1/(2*pi)) * 2^(n+2) / sqrt(t*(n-t)): the heuristic yield of splitting a
/// thickness-t cushion off the ground set.  Requires 1 <= t <= n-1.
double cushion_split_estimate(int n, int t);

struct ApproxReport {
    int n = 0;          // the evaluated ground (or top index k)
    BigInt exact;
    double approx = 0;
    double rel_error = 0;  // |approx - exact| / exact
};

ApproxReport stirling_report(int k, int j);
ApproxReport central_report(int n);

}  // namespace uff
