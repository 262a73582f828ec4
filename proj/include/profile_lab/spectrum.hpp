#pragma once

#include <vector>

#include "profile_lab/graph.hpp"
#include "profile_lab/matrix.hpp"

namespace plab {

// All real eigenvalues of a symmetric integer matrix, descending, each within
// tol of exact. Cyclic Jacobi; the result is cross-checked against the exact
// traces tr(M^2) and tr(M^4) (within dim * max|lambda|^j * tol * j) and
// ConvergenceFailure is raised when either the sweeps or the check fail.
std::vector<double> spectrum(const SymmetricIntMatrix& m, double tol);

// Coarse classification of the spectrum of M_{G,p} for a graph from the
// scaled expander family with nominal scale k: the single top eigenvalue,
// the mid-scale band, and the O(1) band. Band thresholds default to the
// geometric midpoints 2^{1.5k} and 2^{0.5k} and are configurable.
struct SpectrumBuckets {
    double top = 0.0;
    long mid_count = 0;
    double mid_max = 0.0;
    long small_count = 0;
    double small_max = 0.0;
    double threshold_hi = 0.0;
    double threshold_lo = 0.0;
};

struct BucketThresholds {
    double hi_exponent = 1.5; // threshold 2^(hi_exponent * k)
    double lo_exponent = 0.5; // threshold 2^(lo_exponent * k)
};

SpectrumBuckets spectrum_buckets(const Graph& g, int p, int k, double tol,
                                 const BucketThresholds& thresholds = {});

// Degree/triangle/second-eigenvalue report for provider verification.
NdLambdaReport verify_ndlambda(const Graph& g, double tol);

} // namespace plab
