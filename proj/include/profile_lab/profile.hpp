#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "profile_lab/graph.hpp"

namespace plab {

// A point of a ratio profile: entries a_2..a_l, exact rationals; mixed
// profiles concatenate the per-q blocks for q = 2..r, q-major then j.
using ProfilePoint = std::vector<mpq_class>;

// --- power sums --------------------------------------------------------------

// (p_2(x), ..., p_l(x)) for an exact simplex vector; throws NotNormalized /
// NegativeEntry when the weight-vector invariants fail.
ProfilePoint power_sums(const std::vector<mpq_class>& x, int l);

// float path (tolerance 1e-12 on the normalization)
std::vector<double> power_sums(std::span<const double> x, int l);

// --- ratio profile points -----------------------------------------------------

// (hom(C_8)/hom(C_4)^2, ..., hom(C_{4l})/hom(C_4)^l), exact; HomCountZero when
// hom(C_4;G) = 0.  Number and density ratio profiles coincide.
ProfilePoint ratio_point_cycles(const Graph& g, int l);

// Necklace analogue over M_{G,q}; q = 2 agrees with ratio_point_cycles.
ProfilePoint ratio_point_necklaces(const Graph& g, int l, int q);

// Concatenation of the q = 2..r necklace points ((l-1)(r-1) entries).
ProfilePoint ratio_point_mixed(const Graph& g, int l, int r);

// Hyperstar ratios for a k-uniform hypergraph (k taken from g).
ProfilePoint ratio_point_hyperstars(const Hypergraph& g, int l);

// x_i = lambda_i^4 / sum_k lambda_k^4 over the spectrum of M_{G,q},
// descending. power_sums of the result reproduces the necklace ratio point
// within float tolerance.
std::vector<double> eigen_weight_vector(const Graph& g, int q, double tol = 1e-11);

// --- boundary patterns -------------------------------------------------------

// Multiplicity pattern for a boundary point of Pi_{n,l}: r_0 zeros followed by
// blocks of repeated values x_1 <= ... <= x_{l-1}. kind 1 fixes the odd-index
// multiplicities to 1 (r_0 >= 0 allowed); kind 2 has no zero block and fixes
// the even-index multiplicities to 1.
struct BoundaryPattern {
    int kind = 1;
    std::vector<long> multiplicities; // r_0 .. r_{l-1}
    std::vector<mpq_class> values;    // x_1 .. x_{l-1}, unnormalized
};

struct BoundaryResult {
    ProfilePoint point;
    bool collapsed = false; // some adjacent block values coincide
};

BoundaryResult boundary_point(const BoundaryPattern& pattern, int l);

// --- sampling ----------------------------------------------------------------

// Deterministic point cloud of the power-sum profile: per point, n uniform in
// [1, n_max], x Dirichlet-uniform on the (n-1)-simplex via sorted uniform
// gaps, emitting (p_2..p_l).
std::vector<std::vector<double>> sample_profile(int l, int n_max, long count,
                                                std::uint64_t seed);

// --- inverse realization -------------------------------------------------------

struct RealizeOptions {
    double tol = 1e-6;
    int restarts = 25;
    std::uint64_t seed = 1;
};

struct RealizeResult {
    bool feasible = false;
    std::vector<double> weights; // sorted descending
    double residual = 0.0;       // l2 norm of the power-sum mismatch
};

// Multi-start projected descent with Gauss-Newton refinement over the
// n-simplex; infeasibility is a value, not an error.
RealizeResult realize_weights(std::span<const double> target, int n,
                              const RealizeOptions& opt = {});

// --- fiber scaling -------------------------------------------------------------

// Coordinates b_{4i,q}, i = 1..l for q = 2..r, q-major.
using FiberPoint = std::vector<mpq_class>;

// b'_{4i,q} = b_{4i,q} * t^{4i(q-1)}; preserves induced ratio coordinates
// exactly for t > 0. OutOfRange unless 0 <= t <= 1.
FiberPoint fiber_scale(const FiberPoint& b, const mpq_class& t, int l, int r);

} // namespace plab
