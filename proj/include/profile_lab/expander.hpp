#pragma once

#include <span>

#include "profile_lab/graph.hpp"

namespace plab {

// Scaled triangle-free regular graph family used by the mixed construction.
//
// The algebraic provider is the band circulant on Z_{8^k} whose connection
// set is the symmetric interval of width 2^{2k}+1 centered at 8^k/2. The
// interval lies inside the middle third of Z_{8^k}, so it is sum-free and the
// graph is provably triangle-free; it is connected, non-bipartite and
// d-regular with d = 2^{2k}+1. Growth per step of k: n ratio 8, degree ratio
// about 4. The measured second eigenvalue for each k is recorded in the
// constants table below; tests check against those measured values.
//
// The provider is pluggable: any graph passing verify_ndlambda can be
// substituted, and a small fallback library (Petersen, Heawood) supports
// desk-scale structural demos.
enum class ExpanderProvider { Algebraic, Fallback };

struct ExpanderOptions {
    ExpanderProvider provider = ExpanderProvider::Algebraic;
    long vertex_cap = 2048;
};

// Measured once from the implemented construction; version bumps when the
// construction changes.
struct MeasuredExpanderWindow {
    int k;
    long n;
    long degree;
    double lambda2_lo;
    double lambda2_hi;
};

inline constexpr int kExpanderConstantsVersion = 1;
std::span<const MeasuredExpanderWindow> measured_expander_windows();

// Smallest k the algebraic construction supports.
inline constexpr int kAlgebraicMinScale = 2;

Graph expander_graph(int k, const ExpanderOptions& opt = {});

// fallback library
Graph petersen_graph();
Graph heawood_graph();

} // namespace plab
