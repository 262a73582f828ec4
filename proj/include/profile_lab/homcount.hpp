#pragma once

#include <gmpxx.h>

#include "profile_lab/graph.hpp"
#include "profile_lab/matrix.hpp"

namespace plab {

// Enumeration budget for the brute-force oracles. The cap bounds
// |V(G)|^|V(H)| before any pruning; enumeration itself partitions on the
// image of the first vertex and may run on several threads (results are
// exact sums, independent of thread count).
struct HomBudget {
    unsigned long long cap = 100'000'000ULL;
    int threads = 0; // 0 = decide from PROFILE_LAB_THREADS / hardware
};

int effective_thread_count(int requested);

// Exact number of maps V(H) -> V(G) sending every edge of H to an edge of G.
mpz_class brute_force_hom(const Graph& h, const Graph& g, const HomBudget& budget = {});

// Hypergraph convention: a map must send every hyperedge of H bijectively
// onto a hyperedge of G. For hyperstars this reproduces
// sum_v ((k-1)! d(v))^b, which is the convention the closed formulas assume.
mpz_class brute_force_hom_hyper(const Hypergraph& h, const Hypergraph& g,
                                const HomBudget& budget = {});

// hom(C_j; G) = tr(A_G^j), exact.
mpz_class cycle_hom(const Graph& g, long j);

// hom(N_{j,q}; G) = ((q-2)!)^j * tr(M_{G,q}^j), exact. Each clique block of
// the necklace lands on an ordered (q-2)-tuple of apex images, hence the
// factorial factor per block; it is 1 for q <= 3 and cancels in every
// ratio profile.
mpz_class necklace_hom(const Graph& g, long j, int q);

// hom(S^(k)_b; G) = sum_v ((k-1)! d(v))^b, exact.
mpz_class hyperstar_hom(const Hypergraph& g, long b);

// t(H;G) = hom(H;G) / |V(G)|^|V(H)| as an exact rational in [0,1].
mpq_class density(const Graph& h, const Graph& g, const HomBudget& budget = {});

} // namespace plab
