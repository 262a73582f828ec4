#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "profile_lab/expander.hpp"
#include "profile_lab/graph.hpp"
#include "profile_lab/profile.hpp"

namespace plab {

enum class Family { Cycles, Necklaces, Mixed, Hyperstars };

// Target of a realization/convergence run: one weight block per family (one
// per q = 2..r for the mixed family), each normalized to sum 1 within 1e-12.
struct TargetSpec {
    std::vector<std::vector<double>> y;
    int l = 2;
    int q = 3; // necklaces
    int r = 3; // mixed
    int k = 2; // hyperstars
};

void validate_target_block(std::span<const double> y);

// All real-valued sizes round to nearest, ties up; zero weight components are
// skipped rather than instantiated.
long round_scaled(double value);

// Disjoint union of K_{round(y_i^{1/4} N)+1}; every nonzero component must
// reach size >= 2 (ScaleTooSmall otherwise).
Graph clique_sequence_cycles(std::span<const double> y, long N);

// Disjoint union of K_{round(z_i N)+1} with z_i = y_i^{1/(4(q-1))}; every
// clique must reach size >= q.
Graph clique_sequence_necklaces(std::span<const double> y, int q, long N);

// Mixed construction: for each q block and nonzero component, the q-ification
// of the provider graph at scale round(log2(y_i N^{r-q}) / 8).
Graph expander_sequence_mixed(const std::vector<std::vector<double>>& y_by_q, long N,
                              const ExpanderOptions& opt = {});

// Disjoint union of hyperstars with round(y_i^{1/k} N / (k-1)!) branches.
Hypergraph hyperstar_sequence(std::span<const double> y, int k, long N);

struct ConvergenceRow {
    long N = 0;
    ProfilePoint point; // exact rational ratio point of the constructed graph
    double err_inf = 0.0;
    long graph_size = 0;
};

// One row per schedule entry; the point is evaluated exactly (closed-form
// spectra for the clique families, traces on the materialized parts for the
// mixed family). Construction errors are annotated with the failing N.
std::vector<ConvergenceRow> convergence_experiment(Family family, const TargetSpec& target,
                                                   std::span<const long> schedule,
                                                   const ExpanderOptions& opt = {});

} // namespace plab
