#pragma once

#include <gmpxx.h>

#include <vector>

#include "profile_lab/graph.hpp"

namespace plab {

// Dense symmetric matrix of arbitrary-precision integers. All counting paths
// stay in exact integer arithmetic; floats appear only in the spectrum
// diagnostics (spectrum.hpp).
class SymmetricIntMatrix {
public:
    SymmetricIntMatrix() = default;
    explicit SymmetricIntMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    void set(int i, int j, mpz_class v) {
        a_[static_cast<std::size_t>(i) * dim_ + j] = v;
        a_[static_cast<std::size_t>(j) * dim_ + i] = std::move(v);
    }

    mpz_class trace() const;
    bool is_symmetric() const;
    bool operator==(const SymmetricIntMatrix&) const = default;

    // raw row access for the multiply kernels
    const mpz_class* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * dim_; }
    mpz_class* row(int i) { return a_.data() + static_cast<std::size_t>(i) * dim_; }

private:
    int dim_ = 0;
    std::vector<mpz_class> a_;
};

SymmetricIntMatrix multiply(const SymmetricIntMatrix& a, const SymmetricIntMatrix& b);

// tr(a*b) without forming the product (both symmetric).
mpz_class trace_of_product(const SymmetricIntMatrix& a, const SymmetricIntMatrix& b);

// Exact tr(M^j), j >= 1, via binary powering. No floating point anywhere.
mpz_class trace_power(const SymmetricIntMatrix& m, long j);

// tr(M^{4j}) for j = 1..l, sharing one fourth power across the list.
std::vector<mpz_class> fourth_power_traces(const SymmetricIntMatrix& m, int l);

// 0/1 adjacency matrix, zero diagonal.
SymmetricIntMatrix adjacency_matrix(const Graph& g);

// Entry (u,v) = number of q-cliques of g containing edge {u,v}; q = 2 gives
// the adjacency matrix. Computed by counting (q-2)-cliques in the common
// neighborhood of u and v over cached neighborhood bitsets. q <= 8.
SymmetricIntMatrix clique_edge_matrix(const Graph& g, int q);

} // namespace plab
