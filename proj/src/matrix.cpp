#include "profile_lab/matrix.hpp"

#include <bit>

namespace plab {

mpz_class SymmetricIntMatrix::trace() const {
    mpz_class t = 0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool SymmetricIntMatrix::is_symmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SymmetricIntMatrix multiply(const SymmetricIntMatrix& a, const SymmetricIntMatrix& b) {
    const int n = a.dim();
    SymmetricIntMatrix c(n);
    // ikj order so the inner loop runs down contiguous rows
    for (int i = 0; i < n; ++i) {
        mpz_class* ci = c.row(i);
        const mpz_class* ai = a.row(i);
        for (int k = 0; k < n; ++k) {
            if (ai[k] == 0) continue;
            const mpz_class* bk = b.row(k);
            for (int j = 0; j < n; ++j)
                mpz_addmul(ci[j].get_mpz_t(), ai[k].get_mpz_t(), bk[j].get_mpz_t());
        }
    }
    return c;
}

mpz_class trace_of_product(const SymmetricIntMatrix& a, const SymmetricIntMatrix& b) {
    const int n = a.dim();
    mpz_class t = 0;
    for (int i = 0; i < n; ++i) {
        const mpz_class* ai = a.row(i);
        const mpz_class* bi = b.row(i);
        for (int j = 0; j < n; ++j)
            mpz_addmul(t.get_mpz_t(), ai[j].get_mpz_t(), bi[j].get_mpz_t());
    }
    return t;
}

mpz_class trace_power(const SymmetricIntMatrix& m, long j) {
    if (j < 1) throw DomainError(ErrorCode::InvalidSize, "trace_power needs j >= 1");
    if (j == 1) return m.trace();
    if (j == 2) return trace_of_product(m, m);
    // binary powering; the final multiply is folded into a trace-of-product
    long half = j / 2;
    SymmetricIntMatrix p = m;
    SymmetricIntMatrix acc;
    bool have_acc = false;
    long e = half;
    while (e > 0) {
        if (e & 1) {
            acc = have_acc ? multiply(acc, p) : p;
            have_acc = true;
        }
        e >>= 1;
        if (e > 0) p = multiply(p, p);
    }
    if (j % 2 == 0) return trace_of_product(acc, acc);
    // odd j: tr(M^j) = tr(M^half * M^half * M) = sum_{i,k} (M^half^2)_{ik} M_{ki};
    // do it as tr((acc*acc) * m) with one extra multiply
    return trace_of_product(multiply(acc, acc), m);
}

std::vector<mpz_class> fourth_power_traces(const SymmetricIntMatrix& m, int l) {
    if (l < 1) throw DomainError(ErrorCode::InvalidSize, "need l >= 1");
    SymmetricIntMatrix m2 = multiply(m, m);
    std::vector<mpz_class> tr;
    tr.reserve(l);
    tr.push_back(trace_of_product(m2, m2));
    if (l == 1) return tr;
    SymmetricIntMatrix m4 = multiply(m2, m2);
    SymmetricIntMatrix q = m4;
    for (int j = 2; j <= l; ++j) {
        tr.push_back(trace_of_product(q, m4));
        if (j < l) q = multiply(q, m4);
    }
    return tr;
}

SymmetricIntMatrix adjacency_matrix(const Graph& g) {
    SymmetricIntMatrix a(g.n);
    for (auto [u, v] : g.edges) a.set(u, v, 1);
    return a;
}

namespace {

// number of r-cliques inside the vertex set `mask` (mask is consumed)
long count_cliques_in(const AdjacencyBitset& adj, std::vector<std::uint64_t>& mask, int r) {
    if (r == 0) return 1;
    const int words = adj.words;
    if (r == 1) {
        long c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(mask[w]);
        return c;
    }
    long total = 0;
    for (int w = 0; w < words; ++w) {
        std::uint64_t bits = mask[w];
        while (bits) {
            int v = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            // clear v so each clique is enumerated once (ascending order)
            mask[w] &= ~(std::uint64_t{1} << (v & 63));
            std::vector<std::uint64_t> next(words);
            const std::uint64_t* rv = adj.row(v);
            for (int t = 0; t < words; ++t) next[t] = mask[t] & rv[t];
            total += count_cliques_in(adj, next, r - 1);
        }
    }
    return total;
}

} // namespace

SymmetricIntMatrix clique_edge_matrix(const Graph& g, int q) {
    if (q < 2) throw DomainError(ErrorCode::InvalidSize, "clique order must be >= 2");
    if (q > 8) throw DomainError(ErrorCode::FeasibilityExceeded, "clique order above 8 unsupported");
    if (q == 2) return adjacency_matrix(g);
    SymmetricIntMatrix m(g.n);
    AdjacencyBitset adj(g);
    const int words = adj.words;
    std::vector<std::uint64_t> common(words);
    for (auto [u, v] : g.edges) {
        const std::uint64_t* ru = adj.row(u);
        const std::uint64_t* rv = adj.row(v);
        for (int w = 0; w < words; ++w) common[w] = ru[w] & rv[w];
        std::vector<std::uint64_t> scratch = common;
        long c = count_cliques_in(adj, scratch, q - 2);
        if (c != 0) m.set(u, v, c);
    }
    return m;
}

} // namespace plab
