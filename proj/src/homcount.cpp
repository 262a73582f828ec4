#include "profile_lab/homcount.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <thread>

namespace plab {

int effective_thread_count(int requested) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("PROFILE_LAB_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    return std::min(t, 64);
}

namespace {

// bound = |V(G)|^|V(H)| checked against the cap
void check_budget(long gn, long hn, const HomBudget& budget) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(gn),
                  static_cast<unsigned long>(hn));
    if (bound > mpz_class(static_cast<unsigned long>(budget.cap)))
        throw DomainError(ErrorCode::BudgetExceeded,
                          "enumeration bound " + bound.get_str() + " exceeds cap " +
                              std::to_string(budget.cap));
}

// BFS-ish ordering of H so each placed vertex sees as many placed neighbors
// as possible; component starts have no constraints.
std::vector<int> placement_order(const Graph& h) {
    std::vector<std::vector<int>> nbr(h.n);
    for (auto [u, v] : h.edges) {
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    std::vector<int> order;
    std::vector<char> placed(h.n, 0);
    std::vector<int> placed_nbrs(h.n, 0);
    for (int step = 0; step < h.n; ++step) {
        int best = -1;
        for (int v = 0; v < h.n; ++v) {
            if (placed[v]) continue;
            if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
                (placed_nbrs[v] == placed_nbrs[best] && v < best))
                best = v;
        }
        order.push_back(best);
        placed[best] = 1;
        for (int w : nbr[best]) ++placed_nbrs[w];
    }
    return order;
}

struct HomSearch {
    int hn = 0;
    int gn = 0;
    int words = 0;
    const AdjacencyBitset* adj = nullptr;
    // back_edges[i]: positions j < i whose H-vertices are adjacent to the one at i
    std::vector<std::vector<int>> back_edges;

    // work is partitioned on the images of the first two placed vertices;
    // item indices run over g.n^2 (or g.n when the pattern has one vertex)
    long work_items() const {
        return hn >= 2 ? static_cast<long>(gn) * gn : gn;
    }

    unsigned long long count_items(long lo, long hi) const {
        std::vector<int> img(hn, -1);
        std::vector<std::uint64_t> cand(static_cast<std::size_t>(hn) * words);
        unsigned long long total = 0;
        for (long item = lo; item < hi; ++item) {
            if (hn == 1) {
                ++total;
                continue;
            }
            int v0 = static_cast<int>(item / gn);
            int v1 = static_cast<int>(item % gn);
            img[0] = v0;
            img[1] = v1;
            bool ok = true;
            for (int back : back_edges[1])
                if (!adj->test(img[back], v1)) {
                    ok = false;
                    break;
                }
            if (ok) total += descend(2, img, cand);
        }
        return total;
    }

private:
    unsigned long long descend(int pos, std::vector<int>& img,
                               std::vector<std::uint64_t>& cand) const {
        if (pos == hn) return 1;
        std::uint64_t* mask = cand.data() + static_cast<std::size_t>(pos) * words;
        const auto& back = back_edges[pos];
        if (back.empty()) {
            for (int w = 0; w < words; ++w) mask[w] = ~std::uint64_t{0};
            int tail = gn & 63;
            if (tail) mask[words - 1] = (std::uint64_t{1} << tail) - 1;
        } else {
            const std::uint64_t* first = adj->row(img[back[0]]);
            for (int w = 0; w < words; ++w) mask[w] = first[w];
            for (std::size_t t = 1; t < back.size(); ++t) {
                const std::uint64_t* r = adj->row(img[back[t]]);
                for (int w = 0; w < words; ++w) mask[w] &= r[w];
            }
        }
        if (pos == hn - 1) {
            unsigned long long c = 0;
            for (int w = 0; w < words; ++w) c += std::popcount(mask[w]);
            return c;
        }
        unsigned long long total = 0;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                img[pos] = v;
                total += descend(pos + 1, img, cand);
            }
        }
        return total;
    }
};

} // namespace

mpz_class brute_force_hom(const Graph& h, const Graph& g, const HomBudget& budget) {
    if (h.n == 0) return 1; // the empty map
    if (g.n == 0) return 0;
    if (g.n == 1) return h.edges.empty() ? 1 : 0;
    check_budget(g.n, h.n, budget);

    std::vector<int> order = placement_order(h);
    std::vector<int> pos_of(h.n);
    for (int i = 0; i < h.n; ++i) pos_of[order[i]] = i;

    AdjacencyBitset adj(g);
    HomSearch search;
    search.hn = h.n;
    search.gn = g.n;
    search.words = adj.words;
    search.adj = &adj;
    search.back_edges.assign(h.n, {});
    for (auto [u, v] : h.edges) {
        int pu = pos_of[u], pv = pos_of[v];
        if (pu > pv) std::swap(pu, pv);
        search.back_edges[pv].push_back(pu);
    }

    const long items = search.work_items();
    int threads = effective_thread_count(budget.threads);
    threads = static_cast<int>(std::min<long>(threads, items));
    if (threads <= 1) {
        return mpz_class(static_cast<unsigned long>(search.count_items(0, items)));
    }
    std::vector<unsigned long long> partial(threads, 0);
    std::vector<std::thread> pool;
    long chunk = (items + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = t * chunk;
        long hi = std::min(items, lo + chunk);
        pool.emplace_back([&, t, lo, hi] { partial[t] = search.count_items(lo, hi); });
    }
    for (auto& th : pool) th.join();
    mpz_class total = 0;
    for (auto p : partial) total += static_cast<unsigned long>(p);
    return total;
}

namespace {

struct HyperSearch {
    const Hypergraph* h = nullptr;
    const Hypergraph* g = nullptr;

    bool image_is_edge(const std::vector<int>& image) const {
        std::vector<int> key = image;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end()) return false;
        return std::binary_search(g->edges.begin(), g->edges.end(), key);
    }

    unsigned long long descend(int v, std::vector<int>& img) const {
        if (v == h->n) return 1;
        unsigned long long total = 0;
        for (int t = 0; t < g->n; ++t) {
            img[v] = t;
            bool ok = true;
            // check every hyperedge of H that just became fully assigned
            for (const auto& e : h->edges) {
                if (std::find(e.begin(), e.end(), v) == e.end()) continue;
                bool complete = true;
                for (int w : e)
                    if (w > v) {
                        complete = false;
                        break;
                    }
                if (!complete) continue;
                std::vector<int> image;
                image.reserve(e.size());
                for (int w : e) image.push_back(img[w]);
                if (!image_is_edge(image)) {
                    ok = false;
                    break;
                }
            }
            if (ok) total += descend(v + 1, img);
        }
        img[v] = -1;
        return total;
    }
};

} // namespace

mpz_class brute_force_hom_hyper(const Hypergraph& h, const Hypergraph& g,
                                const HomBudget& budget) {
    if (h.k != g.k)
        throw DomainError(ErrorCode::UniformityMismatch,
                          "pattern uniformity " + std::to_string(h.k) + " vs target " +
                              std::to_string(g.k));
    if (h.n == 0) return 1;
    if (g.n == 0) return 0;
    check_budget(g.n, h.n, budget);
    HyperSearch search{&h, &g};
    std::vector<int> img(h.n, -1);
    return mpz_class(static_cast<unsigned long>(search.descend(0, img)));
}

mpz_class cycle_hom(const Graph& g, long j) {
    if (j < 3) throw DomainError(ErrorCode::InvalidSize, "cycle length must be >= 3");
    if (g.n == 0) return 0;
    return trace_power(adjacency_matrix(g), j);
}

mpz_class necklace_hom(const Graph& g, long j, int q) {
    if (j < 3) throw DomainError(ErrorCode::InvalidSize, "necklace length must be >= 3");
    if (q < 2) throw DomainError(ErrorCode::InvalidSize, "necklace clique order must be >= 2");
    if (g.n == 0) return 0;
    mpz_class t = trace_power(clique_edge_matrix(g, q), j);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(q - 2));
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(j));
    return scale * t;
}

mpz_class hyperstar_hom(const Hypergraph& g, long b) {
    if (b < 1) throw DomainError(ErrorCode::InvalidSize, "branch count must be >= 1");
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(g.k - 1));
    mpz_class total = 0;
    for (long d : g.degrees()) {
        mpz_class term;
        mpz_class base = fact * d;
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(b));
        total += term;
    }
    return total;
}

mpq_class density(const Graph& h, const Graph& g, const HomBudget& budget) {
    if (g.n == 0) throw DomainError(ErrorCode::EmptyTarget, "density needs a nonempty target");
    mpz_class hom = brute_force_hom(h, g, budget);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(g.n),
                  static_cast<unsigned long>(h.n));
    mpq_class d(hom, den);
    d.canonicalize();
    return d;
}

} // namespace plab
