#include "profile_lab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace plab {

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<long> Hypergraph::degrees() const {
    std::vector<long> deg(n, 0);
    for (const auto& e : edges)
        for (int v : e) ++deg[v];
    return deg;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw DomainError(ErrorCode::ParseError, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw DomainError(ErrorCode::ParseError, "loop edge rejected");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw DomainError(ErrorCode::ParseError, "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

Hypergraph make_hypergraph(int n, int k, std::vector<std::vector<int>> edges) {
    if (n < 0) throw DomainError(ErrorCode::ParseError, "negative vertex count");
    if (k < 2) throw DomainError(ErrorCode::ParseError, "uniformity must be >= 2");
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw DomainError(ErrorCode::ParseError, "hyperedge size differs from uniformity");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw DomainError(ErrorCode::ParseError, "hyperedge has repeated vertex");
        if (e.front() < 0 || e.back() >= n)
            throw DomainError(ErrorCode::ParseError, "hyperedge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph{n, k, std::move(edges)};
}

Graph complete_graph(int m) {
    if (m < 1) throw DomainError(ErrorCode::InvalidSize, "complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
    return Graph{m, std::move(e)};
}

Graph cycle_graph(int c) {
    if (c < 3) throw DomainError(ErrorCode::InvalidSize, "cycle length must be >= 3");
    std::vector<std::pair<int, int>> e;
    e.reserve(c);
    for (int v = 0; v + 1 < c; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, c - 1);
    std::sort(e.begin(), e.end());
    return Graph{c, std::move(e)};
}

Graph q_ify(const Graph& g, int q) {
    if (q < 2) throw DomainError(ErrorCode::InvalidSize, "q must be >= 2");
    if (q == 2) return g;
    std::vector<std::pair<int, int>> out = g.edges;
    int next = g.n;
    for (const auto& [u, v] : g.edges) {
        // fresh vertices for this edge, appended in branch-index order
        for (int i = 0; i < q - 2; ++i) {
            int w = next + i;
            out.emplace_back(u, w);
            out.emplace_back(v, w);
            for (int j = 0; j < i; ++j) out.emplace_back(next + j, w);
        }
        next += q - 2;
    }
    std::sort(out.begin(), out.end());
    return Graph{next, std::move(out)};
}

Graph necklace_graph(int c, int q) { return q_ify(cycle_graph(c), q); }

Hypergraph hyperstar(int k, int b) {
    if (k < 2) throw DomainError(ErrorCode::InvalidSize, "uniformity must be >= 2");
    if (b < 1) throw DomainError(ErrorCode::InvalidSize, "branch count must be >= 1");
    std::vector<std::vector<int>> edges;
    edges.reserve(b);
    int next = 1;
    for (int i = 0; i < b; ++i) {
        std::vector<int> e;
        e.push_back(0);
        for (int t = 0; t < k - 1; ++t) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph{1 + b * (k - 1), k, std::move(edges)};
}

Graph disjoint_union(std::span<const Graph> parts) {
    Graph out;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges) out.edges.emplace_back(u + out.n, v + out.n);
        out.n += g.n;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Graph add_isolated_vertices(const Graph& g, int t) {
    if (t < 0) throw DomainError(ErrorCode::InvalidSize, "cannot add a negative vertex count");
    Graph out = g;
    out.n += t;
    return out;
}

Hypergraph as_hypergraph(const Graph& g) {
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return Hypergraph{g.n, 2, std::move(edges)};
}

AdjacencyBitset::AdjacencyBitset(const Graph& g)
    : n(g.n), words((g.n + 63) / 64), bits(static_cast<std::size_t>(g.n) * ((g.n + 63) / 64), 0) {
    for (auto [u, v] : g.edges) {
        bits[static_cast<std::size_t>(u) * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits[static_cast<std::size_t>(v) * words + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
}

long count_triangles(const Graph& g) {
    AdjacencyBitset adj(g);
    long total = 0; // counts each triangle once per edge, i.e. 3x
    for (auto [u, v] : g.edges) {
        const std::uint64_t* ru = adj.row(u);
        const std::uint64_t* rv = adj.row(v);
        for (int w = 0; w < adj.words; ++w) total += std::popcount(ru[w] & rv[w]);
    }
    return total / 3;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> nbr(g.n);
    for (auto [u, v] : g.edges) {
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nbr[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.n;
}

namespace {

// branch and bound on bitset candidates, pruned by remaining popcount
void max_clique_rec(const std::vector<std::uint64_t>& rows, std::uint64_t cand,
                    int depth, int& best) {
    while (cand) {
        if (depth + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (depth + 1 > best) best = depth + 1;
        std::uint64_t next = cand & rows[v];
        if (next) max_clique_rec(rows, next, depth + 1, best);
    }
}

} // namespace

int clique_number(const Graph& g) {
    if (g.n > 64)
        throw DomainError(ErrorCode::FeasibilityExceeded, "exact max-clique limited to 64 vertices");
    if (g.n == 0) return 0;
    std::vector<std::uint64_t> rows(g.n, 0);
    for (auto [u, v] : g.edges) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    int best = 1;
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    max_clique_rec(rows, all, 0, best);
    return best;
}

} // namespace plab
