#include "doctest.h"

#include <random>

#include "profile_lab/graph.hpp"
#include "profile_lab/homcount.hpp"
#include "profile_lab/expander.hpp"
#include "profile_lab/matrix.hpp"

using namespace plab;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> e;
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dist(rng) < p) e.emplace_back(u, v);
    return make_graph(n, std::move(e));
}

// every labeled graph on n vertices, indexed by edge bitmask
Graph graph_from_mask(int n, unsigned mask) {
    std::vector<std::pair<int, int>> e;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) e.emplace_back(u, v);
    return Graph{n, std::move(e)};
}

SymmetricIntMatrix naive_power(const SymmetricIntMatrix& m, long j) {
    SymmetricIntMatrix p = m;
    for (long t = 1; t < j; ++t) p = multiply(p, m);
    return p;
}

} // namespace

TEST_CASE("brute force homomorphism counts") {
    CHECK(brute_force_hom(complete_graph(2), complete_graph(3)) == 6);
    CHECK(brute_force_hom(cycle_graph(4), complete_graph(3)) == 18);
    CHECK(brute_force_hom(cycle_graph(4), add_isolated_vertices(Graph{}, 3)) == 0);
    // budget gate fires on the bound, before enumeration
    HomBudget tiny{1000, 1};
    CHECK_THROWS_WITH_AS(brute_force_hom(cycle_graph(8), complete_graph(3), tiny),
                         doctest::Contains("BudgetExceeded"), DomainError);
}

TEST_CASE("brute force is independent of thread count") {
    std::mt19937_64 rng(404);
    Graph g = random_graph(rng, 6, 0.5);
    HomBudget one{100000000ULL, 1};
    HomBudget four{100000000ULL, 4};
    CHECK(brute_force_hom(cycle_graph(6), g, one) == brute_force_hom(cycle_graph(6), g, four));
}

TEST_CASE("hypergraph brute force") {
    Hypergraph triple = hyperstar(3, 1);
    CHECK(brute_force_hom_hyper(triple, triple) == 6);
    // path on 3 vertices is the 2-uniform hyperstar with two branches
    CHECK(brute_force_hom_hyper(hyperstar(2, 2), as_hypergraph(complete_graph(3))) == 12);
    Hypergraph empty3 = make_hypergraph(4, 3, {});
    CHECK(brute_force_hom_hyper(hyperstar(3, 2), empty3) == 0);
    CHECK_THROWS_WITH_AS(brute_force_hom_hyper(hyperstar(2, 1), triple),
                         doctest::Contains("UniformityMismatch"), DomainError);
}

TEST_CASE("adjacency and clique-edge matrices") {
    SymmetricIntMatrix a = adjacency_matrix(complete_graph(2));
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(0, 0) == 0);
    CHECK(adjacency_matrix(add_isolated_vertices(Graph{}, 3)).trace() == 0);

    // M_{G,2} = A_G
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 7, 0.5);
        CHECK(clique_edge_matrix(g, 2) == adjacency_matrix(g));
    }

    // every edge of K4 lies in exactly two triangles; independent listing oracle
    Graph k4 = complete_graph(4);
    SymmetricIntMatrix m = clique_edge_matrix(k4, 3);
    for (auto [u, v] : k4.edges) {
        long triangles = 0;
        for (int w = 0; w < 4; ++w)
            if (w != u && w != v && k4.has_edge(u, w) && k4.has_edge(v, w)) ++triangles;
        CHECK(m.at(u, v) == triangles);
        CHECK(m.at(u, v) == 2);
    }
    // triangle-free target gives the zero matrix
    SymmetricIntMatrix z = clique_edge_matrix(cycle_graph(4), 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(z.at(i, j) == 0);
}

TEST_CASE("trace powers") {
    CHECK(trace_power(adjacency_matrix(complete_graph(3)), 4) == 18);
    CHECK(trace_power(clique_edge_matrix(complete_graph(4), 3), 4) == 1344);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng, 6, 0.5);
        CHECK(trace_power(adjacency_matrix(g), 1) == 0);
    }
    // binary powering vs naive repeated multiplication
    for (int t = 0; t < 12; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        SymmetricIntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m.set(i, j, mpz_class(static_cast<long>(rng() % 7) - 3));
        for (long j = 1; j <= 6; ++j) CHECK(trace_power(m, j) == naive_power(m, j).trace());
    }
}

TEST_CASE("trace of even powers is nonnegative") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        SymmetricIntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m.set(i, j, mpz_class(static_cast<long>(rng() % 11) - 5));
        CHECK(trace_power(m, 2) >= 0);
        CHECK(trace_power(m, 4) >= 0);
    }
}

TEST_CASE("cycle_hom equals the brute-force oracle") {
    CHECK(cycle_hom(complete_graph(3), 8) == 258);
    CHECK(cycle_hom(complete_graph(2), 4) == 2);
    CHECK(cycle_hom(add_isolated_vertices(Graph{}, 5), 4) == 0);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(rng, 5, 0.5);
        for (long j : {3L, 4L, 5L, 8L}) CHECK(cycle_hom(g, j) == brute_force_hom(cycle_graph(j), g));
    }
}

TEST_CASE("necklace_hom equals the brute-force oracle") {
    CHECK(necklace_hom(complete_graph(4), 4, 3) == 1344);
    // q = 2 degenerates to cycles
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng, 5, 0.6);
        CHECK(necklace_hom(g, 4, 2) == cycle_hom(g, 4));
    }
    // exhaustive over all labeled graphs on 4 vertices
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g = graph_from_mask(4, mask);
        CHECK(necklace_hom(g, 4, 3) == brute_force_hom(necklace_graph(4, 3), g));
    }
    // triangle-free targets vanish
    CHECK(necklace_hom(cycle_graph(5), 4, 3) == 0);
    CHECK(necklace_hom(petersen_graph(), 8, 3) == 0);
}

TEST_CASE("necklace_hom carries the ordered-apex factor at q = 4") {
    // each clique block maps onto an ordered pair of apexes, so the count is
    // (2!)^j times the trace; the brute force is the authority
    Graph k5 = complete_graph(5);
    mpz_class brute = brute_force_hom(necklace_graph(3, 4), k5);
    CHECK(brute == 12960);
    CHECK(necklace_hom(k5, 3, 4) == brute);
    CHECK(trace_power(clique_edge_matrix(k5, 4), 3) == 1620);
}

TEST_CASE("hyperstar_hom equals the brute-force oracle") {
    CHECK(hyperstar_hom(as_hypergraph(complete_graph(3)), 2) == 12);
    CHECK(hyperstar_hom(hyperstar(3, 1), 1) == 6);
    CHECK(hyperstar_hom(make_hypergraph(4, 3, {}), 5) == 0);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<std::vector<int>> edges;
        int m = 1 + static_cast<int>(rng() % 5);
        for (int e = 0; e < m; ++e) {
            std::vector<int> edge;
            while (edge.size() < 3) {
                int v = static_cast<int>(rng() % n);
                if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
            }
            edges.push_back(edge);
        }
        Hypergraph g = make_hypergraph(n, 3, edges);
        for (long b = 1; b <= 3; ++b)
            CHECK(hyperstar_hom(g, b) == brute_force_hom_hyper(hyperstar(3, static_cast<int>(b)), g));
    }
}

TEST_CASE("hom is additive over disjoint unions of targets") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        Graph g1 = random_graph(rng, 4, 0.5);
        Graph g2 = random_graph(rng, 4, 0.5);
        std::vector<Graph> parts{g1, g2};
        Graph u = disjoint_union(parts);
        for (long j : {4L, 8L}) CHECK(cycle_hom(u, j) == cycle_hom(g1, j) + cycle_hom(g2, j));
        CHECK(necklace_hom(u, 4, 3) == necklace_hom(g1, 4, 3) + necklace_hom(g2, 4, 3));
    }
}

TEST_CASE("isolated vertices never change hom counts") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng, 5, 0.5);
        Graph padded = add_isolated_vertices(g, 3);
        for (long j : {3L, 4L, 8L}) {
            CHECK(cycle_hom(g, j) == cycle_hom(padded, j));
            CHECK(brute_force_hom(cycle_graph(j), g) == brute_force_hom(cycle_graph(j), padded));
        }
    }
}

TEST_CASE("necklace counts vanish above the clique number") {
    for (const Graph& t : {cycle_graph(5), cycle_graph(4)}) {
        for (int q = 3; q <= 4; ++q) {
            Graph g = q_ify(t, q);
            for (int p = q + 1; p <= q + 2; ++p) CHECK(necklace_hom(g, 4, p) == 0);
        }
    }
}

TEST_CASE("density") {
    mpq_class d = density(complete_graph(2), complete_graph(3));
    CHECK(d == mpq_class(2, 3));
    CHECK(density(cycle_graph(4), complete_graph(3)) == mpq_class(2, 9));
    CHECK(density(complete_graph(1), complete_graph(7)) == 1);
    CHECK_THROWS_WITH_AS(density(complete_graph(2), Graph{}), doctest::Contains("EmptyTarget"),
                         DomainError);
}
