#include "doctest.h"

#include "profile_lab/homcount.hpp"
#include "profile_lab/profile.hpp"
#include "profile_lab/realize.hpp"

using namespace plab;

TEST_CASE("clique sequence for cycles") {
    std::vector<double> half{0.5, 0.5};
    Graph g = clique_sequence_cycles(half, 100);
    CHECK(g.n == 170);                       // two K_85
    CHECK(g.edge_count() == 2 * (85 * 84 / 2));

    std::vector<double> one{1.0};
    CHECK(clique_sequence_cycles(one, 40).n == 41);

    CHECK_THROWS_WITH_AS(clique_sequence_cycles(half, 1), doctest::Contains("ScaleTooSmall"),
                         DomainError);
    std::vector<double> bad{0.5, 0.6};
    CHECK_THROWS_WITH_AS(clique_sequence_cycles(bad, 100), doctest::Contains("NotNormalized"),
                         DomainError);
}

TEST_CASE("clique sequence for necklaces") {
    std::vector<double> one{1.0};
    CHECK(clique_sequence_necklaces(one, 3, 50).n == 51);

    // sizes follow z_i = y_i^{1/(4(q-1))}
    std::vector<double> skew{1.0 / 16.0, 15.0 / 16.0};
    Graph g = clique_sequence_necklaces(skew, 3, 64);
    CHECK(g.n == 46 + 64);

    std::vector<double> tiny{1e-8, 1.0 - 1e-8};
    CHECK_THROWS_WITH_AS(clique_sequence_necklaces(tiny, 3, 10),
                         doctest::Contains("ScaleTooSmall"), DomainError);
}

TEST_CASE("hyperstar sequence") {
    std::vector<double> half{0.5, 0.5};
    Hypergraph g = hyperstar_sequence(half, 2, 100);
    CHECK(g.n == 2 * (1 + 71));
    CHECK(g.edges.size() == 142);

    std::vector<double> one{1.0};
    Hypergraph s = hyperstar_sequence(one, 3, 12);
    CHECK(s.n == 13); // S^(3)_6
    CHECK(s.edges.size() == 6);

    std::vector<double> tiny{1e-6, 1.0 - 1e-6};
    CHECK_THROWS_WITH_AS(hyperstar_sequence(tiny, 2, 10), doctest::Contains("ScaleTooSmall"),
                         DomainError);
}

TEST_CASE("mixed sequence feasibility follows the scale formula") {
    ExpanderOptions algebraic;
    std::vector<std::vector<double>> target{{1.0}, {1.0}};
    // k^(3) = log2(1)/8 = 0 is below the algebraic minimum
    CHECK_THROWS_WITH_AS(expander_sequence_mixed(target, 1 << 16, algebraic),
                         doctest::Contains("ScaleTooSmall"), DomainError);

    ExpanderOptions fallback;
    fallback.provider = ExpanderProvider::Fallback;
    Graph g = expander_sequence_mixed(target, 1 << 16, fallback);
    CHECK(g.n == 10 + 25); // Petersen plus its 3-ification
}

TEST_CASE("mixed vanishing below the block order") {
    ExpanderOptions fallback;
    fallback.provider = ExpanderProvider::Fallback;
    std::vector<std::vector<double>> target{{1.0}, {1.0}};
    Graph g = expander_sequence_mixed(target, 1 << 16, fallback);
    // only the 3-ified part can host triangles
    Graph part3 = q_ify(petersen_graph(), 3);
    CHECK(necklace_hom(petersen_graph(), 4, 3) == 0);
    CHECK(necklace_hom(g, 4, 3) == necklace_hom(part3, 4, 3));
    CHECK(necklace_hom(g, 4, 3) != 0);
}

TEST_CASE("clique spectrum law") {
    for (long m : {2L, 3L, 11L, 50L}) {
        Graph km = complete_graph(static_cast<int>(m));
        for (long j = 1; j <= 4; ++j) {
            mpz_class z(m - 1), zp;
            mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(4 * j));
            CHECK(cycle_hom(km, 4 * j) == zp + z);
        }
    }
}

TEST_CASE("convergence rows are the exact ratio points of the materialized graphs") {
    TargetSpec t;
    t.y = {{0.5, 0.5}};
    t.l = 3;
    std::vector<long> sched{60};
    auto rows = convergence_experiment(Family::Cycles, t, sched);
    REQUIRE(rows.size() == 1);
    Graph g = clique_sequence_cycles(t.y[0], 60);
    CHECK(rows[0].graph_size == g.n);
    CHECK(rows[0].point == ratio_point_cycles(g, 3));

    TargetSpec tn;
    tn.y = {{0.5, 0.5}};
    tn.l = 2;
    tn.q = 3;
    auto nrows = convergence_experiment(Family::Necklaces, tn, sched);
    Graph gn = clique_sequence_necklaces(tn.y[0], 3, 60);
    CHECK(nrows[0].point == ratio_point_necklaces(gn, 2, 3));

    TargetSpec th;
    th.y = {{1.0 / 3, 2.0 / 3}};
    th.l = 3;
    th.k = 2;
    auto hrows = convergence_experiment(Family::Hyperstars, th, sched);
    Hypergraph gh = hyperstar_sequence(th.y[0], 2, 60);
    CHECK(hrows[0].point == ratio_point_hyperstars(gh, 3));
    CHECK(hrows[0].graph_size == gh.n);
}

TEST_CASE("cycle convergence trend at desk scale") {
    TargetSpec t;
    t.y = {{0.5, 0.5}};
    t.l = 3;
    std::vector<long> sched{50, 100, 200, 400};
    auto rows = convergence_experiment(Family::Cycles, t, sched);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].err_inf < rows[i - 1].err_inf);
    CHECK(rows[2].err_inf <= 0.02);
    CHECK(rows[3].err_inf / rows[2].err_inf <= 0.6);
}

TEST_CASE("mixed convergence row against a fallback provider") {
    TargetSpec t;
    t.y = {{1.0}, {1.0}};
    t.l = 2;
    t.r = 3;
    ExpanderOptions fallback;
    fallback.provider = ExpanderProvider::Fallback;
    std::vector<long> sched{256};
    auto rows = convergence_experiment(Family::Mixed, t, sched, fallback);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].point.size() == 2);
    Graph g = expander_sequence_mixed(t.y, 256, fallback);
    CHECK(rows[0].point == ratio_point_mixed(g, 2, 3));
}

TEST_CASE("single-clique row at N = 10 lands within 0.01 of the vertex target") {
    TargetSpec t;
    t.y = {{1.0}};
    t.l = 2;
    std::vector<long> sched{10};
    auto rows = convergence_experiment(Family::Cycles, t, sched);
    // K_11: exact point (10^8 + 10) / (10^4 + 10)^2 against target 1
    CHECK(rows[0].graph_size == 11);
    mpq_class expect_k11(mpz_class(100000010), mpz_class(10010) * 10010);
    expect_k11.canonicalize();
    CHECK(rows[0].point[0] == expect_k11);
    CHECK(rows[0].err_inf < 0.01);
}

TEST_CASE("single-star rows carry only the leaf-degree correction") {
    TargetSpec t;
    t.y = {{1.0}};
    t.l = 2;
    t.k = 2;
    std::vector<long> sched{10, 20};
    auto rows = convergence_experiment(Family::Hyperstars, t, sched);
    // star with b = N branches: hom(S_2j) = b^{2j} + b, so the point is exact
    mpq_class expect_star(mpz_class(10000 + 10), mpz_class(110) * 110);
    expect_star.canonicalize();
    CHECK(rows[0].point[0] == expect_star);
    CHECK(rows[1].err_inf < rows[0].err_inf);
}

TEST_CASE("schedule validation") {
    TargetSpec t;
    t.y = {{1.0}};
    t.l = 2;
    std::vector<long> bad{100, 50};
    CHECK_THROWS_AS(convergence_experiment(Family::Cycles, t, bad), DomainError);
    std::vector<long> empty;
    CHECK_THROWS_AS(convergence_experiment(Family::Cycles, t, empty), DomainError);
}

TEST_CASE("construction errors carry the failing N") {
    TargetSpec t;
    t.y = {{0.5, 0.5}};
    t.l = 2;
    std::vector<long> sched{1};
    try {
        convergence_experiment(Family::Cycles, t, sched);
        FAIL("expected ScaleTooSmall");
    } catch (const DomainError& e) {
        CHECK(e.code() == ErrorCode::ScaleTooSmall);
        CHECK(e.detail().find("N = 1") != std::string::npos);
    }
}
