#include "doctest.h"

#include <random>

#include "profile_lab/expander.hpp"
#include "profile_lab/graph.hpp"
#include "profile_lab/matrix.hpp"
#include "profile_lab/spectrum.hpp"

using namespace plab;

TEST_CASE("spectra of small named matrices") {
    auto eig = spectrum(adjacency_matrix(complete_graph(3)), 1e-10);
    REQUIRE(eig.size() == 3);
    CHECK(eig[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(eig[1] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(eig[2] == doctest::Approx(-1.0).epsilon(1e-9));

    auto eig2 = spectrum(clique_edge_matrix(complete_graph(4), 3), 1e-10);
    REQUIRE(eig2.size() == 4);
    CHECK(eig2[0] == doctest::Approx(6.0).epsilon(1e-9));
    for (int i = 1; i < 4; ++i) CHECK(eig2[i] == doctest::Approx(-2.0).epsilon(1e-9));

    auto zero = spectrum(SymmetricIntMatrix(3), 1e-10);
    for (double v : zero) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("spectrum power sums match exact traces") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 15; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        SymmetricIntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, mpz_class(static_cast<long>(rng() % 9) - 4));
        auto eig = spectrum(m, 1e-11); // the trace cross-check runs inside
        double s1 = 0;
        for (double v : eig) s1 += v;
        CHECK(s1 == doctest::Approx(m.trace().get_d()).epsilon(1e-8));
    }
}

TEST_CASE("verify_ndlambda") {
    NdLambdaReport c5 = verify_ndlambda(cycle_graph(5), 1e-10);
    CHECK(c5.n == 5);
    CHECK(c5.regular_degree == 2);
    CHECK(c5.triangle_free);
    CHECK(c5.lambda2 == doctest::Approx(1.6180339887).epsilon(1e-8));

    CHECK_FALSE(verify_ndlambda(complete_graph(3), 1e-10).triangle_free);

    // star K_{1,3} is not regular
    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(verify_ndlambda(star, 1e-10).regular_degree.has_value());

    // lambda2 <= degree whenever regular
    NdLambdaReport pet = verify_ndlambda(petersen_graph(), 1e-10);
    REQUIRE(pet.regular_degree.has_value());
    CHECK(pet.lambda2 <= static_cast<double>(*pet.regular_degree));
}

TEST_CASE("spectrum buckets") {
    // degenerate thresholds at k = 0: everything above 1 except the top
    SpectrumBuckets b = spectrum_buckets(complete_graph(3), 2, 0, 1e-10);
    CHECK(b.top == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(b.mid_count + b.small_count + 1 == 3);
    CHECK(b.top >= b.mid_max);
    CHECK(b.mid_max >= b.small_max);

    ExpanderOptions opt;
    SpectrumBuckets e2 = spectrum_buckets(expander_graph(2, opt), 2, 2, 1e-9);
    auto windows = measured_expander_windows();
    CHECK(e2.top == doctest::Approx(static_cast<double>(windows[0].degree)).epsilon(1e-7));
    CHECK(e2.mid_count + e2.small_count + 1 == 64);
}
