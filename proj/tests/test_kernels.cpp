#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "profile_lab/kernels.hpp"

using namespace plab;

TEST_CASE("power sum kernel matches scalar reference") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (std::size_t n : {0ul, 1ul, 3ul, 4ul, 7ul, 8ul, 33ul, 1000ul}) {
        std::vector<double> x(n);
        for (auto& v : x) v = dist(rng);
        for (int lmax : {1, 2, 5, 8}) {
            double ref[16], got[16];
            kernels::power_sums_scalar(x.data(), n, lmax, ref);
            kernels::active().power_sums(x.data(), n, lmax, got);
            for (int j = 0; j < lmax; ++j) {
                double scale = std::max(1.0, std::fabs(ref[j]));
                CHECK(std::fabs(ref[j] - got[j]) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("sum and max_abs_diff kernels match scalar reference") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (std::size_t n : {0ul, 1ul, 5ul, 64ul, 257ul}) {
        std::vector<double> a(n), b(n);
        for (auto& v : a) v = dist(rng);
        for (auto& v : b) v = dist(rng);
        double rs = kernels::sum_scalar(a.data(), n);
        double gs = kernels::active().sum(a.data(), n);
        CHECK(std::fabs(rs - gs) <= 1e-12 * std::max(1.0, std::fabs(rs)));
        CHECK(kernels::max_abs_diff_scalar(a.data(), b.data(), n) ==
              doctest::Approx(kernels::active().max_abs_diff(a.data(), b.data(), n)).epsilon(1e-14));
    }
}

TEST_CASE("power sums of known vectors") {
    std::vector<double> x{0.5, 0.5};
    double out[4];
    kernels::power_sums(x, 3, out);
    CHECK(out[0] == doctest::Approx(1.0));
    CHECK(out[1] == doctest::Approx(0.5));
    CHECK(out[2] == doctest::Approx(0.25));
}
