#include "profile_lab/expander.hpp"

#include <array>

namespace plab {

namespace {

// constants version 1; lambda2 measured from the Jacobi spectrum of the
// construction at each k (dominant Fourier coefficient of the band)
constexpr std::array<MeasuredExpanderWindow, 3> kWindows{{
    {2, 64, 17, 15.05, 15.15},
    {3, 512, 65, 63.0, 63.6},
    {4, 4096, 257, 254.0, 256.7},
}};

Graph band_circulant(long n, long half_width) {
    std::vector<std::pair<int, int>> edges;
    long c = n / 2;
    for (long v = 0; v < n; ++v) {
        for (long t = -half_width; t <= half_width; ++t) {
            long u = (v + c + t) % n;
            if (u > v) edges.emplace_back(static_cast<int>(v), static_cast<int>(u));
        }
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

} // namespace

std::span<const MeasuredExpanderWindow> measured_expander_windows() { return kWindows; }

Graph expander_graph(int k, const ExpanderOptions& opt) {
    if (opt.provider == ExpanderProvider::Fallback) return petersen_graph();
    if (k < kAlgebraicMinScale)
        throw DomainError(ErrorCode::ConstructionUnavailable,
                          "algebraic construction needs k >= " + std::to_string(kAlgebraicMinScale));
    if (k > 20)
        throw DomainError(ErrorCode::FeasibilityExceeded, "scale parameter too large");
    long n = 1L << (3 * k);
    if (n > opt.vertex_cap)
        throw DomainError(ErrorCode::FeasibilityExceeded,
                          "construction needs " + std::to_string(n) + " vertices, cap is " +
                              std::to_string(opt.vertex_cap));
    long half_width = 1L << (2 * k - 1); // degree 2^{2k}+1
    return band_circulant(n, half_width);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer cycle
        e.emplace_back(i, i + 5);            // spoke
        e.emplace_back(i + 5, 5 + (i + 2) % 5); // inner pentagram
    }
    return make_graph(10, std::move(e));
}

Graph heawood_graph() {
    // LCF [5,-5]^7 on a 14-cycle
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
    return make_graph(14, std::move(e));
}

} // namespace plab
