#include "profile_lab/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace plab {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += 2.0 * a[static_cast<std::size_t>(i) * n + j] *
                                              a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

} // namespace

std::vector<double> spectrum(const SymmetricIntMatrix& m, double tol) {
    const int n = m.dim();
    if (n < 1) throw DomainError(ErrorCode::InvalidSize, "spectrum needs dim >= 1");
    if (tol <= 0) tol = 1e-12;

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j).get_d();

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    // eigenvalue perturbation is bounded by the off-diagonal norm
    const double target = std::max(tol * 0.25, 1e-300);
    const int max_sweeps = 64;
    bool converged = (n == 1);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) < target / (static_cast<double>(n) * n)) continue;
                double app = at(p, p), aqq = at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
        }
        converged = off_diagonal_norm(a, n) <= target;
    }
    if (!converged)
        throw DomainError(ErrorCode::ConvergenceFailure, "Jacobi sweeps did not reach tolerance");

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());

    // cross-check against exact traces for j = 2, 4
    double max_abs = 0.0;
    for (double v : eig) max_abs = std::max(max_abs, std::fabs(v));
    SymmetricIntMatrix m2 = multiply(m, m);
    const mpz_class tr2 = m2.trace();
    const mpz_class tr4 = trace_of_product(m2, m2);
    double s2 = 0.0, s4 = 0.0;
    for (double v : eig) {
        s2 += v * v;
        s4 += v * v * v * v;
    }
    double allow2 = n * std::pow(std::max(max_abs, 1.0), 2) * tol * 2 + 1e-9;
    double allow4 = n * std::pow(std::max(max_abs, 1.0), 4) * tol * 4 + 1e-9;
    if (std::fabs(s2 - tr2.get_d()) > allow2 || std::fabs(s4 - tr4.get_d()) > allow4)
        throw DomainError(ErrorCode::ConvergenceFailure, "spectrum-trace consistency check failed");
    return eig;
}

SpectrumBuckets spectrum_buckets(const Graph& g, int p, int k, double tol,
                                 const BucketThresholds& thresholds) {
    std::vector<double> eig = spectrum(clique_edge_matrix(g, p), tol);
    std::vector<double> mag(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i) mag[i] = std::fabs(eig[i]);
    std::sort(mag.begin(), mag.end(), std::greater<>());

    SpectrumBuckets b;
    b.threshold_hi = std::pow(2.0, thresholds.hi_exponent * k);
    b.threshold_lo = std::pow(2.0, thresholds.lo_exponent * k);
    b.top = mag.front();
    for (std::size_t i = 1; i < mag.size(); ++i) {
        if (mag[i] > b.threshold_lo) {
            ++b.mid_count;
            b.mid_max = std::max(b.mid_max, mag[i]);
        } else {
            ++b.small_count;
            b.small_max = std::max(b.small_max, mag[i]);
        }
    }
    return b;
}

NdLambdaReport verify_ndlambda(const Graph& g, double tol) {
    if (g.n < 1) throw DomainError(ErrorCode::InvalidSize, "verification needs at least one vertex");
    NdLambdaReport rep;
    rep.n = g.n;
    std::vector<int> deg = g.degrees();
    bool regular = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; });
    if (regular) rep.regular_degree = deg.empty() ? 0 : deg[0];
    rep.triangle_free = count_triangles(g) == 0;

    std::vector<double> eig = spectrum(adjacency_matrix(g), tol);
    std::vector<double> mag(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i) mag[i] = std::fabs(eig[i]);
    std::sort(mag.begin(), mag.end(), std::greater<>());
    rep.lambda2 = mag.size() > 1 ? mag[1] : 0.0;
    return rep;
}

} // namespace plab
