#include "profile_lab/profile.hpp"

#include <algorithm>
#include <cmath>

#include "profile_lab/homcount.hpp"
#include "profile_lab/kernels.hpp"
#include "profile_lab/matrix.hpp"
#include "profile_lab/spectrum.hpp"

namespace plab {

ProfilePoint power_sums(const std::vector<mpq_class>& x, int l) {
    if (l < 2) throw DomainError(ErrorCode::InvalidSize, "profile length must be >= 2");
    // gmp rational arithmetic assumes canonical operands
    std::vector<mpq_class> w = x;
    mpq_class total = 0;
    for (auto& v : w) {
        v.canonicalize();
        if (v < 0) throw DomainError(ErrorCode::NegativeEntry, "weight vector entry below zero");
        total += v;
    }
    if (total != 1) throw DomainError(ErrorCode::NotNormalized, "weights must sum to 1");
    ProfilePoint p(l - 1, mpq_class(0));
    for (const auto& v : w) {
        mpq_class pw = v * v;
        for (int j = 2; j <= l; ++j) {
            p[j - 2] += pw;
            pw *= v;
        }
    }
    for (auto& v : p) v.canonicalize();
    return p;
}

// float kernels carry up to p_12; the exact path has no cap
constexpr int kFloatProfileCap = 12;

std::vector<double> power_sums(std::span<const double> x, int l) {
    if (l < 2) throw DomainError(ErrorCode::InvalidSize, "profile length must be >= 2");
    if (l > kFloatProfileCap)
        throw DomainError(ErrorCode::InvalidSize, "float profile length capped at 12");
    for (double v : x)
        if (v < 0) throw DomainError(ErrorCode::NegativeEntry, "weight vector entry below zero");
    if (std::fabs(kernels::sum(x) - 1.0) > 1e-12)
        throw DomainError(ErrorCode::NotNormalized, "weights must sum to 1 within 1e-12");
    double all[16];
    kernels::power_sums(x, l, all);
    return std::vector<double>(all + 1, all + l); // drop p_1
}

namespace {

ProfilePoint ratios_from_traces(const std::vector<mpz_class>& tr) {
    ProfilePoint out;
    mpz_class den = tr[0];
    mpz_class den_pow = den;
    for (std::size_t j = 1; j < tr.size(); ++j) {
        den_pow *= den;
        mpq_class r(tr[j], den_pow);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

} // namespace

ProfilePoint ratio_point_cycles(const Graph& g, int l) {
    return ratio_point_necklaces(g, l, 2);
}

ProfilePoint ratio_point_necklaces(const Graph& g, int l, int q) {
    if (l < 2) throw DomainError(ErrorCode::InvalidSize, "profile length must be >= 2");
    if (q < 2) throw DomainError(ErrorCode::InvalidSize, "clique order must be >= 2");
    if (g.n == 0) throw DomainError(ErrorCode::HomCountZero, "empty target graph");
    std::vector<mpz_class> tr = fourth_power_traces(clique_edge_matrix(g, q), l);
    if (tr[0] == 0)
        throw DomainError(ErrorCode::HomCountZero,
                          "necklace count of length 4 vanishes at q = " + std::to_string(q));
    return ratios_from_traces(tr);
}

ProfilePoint ratio_point_mixed(const Graph& g, int l, int r) {
    if (r < 2) throw DomainError(ErrorCode::InvalidSize, "r must be >= 2");
    ProfilePoint out;
    for (int q = 2; q <= r; ++q) {
        ProfilePoint block = ratio_point_necklaces(g, l, q);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

ProfilePoint ratio_point_hyperstars(const Hypergraph& g, int l) {
    if (l < 2) throw DomainError(ErrorCode::InvalidSize, "profile length must be >= 2");
    const long k = g.k;
    std::vector<mpz_class> homs;
    homs.reserve(l);
    for (int j = 1; j <= l; ++j) homs.push_back(hyperstar_hom(g, j * k));
    if (homs[0] == 0)
        throw DomainError(ErrorCode::HomCountZero, "hyperstar count with b = k vanishes");
    ProfilePoint out;
    mpz_class den_pow = homs[0];
    for (int j = 2; j <= l; ++j) {
        den_pow *= homs[0];
        mpq_class rat(homs[j - 1], den_pow);
        rat.canonicalize();
        out.push_back(rat);
    }
    return out;
}

std::vector<double> eigen_weight_vector(const Graph& g, int q, double tol) {
    std::vector<double> eig = spectrum(clique_edge_matrix(g, q), tol);
    std::vector<double> x(eig.size());
    double total = 0.0;
    for (std::size_t i = 0; i < eig.size(); ++i) {
        x[i] = eig[i] * eig[i] * eig[i] * eig[i];
        total += x[i];
    }
    if (total <= 0.0)
        throw DomainError(ErrorCode::HomCountZero, "tr(M^4) vanishes");
    for (auto& v : x) v /= total;
    std::sort(x.begin(), x.end(), std::greater<>());
    return x;
}

BoundaryResult boundary_point(const BoundaryPattern& pattern, int l) {
    if (l < 2) throw DomainError(ErrorCode::InvalidSize, "profile length must be >= 2");
    const auto& r = pattern.multiplicities;
    const auto& xs = pattern.values;
    // trailing blocks may be omitted (a single atom is r = (0,1)); at most
    // l-1 value blocks as in the boundary characterization
    const int blocks = static_cast<int>(r.size()) - 1;
    if (blocks < 1 || blocks > l - 1)
        throw DomainError(ErrorCode::InvalidPattern,
                          "need between 2 and l multiplicities r_0..r_m");
    if (static_cast<int>(xs.size()) != blocks)
        throw DomainError(ErrorCode::InvalidPattern, "need one value per nonzero block");
    for (long m : r)
        if (m < 0) throw DomainError(ErrorCode::InvalidPattern, "negative multiplicity");

    if (pattern.kind == 1) {
        for (int i = 1; i <= blocks; ++i) {
            if (i % 2 == 1 && r[i] != 1)
                throw DomainError(ErrorCode::InvalidPattern,
                                  "kind 1 requires odd-index multiplicities equal to 1");
            if (i % 2 == 0 && r[i] < 1)
                throw DomainError(ErrorCode::InvalidPattern,
                                  "kind 1 requires positive even-index multiplicities");
        }
    } else if (pattern.kind == 2) {
        if (r[0] != 0)
            throw DomainError(ErrorCode::InvalidPattern, "kind 2 has no zero block");
        for (int i = 1; i <= blocks; ++i) {
            if (i % 2 == 0 && r[i] != 1)
                throw DomainError(ErrorCode::InvalidPattern,
                                  "kind 2 requires even-index multiplicities equal to 1");
            if (i % 2 == 1 && r[i] < 1)
                throw DomainError(ErrorCode::InvalidPattern,
                                  "kind 2 requires positive odd-index multiplicities");
        }
    } else {
        throw DomainError(ErrorCode::InvalidPattern, "kind must be 1 or 2");
    }

    std::vector<mpq_class> vals = xs;
    for (auto& v : vals) v.canonicalize();
    bool collapsed = false;
    for (int i = 0; i + 1 < blocks; ++i) {
        if (vals[i] > vals[i + 1])
            throw DomainError(ErrorCode::InvalidPattern, "block values must be nondecreasing");
        if (vals[i] == vals[i + 1]) collapsed = true;
    }
    for (const auto& v : vals)
        if (v < 0) throw DomainError(ErrorCode::NegativeEntry, "block values must be nonnegative");

    mpq_class total = 0;
    for (int i = 1; i <= blocks; ++i) total += mpq_class(r[i]) * vals[i - 1];
    if (total == 0)
        throw DomainError(ErrorCode::NotNormalizable, "block values sum to zero");

    std::vector<mpq_class> x;
    for (long z = 0; z < r[0]; ++z) x.emplace_back(0);
    for (int i = 1; i <= blocks; ++i)
        for (long c = 0; c < r[i]; ++c) x.push_back(vals[i - 1] / total);
    return BoundaryResult{power_sums(x, l), collapsed};
}

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct SmallRng {
    std::uint64_t state;
    explicit SmallRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = splitmix64(state);
        return state;
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t task_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

std::vector<double> dirichlet_uniform(SmallRng& rng, int n) {
    if (n == 1) return {1.0};
    std::vector<double> cuts(n - 1);
    for (auto& c : cuts) c = rng.uniform01();
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> x(n);
    double prev = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        x[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    x[n - 1] = 1.0 - prev;
    return x;
}

} // namespace

std::vector<std::vector<double>> sample_profile(int l, int n_max, long count,
                                                std::uint64_t seed) {
    if (l < 2) throw DomainError(ErrorCode::InvalidSize, "profile length must be >= 2");
    if (l > kFloatProfileCap)
        throw DomainError(ErrorCode::InvalidSize, "float profile length capped at 12");
    if (n_max < 1) throw DomainError(ErrorCode::InvalidSize, "n_max must be >= 1");
    if (count < 1) throw DomainError(ErrorCode::InvalidSize, "count must be >= 1");
    std::vector<std::vector<double>> cloud;
    cloud.reserve(count);
    for (long i = 0; i < count; ++i) {
        SmallRng rng(task_seed(seed, static_cast<std::uint64_t>(i)));
        int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n_max));
        std::vector<double> x = dirichlet_uniform(rng, n);
        double p[16];
        kernels::power_sums(x, l, p);
        cloud.emplace_back(p + 1, p + l);
    }
    return cloud;
}

// ---------------------------------------------------------------------------
// inverse realization
// ---------------------------------------------------------------------------

namespace {

void project_to_simplex(std::vector<double>& x) {
    std::vector<double> u = x;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0.0, theta = 0.0;
    int rho = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        cum += u[i];
        double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0) {
            rho = static_cast<int>(i + 1);
            theta = t;
        }
    }
    (void)rho;
    for (auto& v : x) v = std::max(0.0, v - theta);
}

// residual vector r_j = p_{j+2}(x) - a_j and squared objective
double objective(std::span<const double> x, std::span<const double> target,
                 std::vector<double>& resid) {
    const int l = static_cast<int>(target.size()) + 1;
    double p[16];
    kernels::power_sums(x, l, p);
    double f = 0.0;
    resid.resize(target.size());
    for (std::size_t j = 0; j < target.size(); ++j) {
        resid[j] = p[j + 1] - target[j];
        f += resid[j] * resid[j];
    }
    return f;
}

// solve the dense symmetric KKT system via Gaussian elimination with pivoting
bool solve_linear(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
        if (std::fabs(a[piv * n + col]) < 1e-300) return false;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        double s = b[col];
        for (int c = col + 1; c < n; ++c) s -= a[col * n + c] * b[c];
        b[col] = s / a[col * n + col];
    }
    return true;
}

// Gauss-Newton step restricted to the free coordinates and the affine
// constraint sum(d) = 0; frozen zeros stay zero.
bool gauss_newton_step(std::vector<double>& x, std::span<const double> target,
                       double mu) {
    const int l = static_cast<int>(target.size()) + 1;
    std::vector<int> free_idx;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > 1e-14) free_idx.push_back(static_cast<int>(i));
    const int m = static_cast<int>(free_idx.size());
    if (m == 0) return false;

    std::vector<double> resid;
    objective(x, target, resid);

    // J_{j,i} = (j+2) * x_i^{j+1} over free coordinates
    std::vector<double> jac(static_cast<std::size_t>(l - 1) * m);
    for (int c = 0; c < m; ++c) {
        double xi = x[free_idx[c]];
        double pw = xi;
        for (int j = 0; j < l - 1; ++j) {
            jac[static_cast<std::size_t>(j) * m + c] = (j + 2) * pw;
            pw *= xi;
        }
    }

    // KKT system: [J^T J + mu I, 1; 1^T, 0] [d; nu] = [-J^T r; 0]
    const int dim = m + 1;
    std::vector<double> a(static_cast<std::size_t>(dim) * dim, 0.0);
    std::vector<double> b(dim, 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            double s = 0.0;
            for (int t = 0; t < l - 1; ++t)
                s += jac[static_cast<std::size_t>(t) * m + i] * jac[static_cast<std::size_t>(t) * m + j];
            a[static_cast<std::size_t>(i) * dim + j] = s;
            a[static_cast<std::size_t>(j) * dim + i] = s;
        }
        a[static_cast<std::size_t>(i) * dim + i] += mu;
        a[static_cast<std::size_t>(i) * dim + m] = 1.0;
        a[static_cast<std::size_t>(m) * dim + i] = 1.0;
        double g = 0.0;
        for (int t = 0; t < l - 1; ++t)
            g += jac[static_cast<std::size_t>(t) * m + i] * resid[t];
        b[i] = -g;
    }
    if (!solve_linear(a, b, dim)) return false;

    for (int i = 0; i < m; ++i) x[free_idx[i]] += b[i];
    for (auto& v : x)
        if (v < 0) v = 0;
    // renormalize drift from the clip
    double s = kernels::sum(x);
    if (s <= 0) return false;
    for (auto& v : x) v /= s;
    return true;
}

} // namespace

RealizeResult realize_weights(std::span<const double> target, int n,
                              const RealizeOptions& opt) {
    if (n < 1) throw DomainError(ErrorCode::InvalidSize, "need n >= 1");
    if (target.empty()) throw DomainError(ErrorCode::InvalidSize, "empty target point");
    if (static_cast<int>(target.size()) + 1 > kFloatProfileCap)
        throw DomainError(ErrorCode::InvalidSize, "float profile length capped at 12");
    if (opt.tol <= 0) throw DomainError(ErrorCode::OutOfRange, "tolerance must be positive");

    std::vector<double> best;
    double best_f = -1.0;
    std::vector<double> resid;

    for (int restart = 0; restart < std::max(1, opt.restarts); ++restart) {
        std::vector<double> x(n);
        if (restart == 0) {
            std::fill(x.begin(), x.end(), 1.0 / n);
        } else if (restart == 1) {
            // vertex start
            std::fill(x.begin(), x.end(), 0.0);
            x[0] = 1.0;
        } else {
            SmallRng rng(task_seed(opt.seed, static_cast<std::uint64_t>(restart)));
            x = dirichlet_uniform(rng, n);
        }

        // projected gradient with adaptive step
        double step = 0.1;
        double f = objective(x, target, resid);
        for (int it = 0; it < 400; ++it) {
            std::vector<double> grad(n, 0.0);
            for (int i = 0; i < n; ++i) {
                double pw = x[i];
                for (std::size_t j = 0; j < target.size(); ++j) {
                    grad[i] += 2.0 * resid[j] * static_cast<double>(j + 2) * pw;
                    pw *= x[i];
                }
            }
            std::vector<double> trial(n);
            for (int i = 0; i < n; ++i) trial[i] = x[i] - step * grad[i];
            project_to_simplex(trial);
            double tf = objective(trial, target, resid);
            if (tf < f) {
                x.swap(trial);
                f = tf;
                step *= 1.3;
            } else {
                step *= 0.5;
                if (step < 1e-14) break;
                objective(x, target, resid); // restore residuals for x
            }
        }

        // Gauss-Newton refinement with damping backoff
        double mu = 1e-8;
        for (int it = 0; it < 60; ++it) {
            std::vector<double> saved = x;
            if (!gauss_newton_step(x, target, mu)) {
                x = saved;
                break;
            }
            double nf = objective(x, target, resid);
            if (nf <= f) {
                f = nf;
                mu = std::max(mu * 0.5, 1e-14);
            } else {
                x = saved;
                objective(x, target, resid);
                mu *= 10.0;
                if (mu > 1e6) break;
            }
            if (f < 1e-30) break;
        }

        std::sort(x.begin(), x.end(), std::greater<>());
        if (best_f < 0 || f < best_f - 1e-18 ||
            (std::fabs(f - best_f) <= 1e-18 &&
             std::lexicographical_compare(x.begin(), x.end(), best.begin(), best.end()))) {
            best_f = f;
            best = x;
        }
        if (best_f < 1e-28) break; // no restart can do better
    }

    RealizeResult res;
    res.weights = best;
    res.residual = std::sqrt(std::max(0.0, best_f));
    res.feasible = res.residual <= opt.tol;
    return res;
}

FiberPoint fiber_scale(const FiberPoint& b, const mpq_class& t, int l, int r) {
    mpq_class tc = t;
    tc.canonicalize();
    if (tc < 0 || tc > 1)
        throw DomainError(ErrorCode::OutOfRange, "scale factor must lie in [0,1]");
    if (l < 1 || r < 2) throw DomainError(ErrorCode::InvalidSize, "need l >= 1 and r >= 2");
    if (static_cast<int>(b.size()) != l * (r - 1))
        throw DomainError(ErrorCode::InvalidSize, "fiber point needs l*(r-1) coordinates");
    FiberPoint out;
    out.reserve(b.size());
    for (int q = 2; q <= r; ++q) {
        for (int i = 1; i <= l; ++i) {
            unsigned long e = static_cast<unsigned long>(4L * i * (q - 1));
            mpz_class num_pow, den_pow;
            mpz_pow_ui(num_pow.get_mpz_t(), tc.get_num().get_mpz_t(), e);
            mpz_pow_ui(den_pow.get_mpz_t(), tc.get_den().get_mpz_t(), e);
            mpq_class scale(num_pow, den_pow);
            scale.canonicalize();
            mpq_class v = b[static_cast<std::size_t>(q - 2) * l + (i - 1)];
            v.canonicalize();
            v *= scale;
            v.canonicalize();
            out.push_back(v);
        }
    }
    return out;
}

} // namespace plab
