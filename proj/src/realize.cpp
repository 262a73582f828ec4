#include "profile_lab/realize.hpp"

#include <algorithm>
#include <cmath>

#include "profile_lab/kernels.hpp"
#include "profile_lab/matrix.hpp"

namespace plab {

namespace {

constexpr long kMaterializationCap = 5000;

void check_materialization(long vertices) {
    if (vertices > kMaterializationCap)
        throw DomainError(ErrorCode::FeasibilityExceeded,
                          "construction with " + std::to_string(vertices) +
                              " vertices exceeds the materialization cap of " +
                              std::to_string(kMaterializationCap));
}

} // namespace

void validate_target_block(std::span<const double> y) {
    if (y.empty()) throw DomainError(ErrorCode::InvalidSize, "empty target block");
    for (double v : y)
        if (v < 0) throw DomainError(ErrorCode::NegativeEntry, "target weights must be >= 0");
    if (std::fabs(kernels::sum(y) - 1.0) > 1e-12)
        throw DomainError(ErrorCode::NotNormalized, "target weights must sum to 1 within 1e-12");
}

long round_scaled(double value) { return static_cast<long>(std::floor(value + 0.5)); }

namespace {

// clique sizes for the cycle family; 0 entries are skipped. Feasibility is
// decided on the unrounded scaled size (the constructions assume the real
// value clears the threshold), then sizes round to nearest, ties up.
std::vector<long> cycle_family_sizes(std::span<const double> y, long N) {
    validate_target_block(y);
    std::vector<long> sizes;
    for (double yi : y) {
        if (yi == 0.0) continue;
        double scaled = std::pow(yi, 0.25) * static_cast<double>(N);
        if (scaled < 1.0)
            throw DomainError(ErrorCode::ScaleTooSmall,
                              "component scale below a single edge at N = " + std::to_string(N));
        sizes.push_back(round_scaled(scaled) + 1);
    }
    return sizes;
}

std::vector<long> necklace_family_sizes(std::span<const double> y, int q, long N) {
    validate_target_block(y);
    if (q < 3) throw DomainError(ErrorCode::InvalidSize, "necklace family needs q >= 3");
    std::vector<long> sizes;
    for (double yi : y) {
        if (yi == 0.0) continue;
        double z = std::pow(yi, 1.0 / (4.0 * (q - 1)));
        double scaled = z * static_cast<double>(N);
        if (scaled + 1.0 < static_cast<double>(q))
            throw DomainError(ErrorCode::ScaleTooSmall,
                              "clique scale cannot host q = " + std::to_string(q) + " at N = " +
                                  std::to_string(N));
        sizes.push_back(round_scaled(scaled) + 1);
    }
    return sizes;
}

std::vector<long> hyperstar_branch_counts(std::span<const double> y, int k, long N) {
    validate_target_block(y);
    if (k < 2) throw DomainError(ErrorCode::InvalidSize, "uniformity must be >= 2");
    double fact = 1.0;
    for (int t = 2; t < k; ++t) fact *= t;
    std::vector<long> branches;
    for (double yi : y) {
        if (yi == 0.0) continue;
        long b = round_scaled(std::pow(yi, 1.0 / k) * static_cast<double>(N) / fact);
        if (b < 1)
            throw DomainError(ErrorCode::ScaleTooSmall,
                              "branch count rounds below 1 at N = " + std::to_string(N));
        branches.push_back(b);
    }
    return branches;
}

struct MixedPlan {
    std::vector<std::pair<int, int>> slots; // (q, scale k) in deterministic order
};

MixedPlan mixed_plan(const std::vector<std::vector<double>>& y_by_q, long N,
                     const ExpanderOptions& opt) {
    if (y_by_q.empty()) throw DomainError(ErrorCode::InvalidSize, "mixed target needs q blocks");
    const int r = static_cast<int>(y_by_q.size()) + 1;
    int min_scale = opt.provider == ExpanderProvider::Algebraic ? kAlgebraicMinScale : 0;
    MixedPlan plan;
    for (int q = 2; q <= r; ++q) {
        const auto& block = y_by_q[q - 2];
        validate_target_block(block);
        for (double yi : block) {
            if (yi == 0.0) continue;
            double kf = (std::log2(yi) + static_cast<double>(r - q) * std::log2(static_cast<double>(N))) / 8.0;
            long k = round_scaled(kf);
            if (k < min_scale)
                throw DomainError(ErrorCode::ScaleTooSmall,
                                  "scale exponent " + std::to_string(k) + " below provider minimum " +
                                      std::to_string(min_scale) + " at q = " + std::to_string(q));
            plan.slots.emplace_back(q, static_cast<int>(k));
        }
    }
    return plan;
}

} // namespace

Graph clique_sequence_cycles(std::span<const double> y, long N) {
    std::vector<long> sizes = cycle_family_sizes(y, N);
    long total = 0;
    for (long m : sizes) total += m;
    check_materialization(total);
    std::vector<Graph> parts;
    parts.reserve(sizes.size());
    for (long m : sizes) parts.push_back(complete_graph(static_cast<int>(m)));
    return disjoint_union(parts);
}

Graph clique_sequence_necklaces(std::span<const double> y, int q, long N) {
    std::vector<long> sizes = necklace_family_sizes(y, q, N);
    long total = 0;
    for (long m : sizes) total += m;
    check_materialization(total);
    std::vector<Graph> parts;
    parts.reserve(sizes.size());
    for (long m : sizes) parts.push_back(complete_graph(static_cast<int>(m)));
    return disjoint_union(parts);
}

Graph expander_sequence_mixed(const std::vector<std::vector<double>>& y_by_q, long N,
                              const ExpanderOptions& opt) {
    MixedPlan plan = mixed_plan(y_by_q, N, opt);
    std::vector<Graph> parts;
    long total = 0;
    for (auto [q, k] : plan.slots) {
        Graph part = q_ify(expander_graph(k, opt), q);
        total += part.n;
        check_materialization(total);
        parts.push_back(std::move(part));
    }
    return disjoint_union(parts);
}

Hypergraph hyperstar_sequence(std::span<const double> y, int k, long N) {
    std::vector<long> branches = hyperstar_branch_counts(y, k, N);
    Hypergraph out;
    out.k = k;
    for (long b : branches) {
        Hypergraph star = hyperstar(k, static_cast<int>(b));
        for (auto e : star.edges) {
            for (int& v : e) v += out.n;
            out.edges.push_back(std::move(e));
        }
        out.n += star.n;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

namespace {

ProfilePoint ratios_from_traces(const std::vector<mpz_class>& tr) {
    ProfilePoint out;
    const mpz_class& den = tr[0];
    mpz_class den_pow = den;
    for (std::size_t j = 1; j < tr.size(); ++j) {
        den_pow *= den;
        mpq_class rat(tr[j], den_pow);
        rat.canonicalize();
        out.push_back(rat);
    }
    return out;
}

// closed-form tr(A^{4j}) for a disjoint union of cliques: each K_m
// contributes (m-1)^{4j} + (m-1)
std::vector<mpz_class> clique_cycle_traces(const std::vector<long>& sizes, int l) {
    std::vector<mpz_class> tr(l, mpz_class(0));
    for (long m : sizes) {
        mpz_class z(m - 1);
        for (int j = 1; j <= l; ++j) {
            mpz_class zp;
            mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(4 * j));
            tr[j - 1] += zp + z;
        }
    }
    return tr;
}

// closed-form tr(M_{G,q}^{4j}) for a disjoint union of cliques: M restricted
// to K_m is binom(m-2, q-2) (J - I), so the eigenvalues are one copy of
// (m-1) c and (m-1) copies of -c with c = binom(m-2, q-2)
std::vector<mpz_class> clique_necklace_traces(const std::vector<long>& sizes, int q, int l) {
    std::vector<mpz_class> tr(l, mpz_class(0));
    for (long m : sizes) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m - 2),
                     static_cast<unsigned long>(q - 2));
        mpz_class top = (m - 1) * c;
        for (int j = 1; j <= l; ++j) {
            mpz_class tp, cp;
            mpz_pow_ui(tp.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(4 * j));
            mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(4 * j));
            tr[j - 1] += tp + (m - 1) * cp;
        }
    }
    return tr;
}

// hyperstar family: hom(S^(k)_{jk}; union of stars) in closed form
std::vector<mpz_class> hyperstar_hom_values(const std::vector<long>& branches, int k, int l) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k - 1));
    std::vector<mpz_class> homs(l, mpz_class(0));
    for (long b : branches) {
        mpz_class center = fact * b;
        for (int j = 1; j <= l; ++j) {
            mpz_class cp, lp;
            unsigned long e = static_cast<unsigned long>(j) * static_cast<unsigned long>(k);
            mpz_pow_ui(cp.get_mpz_t(), center.get_mpz_t(), e);
            mpz_pow_ui(lp.get_mpz_t(), fact.get_mpz_t(), e);
            homs[j - 1] += cp + mpz_class(b) * (k - 1) * lp;
        }
    }
    return homs;
}

double block_err_inf(std::span<const mpq_class> block, std::span<const double> y, int l) {
    std::vector<double> expect = power_sums(y, l);
    double err = 0.0;
    for (int j = 0; j < l - 1; ++j)
        err = std::max(err, std::fabs(block[j].get_d() - expect[j]));
    return err;
}

ConvergenceRow evaluate_cycles(const TargetSpec& t, long N) {
    std::vector<long> sizes = cycle_family_sizes(t.y.at(0), N);
    std::vector<mpz_class> tr = clique_cycle_traces(sizes, t.l);
    if (tr[0] == 0) throw DomainError(ErrorCode::HomCountZero, "no 4-cycles in construction");
    ConvergenceRow row;
    row.N = N;
    row.point = ratios_from_traces(tr);
    row.err_inf = block_err_inf(row.point, t.y.at(0), t.l);
    for (long m : sizes) row.graph_size += m;
    return row;
}

ConvergenceRow evaluate_necklaces(const TargetSpec& t, long N) {
    std::vector<long> sizes = necklace_family_sizes(t.y.at(0), t.q, N);
    std::vector<mpz_class> tr = clique_necklace_traces(sizes, t.q, t.l);
    if (tr[0] == 0) throw DomainError(ErrorCode::HomCountZero, "necklace count vanishes");
    ConvergenceRow row;
    row.N = N;
    row.point = ratios_from_traces(tr);
    row.err_inf = block_err_inf(row.point, t.y.at(0), t.l);
    for (long m : sizes) row.graph_size += m;
    return row;
}

ConvergenceRow evaluate_hyperstars(const TargetSpec& t, long N) {
    std::vector<long> branches = hyperstar_branch_counts(t.y.at(0), t.k, N);
    std::vector<mpz_class> homs = hyperstar_hom_values(branches, t.k, t.l);
    if (homs[0] == 0) throw DomainError(ErrorCode::HomCountZero, "hyperstar count vanishes");
    ConvergenceRow row;
    row.N = N;
    ProfilePoint point;
    mpz_class den_pow = homs[0];
    for (int j = 2; j <= t.l; ++j) {
        den_pow *= homs[0];
        mpq_class rat(homs[j - 1], den_pow);
        rat.canonicalize();
        point.push_back(rat);
    }
    row.point = std::move(point);
    row.err_inf = block_err_inf(row.point, t.y.at(0), t.l);
    for (long b : branches) row.graph_size += 1 + b * (t.k - 1);
    return row;
}

ConvergenceRow evaluate_mixed(const TargetSpec& t, long N, const ExpanderOptions& opt) {
    MixedPlan plan = mixed_plan(t.y, N, opt);
    std::vector<Graph> parts;
    long total = 0;
    for (auto [q, k] : plan.slots) {
        Graph part = q_ify(expander_graph(k, opt), q);
        total += part.n;
        check_materialization(total);
        parts.push_back(std::move(part));
    }

    ConvergenceRow row;
    row.N = N;
    row.graph_size = total;
    const int r = static_cast<int>(t.y.size()) + 1;
    for (int p = 2; p <= r; ++p) {
        std::vector<mpz_class> tr(t.l, mpz_class(0));
        for (const Graph& part : parts) {
            std::vector<mpz_class> pt = fourth_power_traces(clique_edge_matrix(part, p), t.l);
            for (int j = 0; j < t.l; ++j) tr[j] += pt[j];
        }
        if (tr[0] == 0)
            throw DomainError(ErrorCode::HomCountZero,
                              "necklace count vanishes at p = " + std::to_string(p));
        ProfilePoint block = ratios_from_traces(tr);
        row.err_inf = std::max(row.err_inf, block_err_inf(block, t.y[p - 2], t.l));
        row.point.insert(row.point.end(), block.begin(), block.end());
    }
    return row;
}

} // namespace

std::vector<ConvergenceRow> convergence_experiment(Family family, const TargetSpec& target,
                                                   std::span<const long> schedule,
                                                   const ExpanderOptions& opt) {
    if (schedule.empty()) throw DomainError(ErrorCode::InvalidSize, "empty schedule");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw DomainError(ErrorCode::InvalidSize, "schedule must be strictly increasing");
    if (target.l < 2) throw DomainError(ErrorCode::InvalidSize, "profile length must be >= 2");

    std::vector<ConvergenceRow> rows;
    rows.reserve(schedule.size());
    for (long N : schedule) {
        try {
            switch (family) {
                case Family::Cycles: rows.push_back(evaluate_cycles(target, N)); break;
                case Family::Necklaces: rows.push_back(evaluate_necklaces(target, N)); break;
                case Family::Hyperstars: rows.push_back(evaluate_hyperstars(target, N)); break;
                case Family::Mixed: rows.push_back(evaluate_mixed(target, N, opt)); break;
            }
        } catch (const DomainError& e) {
            throw DomainError(e.code(), e.detail() + " (N = " + std::to_string(N) + ")");
        }
    }
    return rows;
}

} // namespace plab
