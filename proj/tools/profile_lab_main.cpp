#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "profile_lab/errors.hpp"
#include "profile_lab/expander.hpp"
#include "profile_lab/graph.hpp"
#include "profile_lab/homcount.hpp"
#include "profile_lab/profile.hpp"
#include "profile_lab/rational.hpp"
#include "profile_lab/realize.hpp"
#include "profile_lab/spectrum.hpp"

namespace {

using namespace plab;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += std::string("\\") + c;
        else if (c == '\n')
            out += "\\n";
        else
            out += c;
    }
    return out;
}

std::string read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(path);
        if (!in) throw DomainError(ErrorCode::ParseError, "cannot open input file: " + path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    // first nonempty line
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw DomainError(ErrorCode::ParseError, "empty input: " + path);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path == "-" || path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError(ErrorCode::ParseError, "cannot open output file: " + path);
    out << payload;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw DomainError(ErrorCode::ParseError, "empty list entry");
        out.push_back(parse_rational(tok).get_d());
    }
    return out;
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    for (const auto& tok : split(text, ',')) {
        try {
            out.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw DomainError(ErrorCode::ParseError, "bad integer: " + tok);
        }
    }
    return out;
}

std::vector<mpq_class> parse_rationals(const std::string& text) {
    std::vector<mpq_class> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_rational(tok));
    return out;
}

std::string values_json(const std::vector<mpq_class>& values) {
    std::string out = "{\"values\":[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += '"' + rational_string(values[i]) + '"';
    }
    out += "]}";
    return out;
}

// column labels for a (possibly mixed) profile point
std::vector<std::string> point_labels(int l, int r) {
    std::vector<std::string> labels;
    if (r <= 2) {
        for (int j = 2; j <= l; ++j) labels.push_back("a_" + std::to_string(j));
    } else {
        for (int q = 2; q <= r; ++q)
            for (int j = 2; j <= l; ++j)
                labels.push_back("a_q" + std::to_string(q) + "_j" + std::to_string(j));
    }
    return labels;
}

std::string point_csv(const std::vector<mpq_class>& values, int l, int r) {
    std::vector<std::string> labels = point_labels(l, r);
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ',';
        out += labels[i];
    }
    out += '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += rational_string(values[i]);
    }
    out += '\n';
    return out;
}

ExpanderOptions provider_options(const std::string& provider, long cap) {
    ExpanderOptions opt;
    if (provider == "fallback")
        opt.provider = ExpanderProvider::Fallback;
    else if (provider == "algebraic")
        opt.provider = ExpanderProvider::Algebraic;
    else
        throw CLI::ValidationError("--provider must be algebraic or fallback");
    if (cap > 0) opt.vertex_cap = cap;
    return opt;
}

// ------------------------------------------------------------------ count --

int run_count(const std::string& motif, long j, int q, int k, long b, const std::string& in) {
    mpz_class result;
    if (motif == "cycle") {
        result = cycle_hom(from_graph6(read_input(in)), j);
    } else if (motif == "necklace") {
        result = necklace_hom(from_graph6(read_input(in)), j, q);
    } else if (motif == "hyperstar") {
        Hypergraph g = from_hypergraph_json(read_input(in));
        if (g.k != k)
            throw DomainError(ErrorCode::UniformityMismatch,
                              "--k " + std::to_string(k) + " but input is " +
                                  std::to_string(g.k) + "-uniform");
        result = hyperstar_hom(g, b);
    } else {
        throw CLI::ValidationError("--motif must be cycle, necklace or hyperstar");
    }
    std::cout << result.get_str() << "\n";
    return 0;
}

// ------------------------------------------------------------------ ratio --

int run_ratio(const std::string& family, int l, int q, int r, int k, const std::string& in,
              const std::string& format) {
    std::vector<mpq_class> values;
    int r_used = 2;
    if (family == "cycles") {
        values = ratio_point_cycles(from_graph6(read_input(in)), l);
    } else if (family == "necklaces") {
        values = ratio_point_necklaces(from_graph6(read_input(in)), l, q);
    } else if (family == "mixed") {
        values = ratio_point_mixed(from_graph6(read_input(in)), l, r);
        r_used = r;
    } else if (family == "hyperstars") {
        Hypergraph g = from_hypergraph_json(read_input(in));
        if (k != 0 && g.k != k)
            throw DomainError(ErrorCode::UniformityMismatch,
                              "--k " + std::to_string(k) + " but input is " +
                                  std::to_string(g.k) + "-uniform");
        values = ratio_point_hyperstars(g, l);
    } else {
        throw CLI::ValidationError("--family must be cycles, necklaces, mixed or hyperstars");
    }
    if (format == "json")
        std::cout << values_json(values) << "\n";
    else if (format == "csv")
        std::cout << point_csv(values, l, r_used);
    else
        throw CLI::ValidationError("--format must be json or csv");
    return 0;
}

// --------------------------------------------------------------- boundary --

int run_boundary(int l, int type, const std::string& mults, const std::string& values) {
    BoundaryPattern pattern;
    pattern.kind = type;
    pattern.multiplicities = parse_longs(mults);
    pattern.values = parse_rationals(values);
    BoundaryResult res = boundary_point(pattern, l);
    std::string out = "{\"values\":[";
    for (std::size_t i = 0; i < res.point.size(); ++i) {
        if (i) out += ',';
        out += '"' + rational_string(res.point[i]) + '"';
    }
    out += "],\"collapsed\":";
    out += res.collapsed ? "true" : "false";
    out += "}";
    std::cout << out << "\n";
    return 0;
}

// ----------------------------------------------------------------- sample --

int run_sample(int l, int nmax, long count, unsigned long long seed, const std::string& out,
               const std::string& svg) {
    auto cloud = sample_profile(l, nmax, count, seed);
    std::string csv;
    for (int j = 2; j <= l; ++j) {
        if (j > 2) csv += ',';
        csv += "a_" + std::to_string(j);
    }
    csv += '\n';
    for (const auto& row : cloud) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) csv += ',';
            csv += fmt_double(row[i]);
        }
        csv += '\n';
    }
    write_output(out, csv);

    if (!svg.empty()) {
        // minimal static scatter of (a_2, a_3); rendering proper is out of scope
        std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
                        "viewBox=\"0 0 640 640\">\n<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
        for (const auto& row : cloud) {
            double x = 40 + row[0] * 560;
            double y = 600 - (row.size() > 1 ? row[1] : row[0]) * 560;
            s += "<circle cx=\"" + fmt_double(x) + "\" cy=\"" + fmt_double(y) +
                 "\" r=\"1\" fill=\"black\" fill-opacity=\"0.35\"/>\n";
        }
        s += "</svg>\n";
        write_output(svg, s);
    }
    return 0;
}

// ---------------------------------------------------------------- realize --

std::vector<std::vector<double>> parse_target_blocks(const std::string& target) {
    std::vector<std::vector<double>> blocks;
    for (const auto& block : split(target, ';')) blocks.push_back(parse_doubles(block));
    return blocks;
}

int run_realize(const std::string& family, const std::string& target, long N, int q, int r, int k,
                const std::string& provider, long cap, const std::string& out) {
    auto blocks = parse_target_blocks(target);
    if (family == "cycles") {
        write_output(out, to_graph6(clique_sequence_cycles(blocks.at(0), N)) + "\n");
    } else if (family == "necklaces") {
        write_output(out, to_graph6(clique_sequence_necklaces(blocks.at(0), q, N)) + "\n");
    } else if (family == "mixed") {
        if (static_cast<int>(blocks.size()) != r - 1)
            throw DomainError(ErrorCode::ParseError,
                              "mixed target needs r-1 semicolon-separated blocks");
        ExpanderOptions opt = provider_options(provider, cap);
        write_output(out, to_graph6(expander_sequence_mixed(blocks, N, opt)) + "\n");
    } else if (family == "hyperstars") {
        write_output(out, to_hypergraph_json(hyperstar_sequence(blocks.at(0), k, N)) + "\n");
    } else {
        throw CLI::ValidationError("--family must be cycles, necklaces, mixed or hyperstars");
    }
    return 0;
}

// --------------------------------------------------------------- converge --

int run_converge(const std::string& family, const std::string& target, int l,
                 const std::string& schedule, int q, int r, int k, const std::string& provider,
                 long cap, const std::string& format) {
    if (format != "csv") throw CLI::ValidationError("--format must be csv");
    TargetSpec spec;
    spec.y = parse_target_blocks(target);
    spec.l = l;
    spec.q = q;
    spec.r = r;
    spec.k = k;
    Family fam;
    int r_used = 2;
    if (family == "cycles") {
        fam = Family::Cycles;
    } else if (family == "necklaces") {
        fam = Family::Necklaces;
    } else if (family == "mixed") {
        fam = Family::Mixed;
        r_used = r;
        if (static_cast<int>(spec.y.size()) != r - 1)
            throw DomainError(ErrorCode::ParseError,
                              "mixed target needs r-1 semicolon-separated blocks");
    } else if (family == "hyperstars") {
        fam = Family::Hyperstars;
    } else {
        throw CLI::ValidationError("--family must be cycles, necklaces, mixed or hyperstars");
    }
    std::vector<long> sched = parse_longs(schedule);
    ExpanderOptions opt = provider_options(provider, cap);
    auto rows = convergence_experiment(fam, spec, sched, opt);

    std::string csv = "N,graph_size,err_inf";
    for (const auto& label : point_labels(l, r_used)) csv += "," + label;
    csv += '\n';
    for (const auto& row : rows) {
        csv += std::to_string(row.N) + ',' + std::to_string(row.graph_size) + ',' +
               fmt_double(row.err_inf);
        for (const auto& v : row.point) csv += ',' + rational_string(v);
        csv += '\n';
    }
    std::cout << csv;
    return 0;
}

// -------------------------------------------------------- verify-expander --

int run_verify(const std::string& in, double tol) {
    NdLambdaReport rep = verify_ndlambda(from_graph6(read_input(in)), tol);
    std::string out = "{\"n\":" + std::to_string(rep.n) + ",\"regular_degree\":";
    out += rep.regular_degree ? std::to_string(*rep.regular_degree) : std::string("null");
    out += ",\"triangle_free\":";
    out += rep.triangle_free ? "true" : "false";
    out += ",\"lambda2\":" + fmt_double(rep.lambda2) + "}";
    std::cout << out << "\n";
    return 0;
}

// ------------------------------------------------------------------ fiber --

int run_fiber(int l, int r, const std::string& point, const std::string& t) {
    FiberPoint b = parse_rationals(point);
    FiberPoint scaled = fiber_scale(b, parse_rational(t), l, r);
    std::cout << values_json(scaled) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homomorphism ratio profiles of cycles, necklaces and hyperstars"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "exact homomorphism count of a motif into a target");
    std::string count_motif, count_in;
    long count_j = 4, count_b = 1;
    int count_q = 2, count_k = 2;
    count->add_option("--motif", count_motif, "cycle|necklace|hyperstar")->required();
    count->add_option("--j", count_j, "cycle/necklace length");
    count->add_option("--q", count_q, "necklace clique order");
    count->add_option("--k", count_k, "hyperstar uniformity");
    count->add_option("--b", count_b, "hyperstar branch count");
    count->add_option("--in", count_in, "graph6 file, hypergraph JSON file, or -")->required();

    // ratio
    auto* ratio = app.add_subcommand("ratio", "ratio profile point of a target graph");
    std::string ratio_family, ratio_in, ratio_format = "json";
    int ratio_l = 2, ratio_q = 3, ratio_r = 3, ratio_k = 0;
    ratio->add_option("--family", ratio_family, "cycles|necklaces|mixed|hyperstars")->required();
    ratio->add_option("--l", ratio_l, "profile length")->required();
    ratio->add_option("--q", ratio_q, "necklace clique order");
    ratio->add_option("--r", ratio_r, "largest clique order for mixed profiles");
    ratio->add_option("--k", ratio_k, "hyperstar uniformity (cross-checked)");
    ratio->add_option("--in", ratio_in, "input file or -")->required();
    ratio->add_option("--format", ratio_format, "json|csv");

    // boundary
    auto* boundary = app.add_subcommand("boundary", "boundary point of the power-sum profile");
    int boundary_l = 3, boundary_type = 1;
    std::string boundary_mults, boundary_values;
    boundary->add_option("--l", boundary_l, "profile length")->required();
    boundary->add_option("--type", boundary_type, "pattern type, 1 or 2")->required();
    boundary->add_option("--mults", boundary_mults, "multiplicities R0,R1,...")->required();
    boundary->add_option("--values", boundary_values, "block values X1,X2,...")->required();

    // sample
    auto* sample = app.add_subcommand("sample", "sample the power-sum profile point cloud");
    int sample_l = 4, sample_nmax = 50;
    long sample_count = 1000;
    unsigned long long sample_seed = 1;
    std::string sample_out = "-", sample_svg;
    sample->add_option("--l", sample_l, "profile length")->required();
    sample->add_option("--nmax", sample_nmax, "largest simplex dimension")->required();
    sample->add_option("--count", sample_count, "number of points")->required();
    sample->add_option("--seed", sample_seed, "deterministic seed")->required();
    sample->add_option("--out", sample_out, "CSV output file or -");
    sample->add_option("--svg", sample_svg, "optional scatter plot file");

    // realize
    auto* realize = app.add_subcommand("realize", "materialize a construction for a target point");
    std::string realize_family, realize_target, realize_provider = "algebraic", realize_out = "-";
    long realize_N = 100, realize_cap = 0;
    int realize_q = 3, realize_r = 3, realize_k = 2;
    realize->add_option("--family", realize_family, "cycles|necklaces|mixed|hyperstars")->required();
    realize->add_option("--target", realize_target, "weights y1,y2,... (blocks ; separated for mixed)")
        ->required();
    realize->add_option("--N", realize_N, "scale parameter")->required();
    realize->add_option("--q", realize_q, "necklace clique order");
    realize->add_option("--r", realize_r, "largest clique order for mixed");
    realize->add_option("--k", realize_k, "hyperstar uniformity");
    realize->add_option("--provider", realize_provider, "algebraic|fallback");
    realize->add_option("--cap", realize_cap, "provider vertex cap override");
    realize->add_option("--out", realize_out, "output file or -");

    // converge
    auto* converge = app.add_subcommand("converge", "convergence table along a schedule");
    std::string conv_family, conv_target, conv_schedule, conv_provider = "algebraic",
                conv_format = "csv";
    int conv_l = 2, conv_q = 3, conv_r = 3, conv_k = 2;
    long conv_cap = 0;
    converge->add_option("--family", conv_family, "cycles|necklaces|mixed|hyperstars")->required();
    converge->add_option("--target", conv_target, "weights (blocks ; separated for mixed)")->required();
    converge->add_option("--l", conv_l, "profile length")->required();
    converge->add_option("--schedule", conv_schedule, "N1,N2,... strictly increasing")->required();
    converge->add_option("--q", conv_q, "necklace clique order");
    converge->add_option("--r", conv_r, "largest clique order for mixed");
    converge->add_option("--k", conv_k, "hyperstar uniformity");
    converge->add_option("--provider", conv_provider, "algebraic|fallback");
    converge->add_option("--cap", conv_cap, "provider vertex cap override");
    converge->add_option("--format", conv_format, "csv");

    // verify-expander
    auto* verify = app.add_subcommand("verify-expander", "degree/triangle/eigenvalue report");
    std::string verify_in;
    double verify_tol = 1e-9;
    verify->add_option("--in", verify_in, "graph6 file or -")->required();
    verify->add_option("--tol", verify_tol, "eigenvalue tolerance");

    // fiber
    auto* fiber = app.add_subcommand("fiber", "scale a density fiber point");
    int fiber_l = 2, fiber_r = 2;
    std::string fiber_point, fiber_t;
    fiber->add_option("--l", fiber_l, "profile length")->required();
    fiber->add_option("--r", fiber_r, "largest clique order")->required();
    fiber->add_option("--point", fiber_point, "coordinates b_{4i,q}, q-major")->required();
    fiber->add_option("--t", fiber_t, "scale factor in [0,1]")->required();

    try {
        app.parse(argc, argv);
        if (*count)
            return run_count(count_motif, count_j, count_q, count_k, count_b, count_in);
        if (*ratio)
            return run_ratio(ratio_family, ratio_l, ratio_q, ratio_r, ratio_k, ratio_in,
                             ratio_format);
        if (*boundary)
            return run_boundary(boundary_l, boundary_type, boundary_mults, boundary_values);
        if (*sample)
            return run_sample(sample_l, sample_nmax, sample_count, sample_seed, sample_out,
                              sample_svg);
        if (*realize)
            return run_realize(realize_family, realize_target, realize_N, realize_q, realize_r,
                               realize_k, realize_provider, realize_cap, realize_out);
        if (*converge)
            return run_converge(conv_family, conv_target, conv_l, conv_schedule, conv_q, conv_r,
                                conv_k, conv_provider, conv_cap, conv_format);
        if (*verify) return run_verify(verify_in, verify_tol);
        if (*fiber) return run_fiber(fiber_l, fiber_r, fiber_point, fiber_t);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const CLI::Error&) {
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "{\"error\":\"" << error_code_name(e.code()) << "\",\"detail\":\""
                  << json_escape(e.detail()) << "\"}\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"Internal\",\"detail\":\"" << json_escape(e.what()) << "\"}\n";
        return 3;
    }
}
