#include "profile_lab/graph.hpp"

#include "json.hpp"

#include <sstream>

namespace plab {

namespace {

void append_graph6_size(std::string& s, long n) {
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw DomainError(ErrorCode::FeasibilityExceeded, "graph6 output limited to 258047 vertices");
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string s;
    append_graph6_size(s, g.n);
    // upper triangle, column order: (0,1),(0,2),(1,2),(0,3),...
    long nbits = static_cast<long>(g.n) * (g.n - 1) / 2;
    std::vector<std::uint8_t> bits((nbits + 5) / 6 * 6, 0);
    long idx = 0;
    AdjacencyBitset adj(g);
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (adj.test(u, v)) bits[idx] = 1;
    for (long i = 0; i < static_cast<long>(bits.size()); i += 6) {
        int b = 0;
        for (int t = 0; t < 6; ++t) b = (b << 1) | bits[i + t];
        s.push_back(static_cast<char>(b + 63));
    }
    return s;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw DomainError(ErrorCode::ParseError, "empty graph6 string");

    std::size_t pos = 0;
    long n = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw DomainError(ErrorCode::ParseError, "graph6 string truncated");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw DomainError(ErrorCode::ParseError, "invalid graph6 byte");
        return c - 63;
    };
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw DomainError(ErrorCode::ParseError, "graph6 sizes above 258047 unsupported");
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) != nbytes)
        throw DomainError(ErrorCode::ParseError, "graph6 length mismatch");

    std::vector<std::pair<int, int>> edges;
    long idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int b = byte(pos + idx / 6);
            if ((b >> (5 - idx % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

std::string to_hypergraph_json(const Hypergraph& h) {
    // keys emitted in n,k,edges order; edge lists are already canonical
    std::ostringstream os;
    os << "{\"n\":" << h.n << ",\"k\":" << h.k << ",\"edges\":[";
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < h.edges[i].size(); ++j) {
            if (j) os << ',';
            os << h.edges[i][j];
        }
        os << ']';
    }
    os << "]}";
    return os.str();
}

Hypergraph from_hypergraph_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(ErrorCode::ParseError, std::string("bad hypergraph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges"))
        throw DomainError(ErrorCode::ParseError, "hypergraph JSON must have n, k, edges");
    std::vector<std::vector<int>> edges;
    for (const auto& e : j["edges"]) edges.push_back(e.get<std::vector<int>>());
    return make_hypergraph(j["n"].get<int>(), j["k"].get<int>(), std::move(edges));
}

} // namespace plab
