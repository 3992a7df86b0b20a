#include "regdeg/graph6.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace regdeg {

// Bit order follows the format spec: upper triangle column by column,
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte, each +63.
std::string graph6_encode(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& line) {
    if (line.empty()) throw std::runtime_error("graph6: empty string");
    const unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == '>') throw std::runtime_error("graph6: headers are not supported");
    if (c0 == ':' || c0 == ';') throw std::runtime_error("graph6: sparse6 not supported");
    if (c0 == 126) throw std::runtime_error("graph6: n > 62 not supported");
    if (c0 < 63 || c0 > 63 + kMaxVertices)
        throw std::runtime_error("graph6: invalid order byte");
    const int n = c0 - 63;
    Graph g(n);
    std::size_t at = 1;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                if (at >= line.size()) throw std::runtime_error("graph6: truncated data");
                int b = static_cast<unsigned char>(line[at++]) - 63;
                if (b < 0 || b > 63) throw std::runtime_error("graph6: invalid data byte");
                acc = b;
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) g.add_edge(i, j);
            --nbits;
        }
    }
    if (at != line.size()) throw std::runtime_error("graph6: trailing bytes");
    return g;
}

std::string edge_list_format(const Graph& g) {
    std::ostringstream out;
    out << g.n << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        if (n < 0) {
            if (!(row >> n) || n < 0)
                throw std::runtime_error("edge list line 1: expected vertex count");
            continue;
        }
        int u, v;
        if (!(row >> u)) continue;  // blank line
        if (!(row >> v))
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error("edge list: empty input");
    try {
        return from_edge_list(n, edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

}  // namespace regdeg
