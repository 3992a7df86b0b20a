// support.hpp -- shared test fixtures and independent oracles. Everything
// here recomputes from first principles (own independence test, own
// mod-p rank) so the library paths are checked against a second route.
#pragma once

#include <random>
#include <vector>

#include "regdeg/graph.hpp"
#include "regdeg/invariants.hpp"

namespace testsupport {

using namespace regdeg;

inline Graph pentagon() {
    return from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

inline bool oracle_independent(const Graph& g, std::uint32_t s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1)
        if (g.adj[__builtin_ctz(rest)] & s) return false;
    return true;
}

inline int oracle_rank_mod_p(std::vector<std::vector<int>> m, int p) {
    if (m.empty()) return 0;
    int rank = 0;
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            while (m[r][col] % p != 0) {
                for (int c = col; c < cols; ++c)
                    m[r][c] = ((m[r][c] - m[rank][c]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// Reduced homology of Ind(G[W]) over GF(p): full face enumeration, no
// shortcuts, linear face lookup.
inline std::vector<int> oracle_homology(const Graph& g, VertexSet w, int p) {
    const int w_size = __builtin_popcountll(w);
    std::vector<std::vector<std::uint32_t>> faces(w_size + 2);
    faces[0].push_back(0);
    for (std::uint32_t s = static_cast<std::uint32_t>(w);; s = (s - 1) & w) {
        if (s && oracle_independent(g, s)) faces[__builtin_popcount(s)].push_back(s);
        if (s == 0) break;
    }
    std::vector<int> rank(w_size + 3, 0);
    for (int size = 1; size <= w_size + 1; ++size) {
        if (faces[size].empty()) break;
        std::vector<std::vector<int>> m(faces[size].size(),
                                        std::vector<int>(faces[size - 1].size(), 0));
        for (std::size_t r = 0; r < faces[size].size(); ++r) {
            int sign = 1;
            for (std::uint32_t rest = faces[size][r]; rest; rest &= rest - 1) {
                std::uint32_t child = faces[size][r] ^ (rest & -rest);
                for (std::size_t c = 0; c < faces[size - 1].size(); ++c)
                    if (faces[size - 1][c] == child) m[r][c] = sign;
                sign = -sign;
            }
        }
        rank[size] = oracle_rank_mod_p(std::move(m), p);
    }
    std::vector<int> dims(w_size + 1, 0);
    for (int k = -1; k < w_size; ++k)
        dims[k + 1] = static_cast<int>(faces[k + 1].size()) - rank[k + 1] - rank[k + 2];
    return dims;
}

// Number of degree-d monomials whose support is an independent set.
inline long long oracle_monomial_count(const Graph& g, int degree) {
    if (degree == 0) return 1;
    long long total = 0;
    const std::uint32_t all = (std::uint32_t{1} << g.n) - 1;
    for (std::uint32_t s = 1; s <= all; ++s)
        if (oracle_independent(g, s))
            total += binomial(degree - 1, __builtin_popcount(s) - 1);
    return total;
}

// Coefficient of t^degree in h(t)/(1-t)^dim.
inline long long hilbert_function(const HilbertData& hd, int degree) {
    long long total = 0;
    for (int k = 0; k < static_cast<int>(hd.h.size()); ++k) {
        if (degree - k < 0) continue;
        total += hd.dim == 0 ? (degree == k ? hd.h[k] : 0)
                             : hd.h[k] * binomial(degree - k + hd.dim - 1, hd.dim - 1);
    }
    return total;
}

// 1 + sum (-1)^i beta_{i,j} t^j must equal h(t) (1-t)^(n-dim).
inline bool k_polynomial_identity_holds(const Graph& g) {
    HilbertData hd = hilbert_data(g);
    BettiTable table = betti_table(g);
    std::vector<long long> kpoly(g.n + 1, 0);
    kpoly[0] = 1;
    for (const auto& [key, b] : table.entries)
        kpoly[key.second] += (key.first % 2 ? -1 : 1) * b;
    auto rhs = poly_mul(hd.h, poly_pow_one_minus_t(g.n - hd.dim));
    poly_trim(kpoly);
    poly_trim(rhs);
    return kpoly == rhs;
}

}  // namespace testsupport
