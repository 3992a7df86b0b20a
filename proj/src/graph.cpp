#include "regdeg/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace regdeg {

Graph::Graph(int n_vertices) : n(n_vertices) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n_vertices));
    adj.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj[u] |= vs_bit(v);
    adj[v] |= vs_bit(u);
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        vs_for_each(adj[u] & ~(vs_full(u + 1)), [&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    VertexSet seen = vs_bit(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        vs_for_each(frontier, [&](int v) { next |= g.adj[v]; });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == vs_full(g.n);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.n + g2.n);
    for (int v = 0; v < g1.n; ++v) g.adj[v] = g1.adj[v];
    for (int v = 0; v < g2.n; ++v) g.adj[g1.n + v] = g2.adj[v] << g1.n;
    return g;
}

Graph s_suspension(const Graph& g, VertexSet s) {
    if (!is_independent_set(g, s))
        throw std::invalid_argument("s_suspension: S is not an independent set");
    Graph out(g.n + 1);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    VertexSet joined = vs_full(g.n) & ~s;
    out.adj[g.n] = joined;
    vs_for_each(joined, [&](int v) { out.adj[v] |= vs_bit(g.n); });
    return out;
}

bool is_independent_set(const Graph& g, VertexSet s) {
    if (s & ~vs_full(g.n)) throw std::invalid_argument("vertex set outside graph range");
    bool ok = true;
    vs_for_each(s, [&](int v) { ok = ok && !(g.adj[v] & s); });
    return ok;
}

std::vector<std::uint32_t> independent_sets(const Graph& g) {
    if (g.n > 20) throw std::length_error("independent_sets: n > 20");
    const std::uint32_t total = std::uint32_t{1} << g.n;
    std::vector<char> ok(total, 0);
    ok[0] = 1;
    std::vector<std::uint32_t> out;
    out.reserve(64);
    out.push_back(0);
    for (std::uint32_t m = 1; m < total; ++m) {
        int v = std::countr_zero(m);
        std::uint32_t rest = m & (m - 1);
        if (ok[rest] && !(g.adj[v] & rest)) {
            ok[m] = 1;
            out.push_back(m);
        }
    }
    return out;
}

namespace {

// Branch and bound for a maximum independent set over an explicit
// conflict relation; also serves matchings via the edge conflict graph.
template <class Mask>
struct MisSolver {
    const std::vector<Mask>& conflict;
    int best = 0;

    void run(Mask avail, int have) {
        if (have > best) best = have;
        while (avail) {
            if (have + popcount(avail) <= best) return;
            int v = lowest(avail);
            avail &= ~(Mask{1} << v);
            run(avail & ~conflict[v], have + 1);  // take v
        }
    }

    static int popcount(Mask m) {
        if constexpr (sizeof(Mask) > 8)
            return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
                   __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
        else
            return __builtin_popcountll(m);
    }
    static int lowest(Mask m) {
        if constexpr (sizeof(Mask) > 8) {
            auto lo = static_cast<std::uint64_t>(m);
            return lo ? __builtin_ctzll(lo)
                      : 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
        } else {
            return __builtin_ctzll(m);
        }
    }
};

using EdgeMask = unsigned __int128;

int edge_mis(const Graph& g, bool induced) {
    auto es = g.edges();
    const int m = static_cast<int>(es.size());
    if (m == 0) return 0;
    if (m > 120) throw std::length_error("too many edges for matching search");
    std::vector<EdgeMask> conflict(m, 0);
    for (int i = 0; i < m; ++i) {
        VertexSet ei = vs_bit(es[i].first) | vs_bit(es[i].second);
        VertexSet touch_i = ei | g.adj[es[i].first] | g.adj[es[i].second];
        for (int j = i + 1; j < m; ++j) {
            VertexSet ej = vs_bit(es[j].first) | vs_bit(es[j].second);
            bool clash = induced ? (touch_i & ej) != 0 : (ei & ej) != 0;
            if (clash) {
                conflict[i] |= EdgeMask{1} << j;
                conflict[j] |= EdgeMask{1} << i;
            }
        }
    }
    MisSolver<EdgeMask> solver{conflict};
    solver.run((EdgeMask{1} << m) - 1, 0);
    return solver.best;
}

}  // namespace

int independence_number(const Graph& g) {
    if (g.n == 0) return 0;
    MisSolver<VertexSet> solver{g.adj};
    solver.run(vs_full(g.n), 0);
    return solver.best;
}

int matching_number(const Graph& g) { return edge_mis(g, false); }

int induced_matching_number(const Graph& g) { return edge_mis(g, true); }

namespace {

// Greedy-with-backtracking: extend the current set with the smallest
// feasible vertex; first success is the lexicographically smallest set.
bool lex_extend(const Graph& g, int from, VertexSet cur, int need, VertexSet& out) {
    if (need == 0) {
        out = cur;
        return true;
    }
    for (int v = from; g.n - v >= need; ++v) {
        if (g.adj[v] & cur) continue;
        if (lex_extend(g, v + 1, cur | vs_bit(v), need - 1, out)) return true;
    }
    return false;
}

}  // namespace

VertexSet max_independent_set_below(const Graph& g, int k) {
    if (k < 0 || k > g.n)
        throw std::invalid_argument("independent set size out of range");
    VertexSet out = 0;
    if (!lex_extend(g, 0, 0, k, out))
        throw std::invalid_argument("no independent set of size " + std::to_string(k));
    return out;
}

bool is_star(const Graph& g) {
    if (g.n < 2) return false;
    for (int c = 0; c < g.n; ++c) {
        if (g.degree(c) != g.n - 1) continue;
        bool leaves_ok = true;
        for (int v = 0; v < g.n && leaves_ok; ++v)
            if (v != c && g.degree(v) != 1) leaves_ok = false;
        if (leaves_ok) return true;
    }
    return false;
}

bool is_star_triangle(const Graph& g) {
    if (g.n < 3 || g.n % 2 == 0) return false;
    for (int c = 0; c < g.n; ++c) {
        if (g.degree(c) != g.n - 1) continue;
        // G - c must be a perfect matching: every other vertex has one
        // neighbor besides c, and that pairing is mutual.
        bool ok = true;
        for (int v = 0; v < g.n && ok; ++v) {
            if (v == c) continue;
            VertexSet others = g.adj[v] & ~vs_bit(c);
            if (g.degree(v) != 2 || __builtin_popcountll(others) != 1) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace regdeg
