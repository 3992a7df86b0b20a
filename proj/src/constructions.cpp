#include "regdeg/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace regdeg {

Graph build_Dr(int r) {
    if (r < 1) throw std::invalid_argument("build_Dr: r >= 1 required");
    Graph g(2 * r);
    for (int k = 0; k < r; ++k) g.add_edge(2 * k, 2 * k + 1);
    return g;
}

Graph build_ribbon() {
    return from_edge_list(5, {{4, 0}, {4, 1}, {4, 2}, {4, 3}, {0, 1}, {2, 3}});
}

Graph build_star(int k) {
    if (k < 1) throw std::invalid_argument("build_star: k >= 1 required");
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

Graph build_star_triangle(int k) {
    if (k < 1) throw std::invalid_argument("build_star_triangle: k >= 1 required");
    Graph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    return g;
}

Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite: a,b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph build_cw(const CwSpec& spec) {
    const int m = static_cast<int>(spec.s.size());
    const int p = static_cast<int>(spec.t.size());
    if (m < 1 || p < 1) throw std::invalid_argument("build_cw: need m >= 1 and p >= 1");
    for (int si : spec.s)
        if (si < 1) throw std::invalid_argument("build_cw: every s_i must be >= 1");
    for (int tj : spec.t)
        if (tj < 0) throw std::invalid_argument("build_cw: t_j must be >= 0");

    // Connectivity of the bipartite core.
    Graph core(m + p);
    for (auto [i, j] : spec.core_edges) {
        if (i < 0 || i >= m || j < 0 || j >= p)
            throw std::invalid_argument("build_cw: core edge index out of range");
        core.add_edge(i, m + j);
    }
    if (!is_connected(core)) throw std::invalid_argument("build_cw: core is not connected");

    const int sum_s = std::accumulate(spec.s.begin(), spec.s.end(), 0);
    const int sum_t = std::accumulate(spec.t.begin(), spec.t.end(), 0);
    Graph g(m + p + sum_s + 2 * sum_t);
    for (auto [i, j] : spec.core_edges) g.add_edge(i, m + j);
    int next = m + p;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < spec.s[i]; ++k) g.add_edge(i, next++);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k < spec.t[j]; ++k) {
            g.add_edge(m + j, next);
            g.add_edge(m + j, next + 1);
            g.add_edge(next, next + 1);
            next += 2;
        }
    return g;
}

Graph build_G_abc(const CwParams& p) {
    if (p.a < 1 || p.b < 1 || p.c < 0 || p.c > p.b)
        throw std::invalid_argument("G_{a,b,c}: need a,b >= 1 and 0 <= c <= b");
    CwSpec spec;
    spec.s.assign(p.a, 1);
    spec.t.assign(p.b, 0);
    for (int j = 0; j < p.c; ++j) spec.t[j] = 1;
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j) spec.core_edges.emplace_back(i, j);
    return build_cw(spec);
}

namespace {

// Iterated suspension chain: start from D_r with S = one endpoint of every
// matched pair; each step adds one vertex joined to the other endpoints,
// raising deg h by one while fixing reg.
Graph suspension_chain(int r, int steps) {
    Graph g = build_Dr(r);
    VertexSet s = 0;
    for (int k = 0; k < r; ++k) s |= vs_bit(2 * k);
    for (int i = 0; i < steps; ++i) {
        int added = g.n;
        g = s_suspension(g, s);
        s |= vs_bit(added);
    }
    return g;
}

}  // namespace

Graph realize_rd(int r, int d) {
    const std::string pair = "(" + std::to_string(r) + "," + std::to_string(d) + ")";
    if (r < 1 || d < 0) throw std::invalid_argument("realize_rd: need r >= 1, d >= 0");
    if (d <= r - 2)
        throw std::invalid_argument("realize_rd: " + pair +
                                    " with d <= r-2 is outside the supported range");
    if (r < d) return suspension_chain(r, d - r);
    if (r == d) {
        if (r < 2) throw std::invalid_argument("realize_rd: " + pair + " not constructible");
        Graph dr = build_Dr(r);
        return s_suspension(dr, max_independent_set_below(dr, r - 1));
    }
    // d == r - 1
    if (r < 2) throw std::invalid_argument("realize_rd: " + pair + " not constructible");
    if (r % 2 == 0) return s_suspension(build_Dr(r), 0);
    Graph g = disjoint_union(s_suspension(build_Dr(r - 1), 0), build_Dr(1));
    return s_suspension(g, max_independent_set_below(g, r - 1));
}

Graph pad_to_n(Graph g, int n_target) {
    if (g.n < 2 || !is_connected(g))
        throw std::invalid_argument("pad_to_n: graph must be connected with >= 2 vertices");
    if (n_target < g.n) throw std::invalid_argument("pad_to_n: target below current order");
    while (g.n < n_target) {
        int dim = independence_number(g);
        g = s_suspension(g, max_independent_set_below(g, dim - 1));
    }
    return g;
}

Graph realize_cw(int r, int d, int n) {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("realize_cw(r=" + std::to_string(r) +
                                    ",d=" + std::to_string(d) + ",n=" + std::to_string(n) +
                                    "): " + what);
    };
    if (n < 5) fail("n >= 5 required");
    if (r < 2 || r > (n - 1) / 2) fail("need 2 <= r <= floor((n-1)/2)");
    if (d < r || d > n - r) fail("need r <= d <= n-r");
    if (d < -2 * r + n + 1) fail("need d >= -2r+n+1");
    return build_G_abc({d + 2 * r - n, n - 2 * r, n - r - d});
}

}  // namespace regdeg
