#include "regdeg/cw.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "regdeg/invariants.hpp"

namespace regdeg {

bool is_cameron_walker(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_cameron_walker: disconnected input");
    if (g.n > kMaxHochsterVertices)
        throw std::length_error("is_cameron_walker: n > 12");
    if (g.edge_count() == 0) return false;
    return induced_matching_number(g) == matching_number(g) && !is_star(g) &&
           !is_star_triangle(g);
}

namespace {

[[noreturn]] void structural_error(const std::string& what) {
    throw std::runtime_error("decompose_cw: " + what + " (recognition/classification mismatch)");
}

}  // namespace

CwDecomposition decompose_cw(const Graph& g) {
    if (!is_cameron_walker(g))
        throw std::invalid_argument("decompose_cw: input is not a Cameron-Walker graph");

    constexpr int kUnassigned = -1;
    enum { kLeaf = 0, kTriangle = 1 };
    std::vector<int> mark(g.n, kUnassigned);
    std::vector<int> leaf_at(g.n, 0), tri_at(g.n, 0);

    // Pendant triangles: an edge between two degree-2 vertices whose common
    // neighbor has larger degree.
    for (int a = 0; a < g.n; ++a) {
        if (g.degree(a) != 2) continue;
        vs_for_each(g.adj[a] & ~vs_full(a + 1), [&](int b) {
            if (g.degree(b) != 2) return;
            VertexSet common = g.adj[a] & g.adj[b];
            if (!common) return;
            int c = __builtin_ctzll(common);
            if (g.degree(c) <= 2) return;
            mark[a] = mark[b] = kTriangle;
            ++tri_at[c];
        });
    }
    // Leaf edges.
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 1) continue;
        int x = __builtin_ctzll(g.adj[u]);
        if (mark[x] != kUnassigned) structural_error("leaf attached to a stripped vertex");
        mark[u] = kLeaf;
        ++leaf_at[x];
    }

    std::vector<int> core;
    for (int v = 0; v < g.n; ++v)
        if (mark[v] == kUnassigned) core.push_back(v);
    if (core.empty()) structural_error("empty core");

    // 2-color the core and check it is connected and bipartite.
    std::map<int, int> color;
    std::vector<int> queue{core[0]};
    color[core[0]] = 0;
    VertexSet core_set = 0;
    for (int v : core) core_set |= vs_bit(v);
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        vs_for_each(g.adj[u] & core_set, [&](int v) {
            auto it = color.find(v);
            if (it == color.end()) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (it->second == color[u]) {
                structural_error("core is not bipartite");
            }
        });
    }
    if (color.size() != core.size()) structural_error("core is not connected");

    std::vector<int> side[2];
    for (int v : core) side[color[v]].push_back(v);

    auto leaf_side_ok = [&](const std::vector<int>& vs, const std::vector<int>& ws) {
        for (int v : vs)
            if (leaf_at[v] == 0 || tri_at[v] > 0) return false;
        for (int w : ws)
            if (leaf_at[w] > 0) return false;
        return !vs.empty() && !ws.empty();
    };
    bool ok0 = leaf_side_ok(side[0], side[1]);
    bool ok1 = leaf_side_ok(side[1], side[0]);
    if (!ok0 && !ok1) structural_error("no valid leaf-side orientation");
    int v_side = ok0 && ok1 ? (side[0][0] < side[1][0] ? 0 : 1) : (ok0 ? 0 : 1);

    CwDecomposition dec;
    dec.core_v = side[v_side];
    dec.core_w = side[1 - v_side];
    dec.m = static_cast<int>(dec.core_v.size());
    dec.p = static_cast<int>(dec.core_w.size());
    dec.role.assign(g.n, VertexRole::Leaf);
    for (int v = 0; v < g.n; ++v)
        if (mark[v] == kTriangle) dec.role[v] = VertexRole::Triangle;
    std::vector<int> index_of(g.n, -1);
    for (int i = 0; i < dec.m; ++i) {
        index_of[dec.core_v[i]] = i;
        dec.role[dec.core_v[i]] = VertexRole::CoreV;
    }
    for (int j = 0; j < dec.p; ++j) {
        index_of[dec.core_w[j]] = j;
        dec.role[dec.core_w[j]] = VertexRole::CoreW;
    }
    for (int v : dec.core_v) dec.s.push_back(leaf_at[v]);
    for (int w : dec.core_w) dec.t.push_back(tri_at[w]);
    for (int v : dec.core_v)
        vs_for_each(g.adj[v] & core_set, [&](int w) {
            dec.core_edges.emplace_back(index_of[v], index_of[w]);
        });
    std::sort(dec.core_edges.begin(), dec.core_edges.end());
    return dec;
}

CwClosedForm cw_formula_invariants(const CwDecomposition& dec) {
    CwClosedForm out;
    const int sum_s = std::accumulate(dec.s.begin(), dec.s.end(), 0);
    const int sum_t = std::accumulate(dec.t.begin(), dec.t.end(), 0);
    int sum_t_floor = 0;
    for (int tj : dec.t) sum_t_floor += std::max(tj, 1);
    out.n = dec.m + dec.p + sum_s + 2 * sum_t;
    out.dim = sum_s + sum_t_floor;
    out.deg_h = out.dim;
    out.reg = dec.m + sum_t;
    return out;
}

std::pair<int, int> pendant_triangle_check(const Graph& g) {
    auto [r, d] = rd_pair(g);
    auto dec = decompose_cw(g);
    int attached = 0;
    for (int tj : dec.t)
        if (tj >= 1) ++attached;
    return {g.n - r - d, attached};
}

}  // namespace regdeg
