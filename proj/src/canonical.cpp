#include "regdeg/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "regdeg/graph6.hpp"

namespace regdeg {

namespace {

using Coloring = std::vector<int>;

// Stable 1-WL refinement. Color ids are normalized to 0..k-1 by sorting
// signature vectors, so equal inputs (up to isomorphism) refine to the
// same class order.
Coloring refine(const Graph& g, Coloring col) {
    int classes = 0;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sigs(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s{col[v]};
            vs_for_each(g.adj[v], [&](int u) { s.push_back(col[u]); });
            std::sort(s.begin() + 1, s.end());
            sigs[v] = {std::move(s), v};
        }
        std::vector<int> order(g.n);
        for (int v = 0; v < g.n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sigs[a].first < sigs[b].first; });
        int next = -1;
        for (int i = 0; i < g.n; ++i) {
            if (i == 0 || sigs[order[i]].first != sigs[order[i - 1]].first) ++next;
            col[order[i]] = next;
        }
        if (next + 1 == classes) break;
        classes = next + 1;
        if (classes == g.n) break;
    }
    return col;
}

std::vector<std::vector<int>> color_classes(const Graph& g, const Coloring& col) {
    int k = 0;
    for (int v = 0; v < g.n; ++v) k = std::max(k, col[v] + 1);
    std::vector<std::vector<int>> cls(k);
    for (int v = 0; v < g.n; ++v) cls[col[v]].push_back(v);
    return cls;
}

// If adjacency between (and inside) every pair of classes is all-or-none,
// the code no longer depends on the order within classes; this short-cuts
// the factorial blowup on complete and complete-multipartite graphs.
bool class_structured(const Graph& g, const std::vector<std::vector<int>>& cls) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
        for (std::size_t b = a; b < cls.size(); ++b) {
            int seen = -1;
            for (int u : cls[a])
                for (int v : cls[b]) {
                    if (u == v) continue;
                    int e = g.has_edge(u, v) ? 1 : 0;
                    if (seen < 0) seen = e;
                    else if (seen != e) return false;
                }
        }
    }
    return true;
}

struct CanonSearch {
    const Graph& g;
    std::string best;

    void leaf(const std::vector<std::vector<int>>& cls) {
        std::vector<int> pos_of(g.n);
        int at = 0;
        for (const auto& c : cls)
            for (int v : c) pos_of[v] = at++;
        Graph relabeled(g.n);
        for (int u = 0; u < g.n; ++u)
            vs_for_each(g.adj[u], [&](int v) {
                if (u < v) relabeled.add_edge(pos_of[u], pos_of[v]);
            });
        std::string code = graph6_encode(relabeled);
        if (best.empty() || code < best) best = std::move(code);
    }

    void rec(const Coloring& col) {
        auto cls = color_classes(g, col);
        std::size_t target = 0;
        while (target < cls.size() && cls[target].size() == 1) ++target;
        if (target == cls.size() || class_structured(g, cls)) {
            leaf(cls);
            return;
        }
        for (int v : cls[target]) {
            Coloring split(g.n);
            for (int u = 0; u < g.n; ++u) split[u] = 2 * col[u] + (u == v ? 0 : 1);
            rec(refine(g, std::move(split)));
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.n > 10) throw std::length_error("canonical_form: n > 10");
    if (g.n == 0) return graph6_encode(g);
    Coloring degrees(g.n);
    for (int v = 0; v < g.n; ++v) degrees[v] = g.degree(v);
    CanonSearch search{g, {}};
    search.rec(refine(g, std::move(degrees)));
    return search.best;
}

Graph canonical_graph(const Graph& g) { return graph6_decode(canonical_form(g)); }

}  // namespace regdeg
