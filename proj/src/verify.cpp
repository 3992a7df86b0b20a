#include "regdeg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "regdeg/canonical.hpp"
#include "regdeg/constructions.hpp"
#include "regdeg/cw.hpp"
#include "regdeg/graph6.hpp"
#include "regdeg/invariants.hpp"

namespace regdeg {

RdCensus built_in_census(int n, int threads) {
    CensusOptions opt;
    opt.threads = threads;
    return compute_census(n, enumerate_connected(n, threads), opt);
}

VerifyReport verify_regbounds_range(int n_lo, int n_hi, int threads) {
    VerifyReport report;
    for (int n = n_lo; n <= n_hi; ++n) {
        RdCensus census = built_in_census(n, threads);
        for (const auto& line : census.violations) report.fail("n=" + std::to_string(n) + ": " + line);
        report.note("n=" + std::to_string(n) + ": " + std::to_string(census.total_graphs) +
                    " graphs, bounds hold on all of them");
    }
    return report;
}

namespace {

Graph random_connected_graph(std::mt19937& rng, int n_min, int n_max) {
    std::uniform_int_distribution<int> order(n_min, n_max);
    std::uniform_real_distribution<double> prob(0.15, 0.75);
    for (;;) {
        int n = order(rng);
        double p = prob(rng);
        Graph g(n);
        std::bernoulli_distribution edge(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) g.add_edge(u, v);
        if (g.edge_count() > 0 && is_connected(g)) return g;
    }
}

VertexSet random_independent_set(std::mt19937& rng, const Graph& g, int size_cap) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet s = 0;
    int have = 0;
    for (int v : order) {
        if (have == size_cap) break;
        if (!(g.adj[v] & s)) {
            s |= vs_bit(v);
            ++have;
        }
    }
    return s;
}

std::string poly_str(const std::vector<long long>& p) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << ')';
    return out.str();
}

}  // namespace

VerifyReport verify_suspension_laws(int samples, int n_max, unsigned seed) {
    VerifyReport report;
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Graph g = random_connected_graph(rng, 2, n_max);
        std::uniform_int_distribution<int> cap(0, g.n);
        VertexSet s = random_independent_set(rng, g, cap(rng));
        const int s_size = __builtin_popcountll(s);
        Graph gs = s_suspension(g, s);

        const int reg_before = regularity(g), reg_after = regularity(gs);
        HilbertData h1 = hilbert_data(g), h2 = hilbert_data(gs);
        std::ostringstream ctx;
        ctx << "sample " << i << " (" << graph6_encode(g) << ", |S|=" << s_size << ")";

        if (reg_after != reg_before)
            report.fail(ctx.str() + ": reg changed " + std::to_string(reg_before) + " -> " +
                        std::to_string(reg_after));
        // h2/(1-t)^d2 == h1/(1-t)^d1 + t/(1-t)^(|S|+1), cleared of denominators
        const int common = std::max(std::max(h1.dim, h2.dim), s_size + 1);
        auto lhs = poly_mul(h2.h, poly_pow_one_minus_t(common - h2.dim));
        auto rhs = poly_mul(h1.h, poly_pow_one_minus_t(common - h1.dim));
        auto extra = poly_mul({0, 1}, poly_pow_one_minus_t(common - s_size - 1));
        rhs.resize(std::max(rhs.size(), extra.size()), 0);
        for (std::size_t k = 0; k < extra.size(); ++k) rhs[k] += extra[k];
        poly_trim(lhs);
        poly_trim(rhs);
        if (lhs != rhs)
            report.fail(ctx.str() + ": Hilbert identity broken, " + poly_str(lhs) +
                        " != " + poly_str(rhs));
        if (s_size <= h1.dim - 1 && h2.dim != h1.dim)
            report.fail(ctx.str() + ": dim changed under |S| <= dim-1");
        if (s_size == h1.dim - 1 && h2.deg_h != h1.deg_h)
            report.fail(ctx.str() + ": deg h changed under |S| = dim-1");
    }
    report.note(std::to_string(samples) + " random suspensions checked");
    return report;
}

VerifyReport verify_union_additivity(int samples, int n_max_total, unsigned seed) {
    VerifyReport report;
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Graph g1 = random_connected_graph(rng, 2, n_max_total - 2);
        Graph g2 = random_connected_graph(rng, 2, n_max_total - g1.n);
        Graph both = disjoint_union(g1, g2);
        auto [r1, d1] = rd_pair(g1);
        auto [r2, d2] = rd_pair(g2);
        auto [r, d] = rd_pair(both);
        if (r != r1 + r2 || d != d1 + d2) {
            std::ostringstream line;
            line << "sample " << i << ": (" << r << "," << d << ") != (" << r1 << "+" << r2
                 << "," << d1 << "+" << d2 << ")  [" << graph6_encode(g1) << " u "
                 << graph6_encode(g2) << "]";
            report.fail(line.str());
        }
    }
    report.note(std::to_string(samples) + " random disjoint unions checked");
    return report;
}

VerifyReport verify_sandwich_range(int n_lo, int n_hi, int threads) {
    VerifyReport report;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto sub = verify_sandwich(built_in_census(n, threads));
        if (!sub.pass) report.pass = false;
        for (auto& line : sub.lines) report.lines.push_back(std::move(line));
    }
    return report;
}

namespace {

CwSpec random_cw_spec(std::mt19937& rng, int n_cap) {
    std::uniform_int_distribution<int> part(1, 3), leaf(1, 3), tri(0, 2);
    std::bernoulli_distribution keep(0.6);
    for (;;) {
        CwSpec spec;
        const int m = part(rng), p = part(rng);
        spec.s.resize(m);
        spec.t.resize(p);
        int n = m + p;
        for (int& si : spec.s) n += (si = leaf(rng));
        for (int& tj : spec.t) n += 2 * (tj = tri(rng));
        if (n > n_cap) continue;
        Graph core(m + p);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < p; ++j)
                if (keep(rng)) {
                    spec.core_edges.emplace_back(i, j);
                    core.add_edge(i, m + j);
                }
        if (!is_connected(core)) continue;
        return spec;
    }
}

}  // namespace

VerifyReport verify_cw_formulas(int samples, int n_cap, unsigned seed) {
    VerifyReport report;
    std::mt19937 rng(seed);
    int genuine_cw = 0;
    for (int i = 0; i < samples; ++i) {
        CwSpec spec = random_cw_spec(rng, n_cap);
        Graph g = build_cw(spec);
        CwDecomposition given;
        given.m = static_cast<int>(spec.s.size());
        given.p = static_cast<int>(spec.t.size());
        given.s = spec.s;
        given.t = spec.t;
        CwClosedForm want = cw_formula_invariants(given);
        HilbertData hd = hilbert_data(g);
        const int reg = regularity(g);
        std::ostringstream ctx;
        ctx << "spec " << i << " (" << graph6_encode(g) << ")";
        if (want.n != g.n || want.dim != independence_number(g) || want.deg_h != hd.deg_h ||
            want.reg != reg) {
            std::ostringstream line;
            line << ctx.str() << ": formula (" << want.n << "," << want.dim << "," << want.deg_h
                 << "," << want.reg << ") vs computed (" << g.n << ","
                 << independence_number(g) << "," << hd.deg_h << "," << reg << ")";
            report.fail(line.str());
        }
        if (!is_cameron_walker(g)) continue;  // degenerate shapes classify as stars
        ++genuine_cw;
        CwDecomposition dec = decompose_cw(g);
        if (canonical_form(build_cw(dec.to_spec())) != canonical_form(g))
            report.fail(ctx.str() + ": decomposition round trip is not isomorphic");
        const int d = hd.deg_h, n = g.n;
        if (reg > d) report.fail(ctx.str() + ": r > d on a Cameron-Walker graph");
        if (!(2 <= reg && reg <= (n - 1) / 2 && reg <= d && d <= n - reg &&
              d >= -2 * reg + n + 1))
            report.fail(ctx.str() + ": region inequalities violated");
    }
    report.note(std::to_string(samples) + " random structures checked (" +
                std::to_string(genuine_cw) + " genuine Cameron-Walker)");
    return report;
}

VerifyReport verify_cw_region_range(int n_lo, int n_hi, int threads) {
    VerifyReport report;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto sub = verify_cw_characterization(built_in_census(n, threads));
        if (!sub.pass) report.pass = false;
        for (auto& line : sub.lines) report.lines.push_back(std::move(line));
    }
    return report;
}

VerifyReport verify_pendant_triangles(int samples, int n_cap, unsigned seed) {
    VerifyReport report;
    std::mt19937 rng(seed);
    int checked = 0;
    while (checked < samples) {
        Graph g = build_cw(random_cw_spec(rng, n_cap));
        if (!is_cameron_walker(g)) continue;
        ++checked;
        auto [e, attached] = pendant_triangle_check(g);
        CwDecomposition dec = decompose_cw(g);
        int total_triangles = 0;
        for (int tj : dec.t) total_triangles += tj;
        std::ostringstream ctx;
        ctx << "graph " << graph6_encode(g);
        if (e != attached)
            report.fail(ctx.str() + ": e=" + std::to_string(e) + " but " +
                        std::to_string(attached) + " vertices carry pendant triangles");
        if (e > total_triangles)
            report.fail(ctx.str() + ": e exceeds the pendant triangle count");
        if (e == 0 && total_triangles != 0)
            report.fail(ctx.str() + ": r+d = n but pendant triangles exist");
    }
    report.note(std::to_string(samples) + " Cameron-Walker graphs checked");
    return report;
}

VerifyReport verify_count_formula(int n_lo, int n_hi) {
    VerifyReport report;
    for (int n = std::max(5, n_lo); n <= n_hi; ++n) {
        const long long formula = count_cw(n);
        const long long direct = static_cast<long long>(lattice_CW(n).size());
        if (formula != direct)
            report.fail("n=" + std::to_string(n) + ": formula " + std::to_string(formula) +
                        " != region size " + std::to_string(direct));
        if (n >= 20) {
            const double ratio = static_cast<double>(formula) / (static_cast<double>(n) * n);
            if (std::abs(ratio - 1.0 / 12.0) > 3.0 / n)
                report.fail("n=" + std::to_string(n) + ": ratio " + std::to_string(ratio) +
                            " drifts from 1/12 by more than 3/n");
        }
    }
    report.note("count formula matches the region size on n=" + std::to_string(std::max(5, n_lo)) +
                ".." + std::to_string(n_hi));
    return report;
}

}  // namespace regdeg
