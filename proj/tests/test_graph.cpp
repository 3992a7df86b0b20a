#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "regdeg/canonical.hpp"
#include "regdeg/constructions.hpp"
#include "regdeg/graph.hpp"
#include "regdeg/graph6.hpp"

using namespace regdeg;

namespace {

Graph pentagon() { return from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        vs_for_each(g.adj[u], [&](int v) {
            if (u < v) out.add_edge(perm[u], perm[v]);
        });
    return out;
}

// Oracle: exhaustive search over edge subsets.
int brute_matching(const Graph& g, bool induced) {
    auto es = g.edges();
    const int m = static_cast<int>(es.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        VertexSet used = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            VertexSet e = vs_bit(es[i].first) | vs_bit(es[i].second);
            if (used & e) ok = false;
            used |= e;
        }
        if (ok && induced) {
            for (int i = 0; i < m && ok; ++i) {
                if (!(mask >> i & 1)) continue;
                VertexSet e = vs_bit(es[i].first) | vs_bit(es[i].second);
                for (int j = 0; j < m && ok; ++j) {
                    if (!(mask >> j & 1) || j == i) continue;
                    VertexSet e2 = vs_bit(es[j].first) | vs_bit(es[j].second);
                    for (const auto& [a, b] : es) {
                        VertexSet f = vs_bit(a) | vs_bit(b);
                        if ((f & e) && (f & e2)) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
    return best;
}

}  // namespace

TEST_CASE("from_edge_list basics") {
    Graph d1 = from_edge_list(2, {{0, 1}});
    CHECK(d1.n == 2);
    CHECK(d1.edge_count() == 1);

    Graph ribbon = from_edge_list(5, {{4, 0}, {4, 1}, {4, 2}, {4, 3}, {0, 1}, {2, 3}});
    CHECK(ribbon == build_ribbon());
    CHECK(ribbon.edge_count() == 6);

    Graph dup = from_edge_list(3, {{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(from_edge_list(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("matching numbers") {
    CHECK(matching_number(Graph(4)) == 0);
    CHECK(matching_number(build_ribbon()) == 2);
    CHECK(matching_number(build_Dr(3)) == 3);

    CHECK(induced_matching_number(pentagon()) == 1);
    CHECK(induced_matching_number(build_ribbon()) == 2);
    for (int r = 1; r <= 4; ++r) CHECK(induced_matching_number(build_Dr(r)) == r);
}

TEST_CASE("matching vs brute force and Lemma regbounds tail") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 5;  // up to 6 vertices: brute force stays cheap
        Graph g = random_graph(rng, n, 0.4);
        CAPTURE(graph6_encode(g));
        int m = matching_number(g), im = induced_matching_number(g);
        CHECK(m == brute_matching(g, false));
        CHECK(im == brute_matching(g, true));
        CHECK(im <= m);
        CHECK(m <= n / 2);
    }
}

TEST_CASE("matching is additive over disjoint unions") {
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g1 = random_graph(rng, 2 + trial % 4, 0.5);
        Graph g2 = random_graph(rng, 2 + (trial / 4) % 4, 0.5);
        Graph u = disjoint_union(g1, g2);
        CHECK(matching_number(u) == matching_number(g1) + matching_number(g2));
        CHECK(induced_matching_number(u) ==
              induced_matching_number(g1) + induced_matching_number(g2));
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(Graph(6)) == 6);
    for (int r = 1; r <= 5; ++r) CHECK(independence_number(build_Dr(r)) == r);
    CHECK(independence_number(build_ribbon()) == 2);
}

TEST_CASE("lexicographically smallest independent sets") {
    CHECK(max_independent_set_below(build_Dr(2), 1) == vs_bit(0));
    CHECK(max_independent_set_below(build_ribbon(), 2) == (vs_bit(0) | vs_bit(2)));
    CHECK(max_independent_set_below(build_star(3), 3) == (vs_bit(1) | vs_bit(2) | vs_bit(3)));
    CHECK(max_independent_set_below(build_Dr(2), 0) == 0);
    CHECK_THROWS_AS(max_independent_set_below(build_ribbon(), 3), std::invalid_argument);
}

TEST_CASE("connectivity") {
    CHECK_FALSE(is_connected(build_Dr(2)));
    CHECK(is_connected(build_ribbon()));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("disjoint union relabels the second block") {
    CHECK(disjoint_union(build_Dr(1), build_Dr(1)) == build_Dr(2));
    Graph g = disjoint_union(build_ribbon(), build_Dr(1));
    CHECK(g.n == 7);
    CHECK(g.edge_count() == 7);
    CHECK_FALSE(is_connected(g));
    CHECK(disjoint_union(build_ribbon(), Graph(0)) == build_ribbon());
}

TEST_CASE("S-suspension") {
    Graph p3 = s_suspension(build_Dr(1), vs_bit(0));
    CHECK(p3 == from_edge_list(3, {{0, 1}, {1, 2}}));

    Graph b1 = s_suspension(build_Dr(2), vs_bit(0) | vs_bit(2));
    CHECK(b1.n == 5);
    CHECK(b1.adj[4] == (vs_bit(1) | vs_bit(3)));

    Graph cone = s_suspension(build_Dr(2), 0);
    CHECK(cone.degree(4) == 4);

    CHECK_THROWS_AS(s_suspension(build_Dr(1), vs_bit(0) | vs_bit(1)), std::invalid_argument);
}

TEST_CASE("suspension order and degree bookkeeping") {
    std::mt19937 rng(7003);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 3 + trial % 6, 0.4);
        int k = trial % 3;
        VertexSet s;
        try {
            s = max_independent_set_below(g, k);
        } catch (const std::invalid_argument&) {
            continue;
        }
        Graph gs = s_suspension(g, s);
        CHECK(gs.n == g.n + 1);
        CHECK(gs.degree(g.n) == g.n - __builtin_popcountll(s));
    }
}

TEST_CASE("star and star-triangle predicates") {
    CHECK(is_star(build_star(4)));
    CHECK(is_star(build_star(1)));  // K_{1,1}
    CHECK_FALSE(is_star(build_ribbon()));
    CHECK_FALSE(is_star(pentagon()));
    CHECK_FALSE(is_star(Graph(1)));

    CHECK(is_star_triangle(build_star_triangle(1)));  // K_3
    CHECK(is_star_triangle(build_star_triangle(2)));
    CHECK_FALSE(is_star_triangle(build_star(4)));
    CHECK_FALSE(is_star_triangle(pentagon()));

    // The ribbon graph is two triangles joined at x5: the star-triangle
    // shape with two triangles.
    CHECK(is_star_triangle(build_ribbon()));
    CHECK(canonical_form(build_star_triangle(2)) == canonical_form(build_ribbon()));
}

TEST_CASE("canonical form identifies isomorphic graphs") {
    CHECK(canonical_form(from_edge_list(3, {{0, 1}, {1, 2}})) ==
          canonical_form(from_edge_list(3, {{1, 0}, {0, 2}})));
    Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(canonical_form(c4) != canonical_form(build_Dr(2)));

    // paw graph: triangle plus a pendant edge, over all 4! labelings
    const Graph paw = from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    std::vector<int> perm{0, 1, 2, 3};
    std::set<std::string> keys;
    do {
        keys.insert(canonical_form(permuted(paw, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(keys.size() == 1);
}

TEST_CASE("canonical form invariance under random permutations") {
    std::mt19937 rng(7004);
    std::vector<Graph> subjects{build_ribbon(), pentagon(), build_G_abc({1, 2, 1}),
                                from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})};
    // Petersen graph: vertex-transitive, exercises the individualization path
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        petersen.add_edge(i, 5 + i);
    }
    subjects.push_back(petersen);
    for (int i = 0; i < 3; ++i) subjects.push_back(random_graph(rng, 8, 0.35));

    for (const auto& g : subjects) {
        const std::string key = canonical_form(g);
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int round = 0; round < 100; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(permuted(g, perm)) == key);
        }
    }
}

TEST_CASE("graph6 known strings") {
    CHECK(graph6_encode(build_Dr(1)) == "A_");
    CHECK(graph6_encode(from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})) == "Ch");
    Graph k4 = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(graph6_encode(k4) == "C~");
    CHECK(graph6_encode(Graph(5)) == "D??");
    CHECK(graph6_encode(Graph(0)) == "?");
}

TEST_CASE("graph6 round trip and rejection of malformed input") {
    std::mt19937 rng(7005);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, trial % 13, 0.4);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    CHECK_THROWS_AS(graph6_decode(""), std::runtime_error);
    CHECK_THROWS_AS(graph6_decode("D"), std::runtime_error);      // truncated
    CHECK_THROWS_AS(graph6_decode("A_x"), std::runtime_error);    // trailing
    CHECK_THROWS_AS(graph6_decode(":Ab"), std::runtime_error);    // sparse6
    CHECK_THROWS_AS(graph6_decode("\x01zz"), std::runtime_error); // bad order byte
}

TEST_CASE("edge list text round trip") {
    Graph g = build_G_abc({2, 3, 2});
    std::istringstream in(edge_list_format(g));
    CHECK(parse_edge_list(in) == g);

    std::istringstream bad("3\n0 zero\n");
    CHECK_THROWS_AS(parse_edge_list(bad), std::runtime_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_edge_list(empty), std::runtime_error);
}
