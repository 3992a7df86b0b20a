// constructions.hpp -- builders for the graph families used throughout:
// D_r, the ribbon graph, stars and star triangles, complete bipartite
// graphs, Cameron-Walker graphs from their structural data, the G_{a,b,c}
// family, and the constructive (r,d) realizers.
#pragma once

#include <utility>
#include <vector>

#include "regdeg/graph.hpp"

namespace regdeg {

// Disjoint union of r paths of length 1; vertices 2k, 2k+1 are matched.
Graph build_Dr(int r);

// Five vertices: x5 (index 4) joined to all of x1..x4 plus the edges
// {x1,x2} and {x3,x4}.
Graph build_ribbon();

Graph build_star(int k);                       // K_{1,k}, center 0
Graph build_star_triangle(int k);              // k triangles at center 0
Graph build_complete_bipartite(int a, int b);  // parts 0..a-1 and a..a+b-1

// Structural data of a Cameron-Walker graph: a connected bipartite core
// on {v_1..v_m} x {w_1..w_p}, s_i >= 1 leaf edges at each v_i, t_j >= 0
// pendant triangles at each w_j.
struct CwSpec {
    std::vector<std::pair<int, int>> core_edges;  // (v index, w index)
    std::vector<int> s;                           // size m
    std::vector<int> t;                           // size p
};

// Vertex order: v_1..v_m, w_1..w_p, the leaves grouped by v_i, then the
// triangle pairs grouped by w_j. Vertex count m + p + sum s_i + 2 sum t_j.
Graph build_cw(const CwSpec& spec);

struct CwParams {
    int a = 1, b = 1, c = 0;  // a,b >= 1 and 0 <= c <= b
};

// G_{a,b,c}: K_{a,b} core, one leaf per v_i, one pendant triangle on the
// first c of the w_j. Realizes (reg, deg h) = (a+c, a+b).
Graph build_G_abc(const CwParams& p);

// A connected graph with (reg, deg h) = (r,d), following the constructive
// proofs: iterated suspensions of D_r when r < d, D_r^S with |S| = r-1 when
// r = d >= 2, and D_r^{empty} (or a suspension of D_{r-1}^{empty} u D_1)
// when d = r-1. Pairs with d <= r-2 are not constructible here.
Graph realize_rd(int r, int d);

// Grow G to n_target vertices by repeated S-suspension with |S| = dim - 1;
// preserves (reg, deg h) at every step. G must be connected with >= 2
// vertices.
Graph pad_to_n(Graph g, int n_target);

// The Cameron-Walker witness G_{d+2r-n, n-2r, n-r-d} for a lattice point of
// the CW region; throws naming the violated inequality otherwise.
Graph realize_cw(int r, int d, int n);

}  // namespace regdeg
