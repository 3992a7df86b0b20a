// cw.hpp -- Cameron-Walker recognition, structural decomposition into the
// bipartite-core shape, and the closed-form invariants.
#pragma once

#include <utility>
#include <vector>

#include "regdeg/constructions.hpp"
#include "regdeg/graph.hpp"

namespace regdeg {

enum class VertexRole { CoreV, CoreW, Leaf, Triangle };

struct CwDecomposition {
    int m = 0, p = 0;
    std::vector<int> s;                           // leaf counts per v_i
    std::vector<int> t;                           // pendant triangle counts per w_j
    std::vector<std::pair<int, int>> core_edges;  // (v index, w index)
    std::vector<int> core_v, core_w;              // original vertex ids, ascending
    std::vector<VertexRole> role;                 // per original vertex

    CwSpec to_spec() const { return {core_edges, s, t}; }
};

// Definitional test: im(G) = m(G), at least one edge, and neither a star
// nor a star triangle. Requires connected input, n <= 12.
bool is_cameron_walker(const Graph& g);

// Strip leaf edges and pendant triangles, then orient the remaining
// bipartite core so that every v_i carries a leaf. Degree-1 core
// candidates are always taken as leaves, which keeps the result
// deterministic; failure on a graph that passed is_cameron_walker is a
// structural error.
CwDecomposition decompose_cw(const Graph& g);

struct CwClosedForm {
    int n = 0, dim = 0, deg_h = 0, reg = 0;
};

// Closed forms: n = m+p+sum s+2 sum t, dim = deg_h = sum s + sum max(t_j,1),
// reg = m + sum t.
CwClosedForm cw_formula_invariants(const CwDecomposition& dec);

// e = n - reg - deg_h, and the number of w_j carrying at least one pendant
// triangle; the two must agree.
std::pair<int, int> pendant_triangle_check(const Graph& g);

}  // namespace regdeg
