// invariants.hpp -- homological invariants of the edge ideal I(G), computed
// from the independence complex: Hilbert series data (f-vector, h-polynomial,
// Krull dimension), graded Betti numbers via Hochster's formula, regularity,
// and the (reg, deg h) pair.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "regdeg/graph.hpp"

namespace regdeg {

// Hard cap for the 2^n homology sweep behind betti_table / regularity.
inline constexpr int kMaxHochsterVertices = 12;
// Prime used for the characteristic cross-checks.
inline constexpr int kCrossCheckPrime = 32749;

struct HilbertData {
    int dim = 0;                // Krull dimension of R/I(G) = independence number
    std::vector<long long> f;   // f[i] = number of independent sets of size i (f[0] = 1)
    std::vector<long long> h;   // h-polynomial coefficients, last entry nonzero
    int deg_h = 0;
};

struct BettiTable {
    // (i, j) -> beta_{i,j}(R/I), i >= 1 only; the trivial beta_{0,0} = 1
    // is implicit.
    std::map<std::pair<int, int>, long long> entries;
    int reg = 0;  // max j - i over entries, 0 when the table is empty
};

std::vector<long long> independence_f_vector(const Graph& g);

// dim, f, and the h-polynomial of R/I(G): h(t) = sum_i f[i] t^i (1-t)^(dim-i),
// trailing zeros trimmed. The edgeless graph gets h = (1), deg 0.
HilbertData hilbert_data(const Graph& g);

// Reduced simplicial homology of Ind(G[W]) over Q (p = 0) or GF(p).
// Entry [k+1] is dim H~_k, for k = -1 .. |W|-1. W = 0 gives the complex {{}}
// with H~_{-1} = 1; a cone (some v in W with no neighbor in W) gives zeros.
std::vector<int> reduced_homology_dims(const Graph& g, VertexSet w, int p = 0);

// Hochster's formula: beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Ind(G[W])).
BettiTable betti_table(const Graph& g);

// max{k+1 : H~_k(Ind(G[W])) != 0 for some W}; equals betti_table(g).reg.
int regularity(const Graph& g);

// (reg(R/I(G)), deg h_{R/I(G)}).
std::pair<int, int> rd_pair(const Graph& g);

// Small exact-polynomial helpers shared with the verification suites.
long long binomial(long long n, long long k);
std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b);
std::vector<long long> poly_pow_one_minus_t(int k);  // (1-t)^k
void poly_trim(std::vector<long long>& a);

}  // namespace regdeg
