// rank.hpp -- exact matrix rank over Q and over GF(p), for the boundary
// matrices of independence complexes (small, entries in {-1,0,1}).
#pragma once

#include <vector>

namespace regdeg {

using IntMatrix = std::vector<std::vector<int>>;

// Rank over the rationals. Fraction-free elimination in 128-bit integers;
// retries in arbitrary precision if intermediate minors overflow.
int rank_exact(IntMatrix m);

// Rank over GF(p), p an odd prime.
int rank_mod_p(IntMatrix m, int p);

}  // namespace regdeg
