// verify.hpp -- executable checks for the structural results (bounds,
// suspension and union laws, closed forms, region characterizations),
// shared between the CLI `verify` subcommand and the acceptance suite.
#pragma once

#include <string>

#include "regdeg/atlas.hpp"

namespace regdeg {

// Census of all connected graphs on n vertices via the internal generator.
RdCensus built_in_census(int n, int threads = 0);

// im <= reg <= m <= n/2 and reg + deg h <= n over full censuses.
VerifyReport verify_regbounds_range(int n_lo, int n_hi, int threads = 0);

// S-suspension laws: reg is preserved (no isolated vertices), the Hilbert
// series identity holds exactly, and the dim / deg h clauses apply when
// |S| <= dim-1 resp. |S| = dim-1. Random connected graphs up to n_max.
VerifyReport verify_suspension_laws(int samples, int n_max, unsigned seed);

// reg and deg h are additive over disjoint unions.
VerifyReport verify_union_additivity(int samples, int n_max_total, unsigned seed);

// A(n) <= RD(n) <= B(n) over full censuses.
VerifyReport verify_sandwich_range(int n_lo, int n_hi, int threads = 0);

// Closed-form (n, dim, deg h, reg) on random Cameron-Walker structures,
// against invariants computed from scratch; includes the decomposition
// round trip and the r <= d / region inequalities for the genuine CW ones.
VerifyReport verify_cw_formulas(int samples, int n_cap, unsigned seed);

// CW census equals the inequality region, with re-realized witnesses.
VerifyReport verify_cw_region_range(int n_lo, int n_hi, int threads = 0);

// n - r - d equals the number of core vertices carrying pendant triangles.
VerifyReport verify_pendant_triangles(int samples, int n_cap, unsigned seed);

// count_cw(n) = |lattice_CW(n)|, plus the |ratio - 1/12| <= 3/n tail bound
// for n >= 20.
VerifyReport verify_count_formula(int n_lo, int n_hi);

}  // namespace regdeg
