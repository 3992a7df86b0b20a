// json_record.hpp -- the per-graph invariant record with a stable key
// order, suitable for diff-based golden files.
#pragma once

#include <json.hpp>

#include "regdeg/cw.hpp"
#include "regdeg/graph.hpp"

namespace regdeg {

// {graph6, n, edges, dim, f_vector, h_coeffs, deg_h, reg, im, m, betti}
nlohmann::ordered_json invariant_record(const Graph& g);

// {m, p, s, t, core_edges}
nlohmann::ordered_json decomposition_record(const CwDecomposition& dec);

}  // namespace regdeg
