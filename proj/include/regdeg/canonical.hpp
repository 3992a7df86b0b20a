// canonical.hpp -- canonical labeling for small graphs (n <= 10).
#pragma once

#include <string>

#include "regdeg/graph.hpp"

namespace regdeg {

// Isomorphism-invariant key: two graphs get equal keys iff they are
// isomorphic. The key is the graph6 string of a canonical relabeling.
std::string canonical_form(const Graph& g);

// The canonical relabeling itself (decodes canonical_form).
Graph canonical_graph(const Graph& g);

}  // namespace regdeg
