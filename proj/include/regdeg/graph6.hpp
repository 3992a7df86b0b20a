// graph6.hpp -- graph6 encode/decode (header-less, n <= 62) and the plain
// edge-list text format ("n" on the first line, then "u v" pairs).
#pragma once

#include <iosfwd>
#include <string>

#include "regdeg/graph.hpp"

namespace regdeg {

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

std::string edge_list_format(const Graph& g);
Graph parse_edge_list(std::istream& in);

}  // namespace regdeg
