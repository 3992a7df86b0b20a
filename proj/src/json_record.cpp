#include "regdeg/json_record.hpp"

#include "regdeg/graph6.hpp"
#include "regdeg/invariants.hpp"

namespace regdeg {

nlohmann::ordered_json invariant_record(const Graph& g) {
    nlohmann::ordered_json rec;
    rec["graph6"] = graph6_encode(g);
    rec["n"] = g.n;
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    rec["edges"] = std::move(edges);
    HilbertData hd = hilbert_data(g);
    rec["dim"] = hd.dim;
    rec["f_vector"] = hd.f;
    rec["h_coeffs"] = hd.h;
    rec["deg_h"] = hd.deg_h;
    BettiTable table = betti_table(g);
    rec["reg"] = table.reg;
    rec["im"] = induced_matching_number(g);
    rec["m"] = matching_number(g);
    auto betti = nlohmann::ordered_json::array();
    for (const auto& [key, count] : table.entries)
        betti.push_back({key.first, key.second, count});
    rec["betti"] = std::move(betti);
    return rec;
}

nlohmann::ordered_json decomposition_record(const CwDecomposition& dec) {
    nlohmann::ordered_json rec;
    rec["m"] = dec.m;
    rec["p"] = dec.p;
    rec["s"] = dec.s;
    rec["t"] = dec.t;
    auto core = nlohmann::ordered_json::array();
    for (auto [i, j] : dec.core_edges) core.push_back({i, j});
    rec["core_edges"] = std::move(core);
    return rec;
}

}  // namespace regdeg
