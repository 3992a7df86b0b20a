// regdeg -- command line front end: per-graph invariant reports, family
// construction, censuses, theorem verification, counting, and plot data.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 input parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "regdeg/atlas.hpp"
#include "regdeg/canonical.hpp"
#include "regdeg/constructions.hpp"
#include "regdeg/cw.hpp"
#include "regdeg/graph6.hpp"
#include "regdeg/invariants.hpp"
#include "regdeg/json_record.hpp"
#include "regdeg/verify.hpp"

namespace {

using namespace regdeg;
using nlohmann::json;

std::filesystem::path cache_dir() {
    const char* env = std::getenv("REGDEG_CACHE_DIR");
    std::filesystem::path dir = env && *env ? env : ".regdeg-cache";
    std::filesystem::create_directories(dir);
    return dir;
}

// (graph6 line, 1-based line number); comments and headers are skipped
std::vector<std::pair<std::string, int>> read_graph6_lines(std::istream& in) {
    std::vector<std::pair<std::string, int>> lines;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#' || line[0] == '>') continue;
        lines.emplace_back(line, lineno);
    }
    return lines;
}

Graph decode_at(const std::pair<std::string, int>& numbered) {
    try {
        return graph6_decode(numbered.first);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error("line " + std::to_string(numbered.second) + ": " + e.what());
    }
}

std::vector<std::pair<std::string, int>> read_graph6_source(const std::string& path) {
    if (path.empty() || path == "-") return read_graph6_lines(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph6_lines(in);
}

Graph read_single_graph(const std::string& g6_path, const std::string& edges_path) {
    if (!edges_path.empty()) {
        std::ifstream in(edges_path);
        if (!in) throw std::runtime_error("cannot open " + edges_path);
        return parse_edge_list(in);
    }
    auto lines = read_graph6_source(g6_path);
    if (lines.size() != 1)
        throw std::runtime_error("expected exactly one graph6 line, got " +
                                 std::to_string(lines.size()));
    return decode_at(lines[0]);
}

void print_graph(const Graph& g, const std::string& format) {
    if (format == "edges")
        std::cout << edge_list_format(g);
    else
        std::cout << graph6_encode(g) << '\n';
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

CwSpec parse_cw_spec(const std::string& text) {
    json spec_json = json::parse(text);
    CwSpec spec;
    for (const auto& e : spec_json.at("core_edges"))
        spec.core_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    spec.s = spec_json.at("s").get<std::vector<int>>();
    spec.t = spec_json.at("t").get<std::vector<int>>();
    return spec;
}

int emit_report(const std::string& id, const VerifyReport& report, bool as_json) {
    if (as_json) {
        json out{{"theorem", id}, {"pass", report.pass}, {"lines", report.lines}};
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& line : report.lines) std::cout << "  " << line << '\n';
        std::cout << id << ": " << (report.pass ? "PASS" : "FAIL") << '\n';
    }
    return report.pass ? 0 : 1;
}

struct CensusPaths {
    std::string points, cw, checkpoint;
};

CensusPaths census_paths(int n, const std::string& out_override) {
    CensusPaths paths;
    if (!out_override.empty()) {
        paths.points = out_override;
        auto dot = out_override.rfind(".csv");
        paths.cw = dot == out_override.size() - 4
                       ? out_override.substr(0, dot) + ".cw.csv"
                       : out_override + ".cw";
    } else {
        auto dir = cache_dir();
        paths.points = (dir / ("census_n" + std::to_string(n) + ".csv")).string();
        paths.cw = (dir / ("census_n" + std::to_string(n) + ".cw.csv")).string();
    }
    paths.checkpoint = (cache_dir() / ("census_n" + std::to_string(n) + ".ckpt.json")).string();
    return paths;
}

RdCensus load_census(int n, const std::string& points_path) {
    CensusPaths paths = census_paths(n, points_path);
    std::ifstream main_in(paths.points), cw_in(paths.cw);
    if (!main_in || !cw_in)
        throw std::runtime_error("missing census files for n=" + std::to_string(n) + " (" +
                                 paths.points + "); run `regdeg census --n " +
                                 std::to_string(n) + "` first");
    return read_census_csv(main_in, cw_in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological invariants of edge ideals: invariants, graph families, "
                 "censuses of (reg, deg h) pairs, and theorem checks"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores)");

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "JSON invariant record per input graph");
    std::string inv_input, inv_edges;
    bool inv_pretty = false;
    cmd_inv->add_option("--input", inv_input, "graph6 lines (file or '-' for stdin)");
    cmd_inv->add_option("--edges", inv_edges, "edge-list file instead of graph6");
    cmd_inv->add_flag("--pretty", inv_pretty, "indented JSON array");

    // construct
    auto* cmd_con = app.add_subcommand("construct", "build a named graph family");
    std::string family, con_format = "g6", con_spec, con_input, con_edges;
    std::vector<int> con_args;
    cmd_con->add_option("family", family,
                        "dr | ribbon | star | startriangle | kab | cw | gabc | realize | "
                        "realize-cw | pad")
        ->required();
    cmd_con->add_option("args", con_args, "integer arguments of the family");
    cmd_con->add_option("--format", con_format, "g6 (default) or edges")
        ->check(CLI::IsMember({"g6", "edges"}));
    cmd_con->add_option("--spec", con_spec, "cw: JSON {core_edges, s, t}");
    cmd_con->add_option("--input", con_input, "pad: graph6 input (file or '-')");
    cmd_con->add_option("--edges-in", con_edges, "pad: edge-list input file");

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose",
                                       "Cameron-Walker structure of a graph as JSON");
    std::string dec_input, dec_edges;
    cmd_dec->add_option("--input", dec_input, "graph6 input (file or '-')");
    cmd_dec->add_option("--edges", dec_edges, "edge-list input file");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "connected graphs, one graph6 per line");
    int enum_n = 0;
    bool enum_count = false, enum_big = false;
    cmd_enum->add_option("--n", enum_n, "vertex count (internal generator, n <= 9)")->required();
    cmd_enum->add_flag("--count-only", enum_count, "print only the class count");
    cmd_enum->add_flag("--big", enum_big, "allow the long n=9 run");

    // census
    auto* cmd_cen = app.add_subcommand("census", "full (reg, deg h) census on n vertices");
    int cen_n = 0;
    bool cen_resume = false, cen_big = false;
    std::string cen_input, cen_out;
    cmd_cen->add_option("--n", cen_n, "vertex count")->required();
    cmd_cen->add_option("--input", cen_input, "external graph6 stream (file or '-')");
    cmd_cen->add_option("--out", cen_out, "census CSV path (default: cache dir)");
    cmd_cen->add_flag("--resume", cen_resume, "checkpoint to REGDEG_CACHE_DIR and resume");
    cmd_cen->add_flag("--big", cen_big, "allow the long n=9 internal run");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "check a lemma/theorem, nonzero exit on failure");
    std::string theorem, ver_range;
    int ver_samples = 0, ver_nmax = 0;
    unsigned ver_seed = 20240811;
    bool ver_json = false;
    cmd_ver->add_option("theorem", theorem,
                        "lemma2.1 | lemma2.2 | lemma2.3 | thm3.6 | thm4.3 | thm5.1 | "
                        "thm5.2 | thm5.4")
        ->required();
    cmd_ver->add_option("--n", ver_range, "n or a..b range (census-based checks)");
    cmd_ver->add_option("--samples", ver_samples, "sample count for randomized checks");
    cmd_ver->add_option("--n-max", ver_nmax, "order cap for randomized checks");
    cmd_ver->add_option("--seed", ver_seed, "RNG seed");
    cmd_ver->add_flag("--json", ver_json, "machine-readable report");

    // count
    auto* cmd_cnt = app.add_subcommand("count", "closed-form |CW_RD(n)|");
    std::string cnt_range;
    bool cnt_probe = false;
    cmd_cnt->add_option("--n", cnt_range, "n or a..b range")->required();
    cmd_cnt->add_flag("--probe", cnt_probe, "asymptotic ratio table");

    // plot-data
    auto* cmd_plot = app.add_subcommand("plot-data", "scatter CSV from a census");
    int plot_n = 0;
    std::string plot_census;
    cmd_plot->add_option("--n", plot_n, "vertex count")->required();
    cmd_plot->add_option("--census", plot_census, "census CSV (default: cache dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_inv) {
            std::vector<Graph> graphs;
            if (!inv_edges.empty()) {
                std::ifstream in(inv_edges);
                if (!in) throw std::runtime_error("cannot open " + inv_edges);
                graphs.push_back(parse_edge_list(in));
            } else {
                for (const auto& numbered : read_graph6_source(inv_input))
                    graphs.push_back(decode_at(numbered));
            }
            if (inv_pretty) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& g : graphs) arr.push_back(invariant_record(g));
                std::cout << arr.dump(2) << '\n';
            } else {
                for (const auto& g : graphs) std::cout << invariant_record(g).dump() << '\n';
            }
            return 0;
        }

        if (*cmd_con) {
            auto arg = [&](std::size_t i) {
                if (con_args.size() <= i)
                    throw std::invalid_argument("construct " + family + ": missing argument");
                return con_args[i];
            };
            Graph g;
            if (family == "dr") g = build_Dr(arg(0));
            else if (family == "ribbon") g = build_ribbon();
            else if (family == "star") g = build_star(arg(0));
            else if (family == "startriangle") g = build_star_triangle(arg(0));
            else if (family == "kab") g = build_complete_bipartite(arg(0), arg(1));
            else if (family == "gabc") g = build_G_abc({arg(0), arg(1), arg(2)});
            else if (family == "realize") g = realize_rd(arg(0), arg(1));
            else if (family == "realize-cw") g = realize_cw(arg(0), arg(1), arg(2));
            else if (family == "cw") {
                if (con_spec.empty()) throw std::invalid_argument("construct cw: --spec required");
                g = build_cw(parse_cw_spec(con_spec));
            } else if (family == "pad") {
                g = pad_to_n(read_single_graph(con_input, con_edges), arg(0));
            } else {
                throw std::invalid_argument("unknown family: " + family);
            }
            print_graph(g, con_format);
            return 0;
        }

        if (*cmd_dec) {
            Graph g = read_single_graph(dec_input, dec_edges);
            std::cout << decomposition_record(decompose_cw(g)).dump() << '\n';
            return 0;
        }

        if (*cmd_enum) {
            if (enum_n >= 9 && !enum_big)
                throw std::invalid_argument("enumerate --n 9 takes a while; pass --big to confirm");
            auto classes = enumerate_connected(enum_n, threads);
            if (enum_count) {
                std::cout << classes.size() << '\n';
            } else {
                for (const auto& g6 : classes) std::cout << g6 << '\n';
            }
            return 0;
        }

        if (*cmd_cen) {
            std::vector<std::string> graphs;
            if (!cen_input.empty()) {
                if (cen_n > kMaxHochsterVertices)
                    throw std::invalid_argument("census: invariants require n <= 12");
                for (auto& [line, lineno] : read_graph6_source(cen_input))
                    graphs.push_back(std::move(line));
            } else {
                if (cen_n >= 9 && !cen_big)
                    throw std::invalid_argument(
                        "census --n 9 runs for a long time; pass --big to confirm "
                        "(combine with --resume for checkpointing)");
                graphs = enumerate_connected(cen_n, threads);
            }
            CensusPaths paths = census_paths(cen_n, cen_out);
            CensusOptions opt;
            opt.threads = threads;
            if (cen_resume) opt.checkpoint_path = paths.checkpoint;
            opt.progress = [&](long long done, long long total) {
                if (done % (1 << 15) == 0 || done == total)
                    std::cerr << "census n=" << cen_n << ": " << done << "/" << total << "\r";
            };
            RdCensus census = compute_census(cen_n, graphs, opt);
            std::cerr << '\n';
            std::ofstream points_out(paths.points), cw_out(paths.cw);
            if (!points_out || !cw_out)
                throw std::runtime_error("cannot write census files at " + paths.points);
            write_census_csv(census, points_out, cw_out);
            if (cen_resume) std::remove(paths.checkpoint.c_str());
            std::cout << "n=" << cen_n << ": " << census.total_graphs << " graphs, "
                      << census.points.size() << " (r,d) points, " << census.cw_points.size()
                      << " Cameron-Walker points -> " << paths.points << '\n';
            if (!census.violations.empty()) {
                for (const auto& line : census.violations)
                    std::cout << "BOUND VIOLATION " << line << '\n';
                return 1;
            }
            return 0;
        }

        if (*cmd_ver) {
            auto range_or = [&](int lo, int hi) {
                return ver_range.empty() ? std::make_pair(lo, hi) : parse_range(ver_range);
            };
            VerifyReport report;
            if (theorem == "lemma2.1") {
                auto [lo, hi] = range_or(3, 8);
                report = verify_regbounds_range(lo, hi, threads);
            } else if (theorem == "lemma2.2") {
                report = verify_suspension_laws(ver_samples ? ver_samples : 200,
                                                ver_nmax ? ver_nmax : 9, ver_seed);
            } else if (theorem == "lemma2.3") {
                report = verify_union_additivity(ver_samples ? ver_samples : 100,
                                                 ver_nmax ? ver_nmax : 12, ver_seed);
            } else if (theorem == "thm3.6") {
                auto [lo, hi] = range_or(3, 8);
                report = verify_sandwich_range(lo, hi, threads);
            } else if (theorem == "thm4.3") {
                report = verify_cw_formulas(ver_samples ? ver_samples : 500,
                                            ver_nmax ? ver_nmax : 10, ver_seed);
            } else if (theorem == "thm5.1") {
                auto [lo, hi] = range_or(5, 8);
                report = verify_cw_region_range(lo, hi, threads);
            } else if (theorem == "thm5.2") {
                report = verify_pendant_triangles(ver_samples ? ver_samples : 200,
                                                  ver_nmax ? ver_nmax : 10, ver_seed);
            } else if (theorem == "thm5.4") {
                auto [lo, hi] = range_or(5, 500);
                report = verify_count_formula(lo, hi);
            } else {
                throw std::invalid_argument("unknown theorem id: " + theorem);
            }
            return emit_report(theorem, report, ver_json);
        }

        if (*cmd_cnt) {
            auto [lo, hi] = parse_range(cnt_range);
            if (cnt_probe) {
                std::cout << "n,cw_count,ratio,deviation,lower_proxy,upper_proxy,within_3_over_n\n";
                for (const auto& row : asymptotics_probe(hi)) {
                    if (row.n < lo) continue;
                    std::cout << row.n << ',' << row.cw << ',' << row.ratio << ','
                              << row.deviation << ',' << row.lower_proxy << ','
                              << row.upper_proxy << ',' << (row.within_bound ? 1 : 0) << '\n';
                }
            } else {
                for (int n = lo; n <= hi; ++n)
                    std::cout << n << ' ' << count_cw(n) << '\n';
            }
            return 0;
        }

        if (*cmd_plot) {
            std::cout << plot_data_csv(load_census(plot_n, plot_census));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
