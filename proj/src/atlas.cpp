#include "regdeg/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "regdeg/canonical.hpp"
#include "regdeg/constructions.hpp"
#include "regdeg/cw.hpp"
#include "regdeg/graph6.hpp"
#include "regdeg/invariants.hpp"

namespace regdeg {

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <class F>
void parallel_for(long long begin, long long end, int threads, F&& body) {
    threads = std::min<long long>(resolve_threads(threads), std::max<long long>(1, end - begin));
    if (threads <= 1) {
        for (long long i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<long long> next{begin};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= end) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    next.store(end);
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<std::string> enumerate_connected(int n, int threads) {
    if (n < 1 || n > 9)
        throw std::length_error("enumerate_connected: internal generator covers 1 <= n <= 9");
    std::vector<std::string> level{graph6_encode(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        // Every connected graph on k vertices arises from a connected graph
        // on k-1 vertices (delete a non-cut vertex) plus one vertex with a
        // nonempty neighborhood.
        const std::uint64_t masks = (std::uint64_t{1} << (k - 1)) - 1;
        const int nthreads = resolve_threads(threads);
        std::vector<std::unordered_set<std::string>> found(nthreads);
        std::atomic<long long> cursor{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (;;) {
                    long long i = cursor.fetch_add(1);
                    if (i >= static_cast<long long>(level.size())) return;
                    Graph h = graph6_decode(level[i]);
                    for (std::uint64_t mask = 1; mask <= masks; ++mask) {
                        Graph g(k);
                        for (int v = 0; v < h.n; ++v) g.adj[v] = h.adj[v];
                        vs_for_each(mask, [&](int v) { g.add_edge(v, k - 1); });
                        found[t].insert(canonical_form(g));
                    }
                }
            });
        for (auto& th : pool) th.join();
        std::unordered_set<std::string> merged;
        for (auto& part : found) merged.merge(part);
        level.assign(merged.begin(), merged.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

std::set<std::pair<int, int>> RdCensus::point_set() const {
    std::set<std::pair<int, int>> out;
    for (const auto& [key, value] : points) out.insert(key);
    return out;
}

std::set<std::pair<int, int>> RdCensus::cw_point_set() const {
    std::set<std::pair<int, int>> out;
    for (const auto& [key, value] : cw_points) out.insert(key);
    return out;
}

namespace {

struct GraphResult {
    int r = 0, d = 0, im = 0, m = 0;
    bool cw = false;
};

GraphResult census_entry(const std::string& g6, int n) {
    Graph g = graph6_decode(g6);
    if (g.n != n) throw std::runtime_error("census: order mismatch for '" + g6 + "'");
    if (!is_connected(g)) throw std::runtime_error("census: disconnected graph '" + g6 + "'");
    GraphResult res;
    auto [r, d] = rd_pair(g);
    res.r = r;
    res.d = d;
    res.im = induced_matching_number(g);
    res.m = matching_number(g);
    res.cw = g.edge_count() > 0 && res.im == res.m && !is_star(g) && !is_star_triangle(g);
    return res;
}

void fold_result(RdCensus& census, long long index, const std::string& g6,
                 const GraphResult& res) {
    auto add = [&](std::map<std::pair<int, int>, RdPoint>& map) {
        auto [it, fresh] = map.try_emplace({res.r, res.d});
        if (fresh) {
            it->second = {res.r, res.d, 1, g6, index};
        } else {
            ++it->second.multiplicity;
        }
    };
    add(census.points);
    if (res.cw) add(census.cw_points);
    const int n = census.n;
    if (!(res.im <= res.r && res.r <= res.m && res.m <= n / 2 && res.r + res.d <= n)) {
        std::ostringstream line;
        line << g6 << ": im=" << res.im << " reg=" << res.r << " m=" << res.m
             << " deg_h=" << res.d << " n=" << n;
        census.violations.push_back(line.str());
    }
}

using nlohmann::json;

json point_map_to_json(const std::map<std::pair<int, int>, RdPoint>& map) {
    json out = json::array();
    for (const auto& [key, pt] : map)
        out.push_back({pt.r, pt.d, pt.multiplicity, pt.witness_index, pt.witness});
    return out;
}

void point_map_from_json(const json& in, std::map<std::pair<int, int>, RdPoint>& map) {
    for (const auto& row : in) {
        RdPoint pt{row[0], row[1], row[2], row[4], row[3]};
        map[{pt.r, pt.d}] = pt;
    }
}

bool load_checkpoint(const std::string& path, RdCensus& census, long long& next_index) {
    std::ifstream in(path);
    if (!in) return false;
    json ckpt;
    try {
        in >> ckpt;
        if (ckpt.at("n") != census.n || ckpt.at("total") != census.total_graphs) return false;
        next_index = ckpt.at("next");
        point_map_from_json(ckpt.at("points"), census.points);
        point_map_from_json(ckpt.at("cw_points"), census.cw_points);
        census.violations = ckpt.at("violations").get<std::vector<std::string>>();
    } catch (const json::exception&) {
        return false;
    }
    return true;
}

void save_checkpoint(const std::string& path, const RdCensus& census, long long next_index) {
    json ckpt{{"n", census.n},
              {"total", census.total_graphs},
              {"next", next_index},
              {"points", point_map_to_json(census.points)},
              {"cw_points", point_map_to_json(census.cw_points)},
              {"violations", census.violations}};
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << ckpt.dump();
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move checkpoint into place: " + path);
}

}  // namespace

RdCensus compute_census(int n, const std::vector<std::string>& graphs6,
                        const CensusOptions& opt) {
    RdCensus census;
    census.n = n;
    census.total_graphs = static_cast<long long>(graphs6.size());
    long long done = 0;
    if (!opt.checkpoint_path.empty()) load_checkpoint(opt.checkpoint_path, census, done);

    const long long total = census.total_graphs;
    std::vector<GraphResult> block_results;
    while (done < total) {
        const long long block_end = std::min(total, done + std::max<long long>(1, opt.block));
        block_results.assign(block_end - done, {});
        parallel_for(done, block_end, opt.threads, [&](long long i) {
            block_results[i - done] = census_entry(graphs6[i], n);
        });
        for (long long i = done; i < block_end; ++i)
            fold_result(census, i, graphs6[i], block_results[i - done]);
        done = block_end;
        if (!opt.checkpoint_path.empty()) save_checkpoint(opt.checkpoint_path, census, done);
        if (opt.progress) opt.progress(done, total);
    }
    return census;
}

std::set<std::pair<int, int>> lattice_A(int n) {
    if (n < 3) throw std::invalid_argument("lattice_A: n >= 3");
    std::set<std::pair<int, int>> out;
    for (int r = 1; r < (n - 1) / 2; ++r)
        for (int d = 1; d <= n - r; ++d)
            if (r - d <= 1) out.insert({r, d});
    return out;
}

std::set<std::pair<int, int>> lattice_B(int n) {
    if (n < 3) throw std::invalid_argument("lattice_B: n >= 3");
    std::set<std::pair<int, int>> out;
    for (int r = 1; r <= (n - 1) / 2; ++r)
        for (int d = 1; d <= n - r; ++d) out.insert({r, d});
    return out;
}

std::set<std::pair<int, int>> lattice_CW(int n) {
    if (n < 5) throw std::invalid_argument("lattice_CW: n >= 5");
    std::set<std::pair<int, int>> out;
    for (int r = 2; r <= (n - 1) / 2; ++r)
        for (int d = std::max(r, -2 * r + n + 1); d <= n - r; ++d) out.insert({r, d});
    return out;
}

long long count_cw(int n) {
    if (n < 5) throw std::invalid_argument("count_cw: n >= 5");
    const long long g = (n + 1) / 3;
    const int f3 = (n + 1) % 3;  // (n+1)/3 - g, times 3
    const bool even = g % 2 == 0;
    if (f3 == 0) return even ? 3 * g * g / 4 - 1 : 3 * (g * g - 1) / 4 - 1;
    if (f3 == 1) return even ? g * (3 * g + 2) / 4 - 2 : (3 * g - 1) * (g + 1) / 4 - 1;
    return even ? g * (3 * g + 4) / 4 - 1 : (3 * g * g + 4 * g - 3) / 4 - 1;
}

namespace {

std::string pair_list(const std::set<std::pair<int, int>>& s) {
    std::ostringstream out;
    for (auto [r, d] : s) out << " (" << r << "," << d << ")";
    return out.str();
}

std::set<std::pair<int, int>> set_minus(const std::set<std::pair<int, int>>& a,
                                        const std::set<std::pair<int, int>>& b) {
    std::set<std::pair<int, int>> out;
    for (auto& x : a)
        if (!b.count(x)) out.insert(x);
    return out;
}

}  // namespace

VerifyReport verify_sandwich(const RdCensus& census) {
    VerifyReport report;
    const auto realized = census.point_set();
    const auto a = lattice_A(census.n), b = lattice_B(census.n);
    const auto missing = set_minus(a, realized);
    const auto outside = set_minus(realized, b);
    if (!missing.empty())
        report.fail("A(n) points not realized:" + pair_list(missing));
    if (!outside.empty())
        report.fail("realized points outside B(n):" + pair_list(outside));
    report.note("n=" + std::to_string(census.n) + ": |A|=" + std::to_string(a.size()) +
                " |RD|=" + std::to_string(realized.size()) + " |B|=" + std::to_string(b.size()) +
                ", band realized:" + pair_list(set_minus(realized, a)));
    return report;
}

VerifyReport verify_cw_characterization(const RdCensus& census) {
    VerifyReport report;
    const auto realized = census.cw_point_set();
    const auto region = lattice_CW(census.n);
    const auto missing = set_minus(region, realized);
    const auto extra = set_minus(realized, region);
    if (!missing.empty()) report.fail("region points missing from CW census:" + pair_list(missing));
    if (!extra.empty()) report.fail("CW census points outside the region:" + pair_list(extra));
    if (census.n <= kMaxHochsterVertices) {
        for (auto [r, d] : region) {
            Graph witness = realize_cw(r, d, census.n);
            auto got = rd_pair(witness);
            if (got != std::make_pair(r, d))
                report.fail("realize_cw(" + std::to_string(r) + "," + std::to_string(d) +
                            ") has pair (" + std::to_string(got.first) + "," +
                            std::to_string(got.second) + ")");
            else if (!is_cameron_walker(witness))
                report.fail("realize_cw(" + std::to_string(r) + "," + std::to_string(d) +
                            ") is not Cameron-Walker");
        }
    }
    report.note("n=" + std::to_string(census.n) + ": CW census has " +
                std::to_string(realized.size()) + " points, region has " +
                std::to_string(region.size()));
    return report;
}

VerifyReport convexity_probe(const RdCensus& census) {
    VerifyReport report;
    const auto realized = census.point_set();
    std::map<int, std::set<int>> by_r, by_d;
    for (auto [r, d] : realized) {
        by_r[r].insert(d);
        by_d[d].insert(r);
    }
    auto contiguous = [](const std::set<int>& s) {
        return s.empty() || *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
    };
    for (const auto& [r, ds] : by_r)
        if (!contiguous(ds)) report.fail("row r=" + std::to_string(r) + " has gaps");
    for (const auto& [d, rs] : by_d)
        if (!contiguous(rs)) report.fail("column d=" + std::to_string(d) + " has gaps");
    report.note(std::string("RD(") + std::to_string(census.n) + ") is " +
                (report.pass ? "convex" : "NOT convex") + " (row/column intervals)");
    return report;
}

std::vector<AsymptoticsRow> asymptotics_probe(int n_max) {
    if (n_max < 10) throw std::invalid_argument("asymptotics_probe: n_max >= 10");
    std::vector<AsymptoticsRow> rows;
    for (int n = 5; n <= n_max; ++n) {
        AsymptoticsRow row;
        row.n = n;
        row.cw = count_cw(n);
        row.ratio = static_cast<double>(row.cw) / (static_cast<double>(n) * n);
        row.deviation = std::abs(row.ratio - 1.0 / 12.0);
        // bounding quantities from the ratio argument: |CW|/|RD| proxies
        const double cw_lower = (n - 4.0) * (n - 4.0) / 12.0 - 1.75;
        const double cw_upper = (n + 6.0) * (n + 6.0) / 12.0;
        const double rd_upper =
            static_cast<double>(binomial(n, 2) - binomial((n + 2) / 2, 2));
        const double half = static_cast<double>(n / 2);  // floor(n/2), as in the bound
        row.lower_proxy = cw_lower / rd_upper;
        row.upper_proxy = cw_upper / (half * half);
        row.within_bound = row.deviation <= 3.0 / n;
        rows.push_back(row);
    }
    return rows;
}

void write_census_csv(const RdCensus& census, std::ostream& points_out, std::ostream& cw_out) {
    auto dump = [&](std::ostream& out, const std::map<std::pair<int, int>, RdPoint>& map) {
        out << "n,r,d,multiplicity,witness_graph6\n";
        for (const auto& [key, pt] : map)
            out << census.n << ',' << pt.r << ',' << pt.d << ',' << pt.multiplicity << ','
                << pt.witness << '\n';
    };
    dump(points_out, census.points);
    dump(cw_out, census.cw_points);
}

namespace {

void read_points_csv(std::istream& in, RdCensus& census,
                     std::map<std::pair<int, int>, RdPoint>& map) {
    std::string line;
    if (!std::getline(in, line) || line != "n,r,d,multiplicity,witness_graph6")
        throw std::runtime_error("census csv: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        RdPoint pt;
        int n = 0;
        char comma;
        if (!(row >> n >> comma >> pt.r >> comma >> pt.d >> comma >> pt.multiplicity >> comma))
            throw std::runtime_error("census csv: bad row: " + line);
        std::getline(row, pt.witness);
        if (census.n == 0) census.n = n;
        if (n != census.n) throw std::runtime_error("census csv: mixed n");
        map[{pt.r, pt.d}] = pt;
    }
}

}  // namespace

RdCensus read_census_csv(std::istream& points_in, std::istream& cw_in) {
    RdCensus census;
    read_points_csv(points_in, census, census.points);
    read_points_csv(cw_in, census, census.cw_points);
    for (const auto& [key, pt] : census.points) census.total_graphs += pt.multiplicity;
    return census;
}

std::string plot_data_csv(const RdCensus& census) {
    std::ostringstream out;
    out << "r,d,cw\n";
    for (const auto& [key, pt] : census.points)
        out << pt.r << ',' << pt.d << ',' << (census.cw_points.count(key) ? 1 : 0) << '\n';
    return out.str();
}

}  // namespace regdeg
