#include "regdeg/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "regdeg/rank.hpp"

namespace regdeg {

std::vector<long long> independence_f_vector(const Graph& g) {
    std::vector<long long> f;
    for (std::uint32_t s : independent_sets(g)) {
        int size = std::popcount(s);
        if (static_cast<int>(f.size()) <= size) f.resize(size + 1, 0);
        ++f[size];
    }
    return f;
}

HilbertData hilbert_data(const Graph& g) {
    HilbertData out;
    out.f = independence_f_vector(g);
    out.dim = static_cast<int>(out.f.size()) - 1;
    // h(t) = sum_i f[i] t^i (1-t)^(dim-i)
    std::vector<long long> h(out.dim + 1, 0);
    for (int i = 0; i <= out.dim; ++i) {
        auto term = poly_pow_one_minus_t(out.dim - i);
        for (int k = 0; k < static_cast<int>(term.size()); ++k)
            h[i + k] += out.f[i] * term[k];
    }
    poly_trim(h);
    out.h = std::move(h);
    out.deg_h = static_cast<int>(out.h.size()) - 1;
    return out;
}

namespace {

// Faces of Ind(G[W]) bucketed by size; bucket[s] holds the sorted masks of
// the independent sets of size s+1.
using FaceBuckets = std::vector<std::vector<std::uint32_t>>;

FaceBuckets bucket_faces(const std::vector<std::uint32_t>& indep, VertexSet w) {
    FaceBuckets buckets;
    const auto wmask = static_cast<std::uint32_t>(w);
    for (std::uint32_t s : indep) {
        if (s == 0 || (s & ~wmask)) continue;
        int size = std::popcount(s);
        if (static_cast<int>(buckets.size()) < size) buckets.resize(size);
        buckets[size - 1].push_back(s);
    }
    return buckets;  // already sorted: independent_sets() is ascending
}

int face_index(const std::vector<std::uint32_t>& bucket, std::uint32_t mask) {
    auto it = std::lower_bound(bucket.begin(), bucket.end(), mask);
    return static_cast<int>(it - bucket.begin());
}

// Boundary map from size-(s+1) faces down to size-s faces.
IntMatrix boundary_matrix(const FaceBuckets& b, int s) {
    IntMatrix m(b[s].size(), std::vector<int>(b[s - 1].size(), 0));
    for (std::size_t r = 0; r < b[s].size(); ++r) {
        std::uint32_t face = b[s][r];
        int sign = 1;
        vs_for_each(face, [&](int v) {
            m[r][face_index(b[s - 1], face ^ (std::uint32_t{1} << v))] = sign;
            sign = -sign;
        });
    }
    return m;
}

std::vector<int> homology_from_buckets(const FaceBuckets& b, int w_size, int p) {
    std::vector<int> dims(w_size + 1, 0);
    if (b.empty() || b[0].empty()) {
        dims[0] = 1;  // the irrelevant complex {{}}: H~_{-1} = K
        return dims;
    }
    const int top = static_cast<int>(b.size());  // largest face size
    std::vector<int> rank_at(top + 2, 0);        // rank of d: C_(s-1) -> C_(s-2)
    rank_at[1] = 1;                              // augmentation, some vertex exists
    for (int s = 2; s <= top; ++s) {
        auto m = boundary_matrix(b, s - 1);
        rank_at[s] = p == 0 ? rank_exact(std::move(m)) : rank_mod_p(std::move(m), p);
    }
    dims[0] = 1 - rank_at[1];
    for (int k = 0; k < top; ++k)
        dims[k + 1] = static_cast<int>(b[k].size()) - rank_at[k + 1] - rank_at[k + 2];
    return dims;
}

// Shrink W without changing the homotopy type of Ind(G[W]):
//   - a vertex with no neighbor in W makes the complex a cone (return 0),
//   - if N(v) & W is contained in N(u) & W for u != v, then u folds away.
// Returns false when the complex is contractible.
bool reduce_w(const Graph& g, VertexSet& w) {
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexSet s = w; s; s &= s - 1) {
            int u = __builtin_ctzll(s);
            VertexSet nu = g.adj[u] & w;
            if (nu == 0) return false;  // cone with apex u
            for (VertexSet r = w & ~vs_bit(u); r; r &= r - 1) {
                int v = __builtin_ctzll(r);
                if (((g.adj[v] & w) & ~nu) == 0) {
                    w &= ~vs_bit(u);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return true;
}

}  // namespace

std::vector<int> reduced_homology_dims(const Graph& g, VertexSet w, int p) {
    if (w & ~vs_full(g.n)) throw std::invalid_argument("W outside vertex range");
    const int w_size = __builtin_popcountll(w);
    if (w == 0) return {1};
    VertexSet core = w;
    if (!reduce_w(g, core)) return std::vector<int>(w_size + 1, 0);
    return homology_from_buckets(bucket_faces(independent_sets(g), core), w_size, p);
}

namespace {

// Applies fn(W, dims over Q) for every nonempty W with non-vanishing
// potential (cones are skipped; they contribute nothing).
template <class F>
void hochster_sweep(const Graph& g, F&& fn) {
    if (g.n > kMaxHochsterVertices)
        throw std::length_error("Hochster sweep limited to n <= 12");
    const auto indep = independent_sets(g);
    const std::uint64_t total = std::uint64_t{1} << g.n;
    for (std::uint64_t w = 1; w < total; ++w) {
        VertexSet core = w;
        if (!reduce_w(g, core)) continue;
        int w_size = __builtin_popcountll(w);
        fn(static_cast<VertexSet>(w), homology_from_buckets(bucket_faces(indep, core), w_size, 0));
    }
}

}  // namespace

BettiTable betti_table(const Graph& g) {
    BettiTable table;
    hochster_sweep(g, [&](VertexSet w, const std::vector<int>& dims) {
        const int j = __builtin_popcountll(w);
        for (int k = 0; k + 1 < static_cast<int>(dims.size()); ++k) {
            if (dims[k + 1] == 0) continue;
            table.entries[{j - k - 1, j}] += dims[k + 1];
            table.reg = std::max(table.reg, k + 1);
        }
    });
    return table;
}

int regularity(const Graph& g) {
    int reg = 0;
    hochster_sweep(g, [&](VertexSet, const std::vector<int>& dims) {
        for (int k = static_cast<int>(dims.size()) - 2; k >= reg; --k)
            if (dims[k + 1] != 0) {
                reg = k + 1;
                break;
            }
    });
    return reg;
}

std::pair<int, int> rd_pair(const Graph& g) {
    return {regularity(g), hilbert_data(g).deg_h};
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<long long> poly_pow_one_minus_t(int k) {
    std::vector<long long> out(k + 1);
    for (int i = 0; i <= k; ++i) out[i] = (i % 2 ? -1 : 1) * binomial(k, i);
    return out;
}

void poly_trim(std::vector<long long>& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

}  // namespace regdeg
