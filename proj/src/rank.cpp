#include "regdeg/rank.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <utility>

namespace regdeg {

namespace {

struct OverflowBail {};

using Int128 = __int128;

inline Int128 guard_magnitude(Int128 x) {
    constexpr Int128 limit = Int128(1) << 62;
    if (x > limit || x < -limit) throw OverflowBail{};
    return x;
}

inline mpz_class guard_magnitude(mpz_class x) { return x; }

// One-step Bareiss: every intermediate entry is a minor of the input, and
// the division is exact.
template <class I>
int bareiss_rank(std::vector<std::vector<I>> a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    I prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = guard_magnitude((a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev);
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

template <class I>
std::vector<std::vector<I>> widen(const IntMatrix& m) {
    std::vector<std::vector<I>> a(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        a[r].assign(m[r].begin(), m[r].end());
    return a;
}

}  // namespace

int rank_exact(IntMatrix m) {
    try {
        return bareiss_rank(widen<Int128>(m));
    } catch (const OverflowBail&) {
        return bareiss_rank(widen<mpz_class>(m));
    }
}

int rank_mod_p(IntMatrix m, int p) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    auto normalize = [&](long long x) {
        long long r = x % p;
        return static_cast<int>(r < 0 ? r + p : r);
    };
    for (auto& row : m)
        for (auto& x : row) x = normalize(x);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        // inverse of the pivot by Fermat
        long long inv = 1, base = m[rank][col], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            long long factor = m[r][col] * inv % p;
            for (int c = col; c < cols; ++c)
                m[r][c] = normalize(m[r][c] - factor * m[rank][c]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace regdeg
