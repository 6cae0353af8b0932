#pragma once
// Brute-force reference implementations used to cross-check the library.
// Nothing here calls the library's intersection, inverse or closure code.

#include <algorithm>
#include <vector>

#include "idealis/monoid.hpp"

namespace oracle {

using idealis::GroupVector;
using idealis::i64;
using idealis::MonoidModel;

/// x lies in gens + H.
inline bool in_module(const MonoidModel& H, const std::vector<GroupVector>& gens, const GroupVector& x) {
    for (const auto& a : gens)
        if (H.contains(x - a)) return true;
    return false;
}

/// Every lattice point in the box [lo, hi] (inclusive, per coordinate).
inline std::vector<GroupVector> box(const std::vector<i64>& lo, const std::vector<i64>& hi) {
    std::vector<GroupVector> out;
    const std::size_t d = lo.size();
    GroupVector g(d);
    for (std::size_t i = 0; i < d; ++i) g[i] = lo[i];
    while (true) {
        out.push_back(g);
        std::size_t i = d;
        while (true) {
            if (i == 0) return out;
            --i;
            if (g[i] < hi[i]) {
                ++g[i];
                break;
            }
            g[i] = lo[i];
        }
    }
}

inline i64 slack(const MonoidModel& H, std::size_t i) {
    const auto& c = H.coord(i);
    return c.is_group() ? 0 : c.conductor() + c.multiplicity() + 1;
}

/**
 * The members of X^{-1} = {z : z + a in H for all a in X} inside a box large
 * enough to hold every minimal generator. Group coordinates are pinned to 0
 * since the module is invariant there.
 */
inline std::vector<GroupVector> inverse_points(const MonoidModel& H, const std::vector<GroupVector>& X) {
    const std::size_t d = H.rank();
    std::vector<i64> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (H.coord(i).is_group()) continue;
        i64 mx = X.front()[i], mn = X.front()[i];
        for (const auto& a : X) {
            mx = std::max(mx, a[i]);
            mn = std::min(mn, a[i]);
        }
        lo[i] = -mx;
        hi[i] = -mn + slack(H, i);
    }
    std::vector<GroupVector> out;
    for (const auto& z : box(lo, hi)) {
        bool ok = true;
        for (const auto& a : X)
            if (!H.contains(z + a)) { ok = false; break; }
        if (ok) out.push_back(z);
    }
    return out;
}

/// x in (X^{-1})^{-1}, straight from the definition.
inline bool in_double_inverse(const MonoidModel& H, const std::vector<GroupVector>& X, const GroupVector& x) {
    for (const auto& z : inverse_points(H, X))
        if (!H.contains(x + z)) return false;
    return true;
}

/// n*x in I for some 1 <= n <= nmax.
inline bool in_radical(const MonoidModel& H, const std::vector<GroupVector>& I, const GroupVector& x, int nmax = 64) {
    if (!H.contains(x)) return false;
    GroupVector y = x;
    for (int n = 1; n <= nmax; ++n, y += x)
        if (in_module(H, I, y)) return true;
    return false;
}

/// Box used to compare modules pointwise: generators plus conductor slack.
inline std::vector<GroupVector> compare_box(const MonoidModel& H, i64 lo_v, i64 hi_v) {
    std::vector<i64> lo(H.rank(), lo_v), hi(H.rank(), hi_v);
    for (std::size_t i = 0; i < H.rank(); ++i)
        if (H.coord(i).is_group()) lo[i] = hi[i] = 0;
    return box(lo, hi);
}

/// All non-empty subsets with at most `k` members of `pool`.
inline std::vector<std::vector<GroupVector>> small_subsets(const std::vector<GroupVector>& pool, std::size_t k) {
    std::vector<std::vector<GroupVector>> out;
    std::vector<GroupVector> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == k) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace oracle
