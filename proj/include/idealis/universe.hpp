#pragma once
// Finite, box-bounded families of ideals used wherever a property quantifies
// over "every ideal".

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "systems.hpp"

namespace idealis {

/**
 * Members of H in the search box for radius R.
 *
 * Numerical coordinates reach at least conductor + multiplicity so that every
 * residue class above the conductor has a representative; Z coordinates are
 * pinned to 0 because ideals ignore them.
 */
inline std::vector<GroupVector> element_box(const MonoidModel& H, i64 radius) {
    detail::require_product(H, "element_box");
    const std::size_t d = H.rank();
    std::vector<i64> hi(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& c = H.coord(i);
        if (c.is_group()) continue;
        hi[i] = c.kind() == CoordKind::Numerical ? std::max(radius, c.conductor() + c.multiplicity()) : radius;
    }
    std::vector<GroupVector> out;
    GroupVector g(d);
    while (true) {
        if (H.contains(g)) out.push_back(g);
        std::size_t i = d;
        while (true) {
            if (i == 0) return out;
            --i;
            if (g[i] < hi[i]) {
                ++g[i];
                break;
            }
            g[i] = 0;
        }
    }
}

/// The `cap` members of the element box with smallest coordinate sum (ties broken lexicographically).
inline std::vector<GroupVector> pair_box(const MonoidModel& H, i64 radius, std::size_t cap = 80) {
    auto b = element_box(H, radius);
    if (b.size() <= cap) return b;
    auto weight = [](const GroupVector& x) {
        i64 s = 0;
        for (i64 v : x) s += v;
        return s;
    };
    std::stable_sort(b.begin(), b.end(), [&](const GroupVector& x, const GroupVector& y) { return weight(x) < weight(y); });
    b.resize(cap);
    std::sort(b.begin(), b.end());
    return b;
}

/// Sorted, deduplicated list of ideals.
inline void normalize(std::vector<Ideal>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/**
 * Nonempty closed ideals reachable as closures of one box element or of two
 * pair-box elements, sorted by generator list.
 */
inline std::vector<Ideal> closed_universe(const ClosureOp& op, i64 radius, std::size_t pair_cap = 80) {
    const auto& H = op.monoid_ptr();
    std::vector<Ideal> out;
    for (const auto& x : element_box(*H, radius)) out.push_back(op.close(Ideal::principal(H, x)));
    auto pb = pair_box(*H, radius, pair_cap);
    for (std::size_t i = 0; i < pb.size(); ++i)
        for (std::size_t j = i + 1; j < pb.size(); ++j) out.push_back(op.close(Ideal::from(H, {pb[i], pb[j]})));
    normalize(out);
    return out;
}

/// Principal ideals x + H for x in the element box.
inline std::vector<Ideal> principal_universe(const MonoidPtr& H, i64 radius) {
    std::vector<Ideal> out;
    for (const auto& x : element_box(*H, radius)) out.push_back(Ideal::principal(H, x));
    normalize(out);
    return out;
}

/**
 * Every nonempty radical ideal of a product model.
 *
 * A radical ideal is a union of support ideals, so it is fixed by the
 * up-closed family of supports it contains; the family is determined by its
 * antichain of minimal supports. Returns nullopt beyond four semigroup
 * coordinates, where the antichain count grows too quickly.
 */
inline std::optional<std::vector<Ideal>> radical_family(const MonoidPtr& H) {
    detail::require_product(*H, "radical_family");
    std::vector<CoordMask> supports;
    const CoordMask semi = H->semigroup_mask();
    if (__builtin_popcount(semi) > 4) return std::nullopt;
    for (CoordMask s = semi;; s = (s - 1) & semi) {
        supports.push_back(s);
        if (s == 0) break;
    }
    std::sort(supports.begin(), supports.end());
    std::vector<Ideal> out;
    std::vector<CoordMask> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!chosen.empty()) {
            std::vector<GroupVector> g;
            for (CoordMask s : chosen) {
                Ideal r = support_ideal(H, s);
                g.insert(g.end(), r.gens().begin(), r.gens().end());
            }
            out.push_back(Ideal::from(H, std::move(g)));
        }
        for (std::size_t i = start; i < supports.size(); ++i) {
            bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](CoordMask c) {
                return (c & supports[i]) == c || (c & supports[i]) == supports[i];
            });
            if (comparable) continue;
            chosen.push_back(supports[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    normalize(out);
    return out;
}

}  // namespace idealis
