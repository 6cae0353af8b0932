#pragma once
// The built-in corpus of monoid models.

#include <bitset>
#include <set>
#include <string>
#include <vector>

#include "monoid.hpp"

namespace idealis {

struct CorpusEntry {
    std::string file;  ///< suggested spec file name
    MonoidModel model;
    bool certified = true;
};

/**
 * Minimal generating sets of every numerical semigroup other than N with
 * Frobenius number at most `max_frobenius`, in the order of a depth-first
 * walk of the semigroup tree (children drop one minimal generator above the
 * Frobenius number).
 */
inline std::vector<std::vector<i64>> numerical_semigroups_up_to(i64 max_frobenius) {
    if (max_frobenius < 1) return {};
    const i64 limit = 2 * max_frobenius + 2;  // members beyond this never matter for minimality
    using Set = std::vector<bool>;
    auto minimal_gens = [&](const Set& s) {
        std::vector<i64> g;
        for (i64 x = 1; x <= limit; ++x) {
            if (!s[static_cast<std::size_t>(x)]) continue;
            bool decomposable = false;
            for (i64 a = 1; a <= x / 2 && !decomposable; ++a)
                decomposable = s[static_cast<std::size_t>(a)] && s[static_cast<std::size_t>(x - a)];
            if (!decomposable) g.push_back(x);
        }
        return g;
    };
    std::vector<std::vector<i64>> out;
    auto walk = [&](auto&& self, const Set& s, i64 frob) -> void {
        for (i64 g : minimal_gens(s)) {
            if (g <= frob || g > max_frobenius) continue;
            Set child = s;
            child[static_cast<std::size_t>(g)] = false;
            out.push_back(minimal_gens(child));
            self(self, child, g);
        }
    };
    Set n(static_cast<std::size_t>(limit) + 1, true);
    n[0] = true;
    walk(walk, n, -1);
    return out;
}

inline std::string numerical_file_name(const std::vector<i64>& gens) {
    std::string s = "ns";
    for (i64 g : gens) s += "_" + std::to_string(g);
    return s + ".spec";
}

/// Named models first, then the remaining numerical semigroups with Frobenius number at most 15.
inline std::vector<CorpusEntry> builtin_corpus(i64 max_frobenius = 15) {
    std::vector<CorpusEntry> out;
    auto product = [&](std::string file, std::string name, std::vector<Coordinate> cs) {
        out.push_back({std::move(file), MonoidModel(std::move(name), std::move(cs)), true});
    };
    using C = Coordinate;
    product("n1.spec", "N", {C::free()});
    product("n2.spec", "N2", {C::free(), C::free()});
    product("n3.spec", "N3", {C::free(), C::free(), C::free()});
    std::set<std::vector<i64>> named;
    for (auto g : std::vector<std::vector<i64>>{{2, 3}, {3, 4, 5}, {2, 5}, {3, 5, 7}}) {
        std::string tag, name = "S";
        for (std::size_t i = 0; i < g.size(); ++i) {
            tag += std::to_string(g[i]);
            name += (i ? "_" : "") + std::to_string(g[i]);
        }
        product("gap" + tag + ".spec", name, {C::numerical(g)});
        named.insert(g);
    }
    product("gap23_x_n.spec", "S2_3xN", {C::numerical({2, 3}), C::free()});
    product("gap23_x_gap25.spec", "S2_3xS2_5", {C::numerical({2, 3}), C::numerical({2, 5})});
    product("gap23_x_z.spec", "S2_3xZ", {C::numerical({2, 3}), C::group()});
    product("n_x_z.spec", "NxZ", {C::free(), C::group()});
    auto all = numerical_semigroups_up_to(max_frobenius);
    std::sort(all.begin(), all.end());
    for (const auto& g : all) {
        if (named.count(g)) continue;
        std::string name = "S";
        for (std::size_t i = 0; i < g.size(); ++i) name += (i ? "_" : "") + std::to_string(g[i]);
        product(numerical_file_name(g), name, {C::numerical(g)});
    }
    out.push_back({"affine_cone.spec", MonoidModel::affine("Cone", {{2, 0}, {1, 1}, {0, 2}}), false});
    return out;
}

}  // namespace idealis
