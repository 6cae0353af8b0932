#pragma once
// Finitely generated s-ideals and fractional H-modules of product models.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "monoid.hpp"

namespace idealis {

enum class IdealKind { Integral, Fractional };

inline const char* to_string(IdealKind k) { return k == IdealKind::Integral ? "integral" : "fractional"; }

/**
 * X + H for a finite generator set X, kept as the unique minimal antichain.
 *
 * Entries on Z coordinates are zeroed because translating by a unit does not
 * change the module. Generators are sorted lexicographically. The kind is
 * integral exactly when the module lies inside H. An empty generator list is
 * the empty ideal.
 */
class Ideal {
public:
    Ideal() = default;

    static Ideal from(MonoidPtr H, std::vector<GroupVector> gens) {
        Ideal I;
        I.h_ = std::move(H);
        I.gens_ = std::move(gens);
        I.canonicalize();
        return I;
    }
    static Ideal from(const MonoidModel& H, std::vector<GroupVector> gens) { return from(make_monoid(H), std::move(gens)); }
    static Ideal empty(MonoidPtr H) { return from(std::move(H), {}); }
    static Ideal whole(MonoidPtr H) {
        std::size_t d = H->rank();
        return from(std::move(H), {GroupVector::zero(d)});
    }
    static Ideal principal(MonoidPtr H, const GroupVector& g) { return from(std::move(H), {g}); }

    const MonoidModel& monoid() const { return *h_; }
    const MonoidPtr& monoid_ptr() const { return h_; }
    const std::vector<GroupVector>& gens() const { return gens_; }
    IdealKind kind() const { return kind_; }
    bool is_integral() const { return kind_ == IdealKind::Integral; }
    bool is_empty() const { return gens_.empty(); }
    /// Generated by at most one element (the empty ideal counts).
    bool is_principal() const { return gens_.size() <= 1; }
    /// Equal to H itself.
    bool is_whole() const { return gens_.size() == 1 && h_->is_unit(gens_[0]); }

    bool contains(const GroupVector& g) const {
        for (const auto& a : gens_)
            if (h_->contains(g - a)) return true;
        return false;
    }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.gens_ == b.gens_ && (a.h_ == b.h_ || (a.h_ && b.h_ && a.h_->same_monoid(*b.h_)));
    }
    /// Lexicographic order on the generator lists; used for witness minimality.
    friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
        return std::lexicographical_compare_three_way(a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end());
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i].str();
        return s + "}";
    }

private:
    void canonicalize() {
        const CoordMask units = h_->is_product() ? h_->group_mask() : 0;
        for (auto& g : gens_) {
            if (g.rank() != h_->rank()) throw DimensionError("generator " + g.str() + " has wrong rank");
            for (std::size_t i = 0; i < g.rank(); ++i)
                if (units & (CoordMask{1} << i)) g[i] = 0;
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        std::vector<GroupVector> keep;
        keep.reserve(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens_.size() && !redundant; ++j)
                if (i != j && h_->contains(gens_[i] - gens_[j]) && (j < i || !h_->contains(gens_[j] - gens_[i])))
                    redundant = true;
            if (!redundant) keep.push_back(gens_[i]);
        }
        gens_ = std::move(keep);
        kind_ = IdealKind::Integral;
        for (const auto& g : gens_)
            if (!h_->contains(g)) kind_ = IdealKind::Fractional;
    }

    MonoidPtr h_;
    std::vector<GroupVector> gens_;
    IdealKind kind_ = IdealKind::Integral;
};

namespace detail {

inline void require_product(const MonoidModel& H, const char* what) {
    if (!H.is_product()) throw UncertifiedError(std::string(what) + " is not certified for the affine kind");
}

inline bool member_1d(const Coordinate& S, const std::vector<i64>& gens, i64 v) {
    for (i64 a : gens)
        if (S.contains(v - a)) return true;
    return false;
}

/// Minimal generators of the intersection of two one-dimensional modules
/// over the same numerical semigroup (or N).
inline std::vector<i64> intersect_1d(const Coordinate& S, const std::vector<i64>& A, const std::vector<i64>& B) {
    if (A.empty() || B.empty()) return {};
    const i64 lo = std::max(A.front(), B.front());
    if (S.kind() == CoordKind::Free) return {lo};
    // Everything >= lo + conductor lies in both modules, so minimal
    // generators are below lo + conductor + multiplicity.
    const i64 hi = checked::add(checked::add(lo, S.conductor()), S.multiplicity());
    std::vector<i64> members;
    for (i64 v = lo; v < hi; ++v)
        if (member_1d(S, A, v) && member_1d(S, B, v)) members.push_back(v);
    std::vector<i64> out;
    for (i64 v : members) {
        bool minimal = true;
        for (i64 s : S.generators())
            if (std::binary_search(members.begin(), members.end(), v - s)) { minimal = false; break; }
        if (minimal) out.push_back(v);
    }
    return out;
}

/// Per-coordinate meet of two compatible models: Z survives only where both are Z.
inline MonoidPtr meet_models(const MonoidPtr& a, const MonoidPtr& b) {
    if (a == b || a->same_monoid(*b)) return a;
    if (a->rank() != b->rank()) throw DimensionError("models of different rank");
    std::vector<Coordinate> cs;
    bool a_ok = true, b_ok = true;
    for (std::size_t i = 0; i < a->rank(); ++i) {
        const auto& x = a->coord(i);
        const auto& y = b->coord(i);
        if (x == y) {
            cs.push_back(x);
        } else if (x.is_group()) {
            cs.push_back(y);
            a_ok = false;
        } else if (y.is_group()) {
            cs.push_back(x);
            b_ok = false;
        } else {
            throw std::invalid_argument("incompatible coordinate " + std::to_string(i) + " in intersection");
        }
    }
    if (a_ok) return a;
    if (b_ok) return b;
    return make_monoid(MonoidModel(a->name(), cs));
}

/// Generators of (a + A) n (b + B) for single cells, as per-coordinate lists.
inline std::vector<std::vector<i64>> cell_meet(const MonoidModel& A, const GroupVector& a, const MonoidModel& B,
                                               const GroupVector& b) {
    std::vector<std::vector<i64>> out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const auto& x = A.coord(i);
        const auto& y = B.coord(i);
        if (x.is_group() && y.is_group()) out[i] = {0};
        else if (x.is_group()) out[i] = {b[i]};
        else if (y.is_group()) out[i] = {a[i]};
        else out[i] = intersect_1d(x, {a[i]}, {b[i]});
    }
    return out;
}

/// Cartesian product of per-coordinate lists appended to `out`.
inline void expand_product(const std::vector<std::vector<i64>>& lists, std::vector<GroupVector>& out) {
    const std::size_t d = lists.size();
    for (const auto& l : lists)
        if (l.empty()) return;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        GroupVector g(d);
        for (std::size_t i = 0; i < d; ++i) g[i] = lists[i][idx[i]];
        out.push_back(g);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++idx[i] < lists[i].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
    }
}

}  // namespace detail

inline Ideal ideal_from(const std::vector<GroupVector>& gens, MonoidPtr H) { return Ideal::from(std::move(H), gens); }

inline void require_same_monoid(const Ideal& I, const Ideal& J) {
    if (!(I.monoid_ptr() == J.monoid_ptr() || I.monoid().same_monoid(J.monoid())))
        throw std::invalid_argument("ideals live over different monoids");
}

/// Minkowski sum I + J (the set product IJ before any closure).
inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_monoid(I, J);
    std::vector<GroupVector> g;
    g.reserve(I.gens().size() * J.gens().size());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) g.push_back(a + b);
    return Ideal::from(I.monoid_ptr(), std::move(g));
}

/// k-fold sum of I with itself; k = 0 gives H.
inline Ideal ideal_power(const Ideal& I, int k) {
    Ideal r = Ideal::whole(I.monoid_ptr());
    for (int i = 0; i < k; ++i) r = ideal_sum(r, I);
    return r;
}

inline Ideal translate(const Ideal& I, const GroupVector& c) {
    std::vector<GroupVector> g;
    for (const auto& a : I.gens()) g.push_back(a + c);
    return Ideal::from(I.monoid_ptr(), std::move(g));
}

/// Union of two modules (the s-ideal generated by I u J).
inline Ideal ideal_union(const Ideal& I, const Ideal& J) {
    require_same_monoid(I, J);
    std::vector<GroupVector> g = I.gens();
    g.insert(g.end(), J.gens().begin(), J.gens().end());
    return Ideal::from(I.monoid_ptr(), std::move(g));
}

inline bool ideal_subset(const Ideal& I, const Ideal& J) {
    for (const auto& a : I.gens())
        if (!J.contains(a)) return false;
    return true;
}

inline bool ideal_eq(const Ideal& I, const Ideal& J) { return ideal_subset(I, J) && ideal_subset(J, I); }

/// The same generators read as an ideal of another (typically localized) model.
inline Ideal extend(const Ideal& I, MonoidPtr target) { return Ideal::from(std::move(target), I.gens()); }

/**
 * I n J, exact for product models.
 *
 * Both sides are unions of cells a + H; each pair of cells meets in a product
 * of one-dimensional modules whose generators come from a scan up to the
 * conductor. The ideals may live over a model and one of its localizations;
 * the result lives over the coordinatewise meet.
 */
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    detail::require_product(I.monoid(), "intersection");
    detail::require_product(J.monoid(), "intersection");
    MonoidPtr M = detail::meet_models(I.monoid_ptr(), J.monoid_ptr());
    std::vector<GroupVector> g;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) detail::expand_product(detail::cell_meet(I.monoid(), a, J.monoid(), b), g);
    return Ideal::from(M, std::move(g));
}

/// X^{-1} = {z in G : z + X in H}, the intersection of the translates H - a.
inline Ideal inverse(const Ideal& X) {
    detail::require_product(X.monoid(), "inverse");
    if (X.is_empty()) throw std::invalid_argument("inverse of the empty ideal");
    const MonoidModel& H = X.monoid();
    std::vector<std::vector<i64>> lists(H.rank());
    for (std::size_t i = 0; i < H.rank(); ++i) {
        const auto& S = H.coord(i);
        if (S.is_group()) {
            lists[i] = {0};
            continue;
        }
        std::vector<i64> shifts;
        for (const auto& a : X.gens()) shifts.push_back(checked::sub(0, a[i]));
        std::sort(shifts.begin(), shifts.end());
        shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
        std::vector<i64> acc{shifts.front()};
        for (std::size_t j = 1; j < shifts.size(); ++j) acc = detail::intersect_1d(S, acc, {shifts[j]});
        lists[i] = std::move(acc);
    }
    std::vector<GroupVector> g;
    detail::expand_product(lists, g);
    return Ideal::from(X.monoid_ptr(), std::move(g));
}

/// Indices of non-Z coordinates where x is nonzero.
inline CoordMask support(const MonoidModel& H, const GroupVector& x) {
    CoordMask m = 0;
    for (std::size_t i = 0; i < x.rank(); ++i)
        if (!H.coord(i).is_group() && x[i] != 0) m |= CoordMask{1} << i;
    return m;
}

/// {x in H : supp(x) contains T}; T = 0 gives H.
inline Ideal support_ideal(const MonoidPtr& H, CoordMask T) {
    std::vector<std::vector<i64>> lists(H->rank());
    for (std::size_t i = 0; i < H->rank(); ++i)
        lists[i] = (T & (CoordMask{1} << i)) ? H->coord(i).generators() : std::vector<i64>{0};
    std::vector<GroupVector> g;
    detail::expand_product(lists, g);
    return Ideal::from(H, std::move(g));
}

/**
 * sqrt(I) = {x : n*x in I for some n >= 1}.
 *
 * For product models x is in the radical iff x lies in H and its support
 * contains the support of some generator: large multiples of a coordinate
 * outrun any fixed shift because each factor has finitely many gaps.
 */
inline Ideal radical(const Ideal& I) {
    detail::require_product(I.monoid(), "radical");
    if (!I.is_integral()) throw std::invalid_argument("radical of a fractional module");
    std::vector<GroupVector> g;
    for (const auto& a : I.gens()) {
        Ideal R = support_ideal(I.monoid_ptr(), support(I.monoid(), a));
        g.insert(g.end(), R.gens().begin(), R.gens().end());
    }
    return Ideal::from(I.monoid_ptr(), std::move(g));
}

inline bool is_radical(const Ideal& I) { return radical(I) == I; }

}  // namespace idealis
