#pragma once
// Prime s-ideals of product models, read off from coordinate faces.

#include <algorithm>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace idealis {

/**
 * A nonempty prime s-ideal P.
 *
 * `face` marks the coordinates of the divisor-closed complement H \ P; Z
 * coordinates always belong to it. P itself is {x in H : supp(x) not in face}.
 */
struct PrimeIdeal {
    CoordMask face = 0;
    Ideal ideal;
    int height = 0;

    std::vector<std::size_t> face_indices(std::size_t rank) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < rank; ++i)
            if (face & (CoordMask{1} << i)) out.push_back(i);
        return out;
    }
    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.face == b.face && a.ideal == b.ideal; }
};

/// Three-valued answer for predicates that may not apply.
enum class Verdict { False, True, NotApplicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::False: return "false";
        case Verdict::True: return "true";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

/// All nonempty primes of a product model, ordered by height then generators.
class Spectrum {
public:
    explicit Spectrum(MonoidPtr H) : h_(std::move(H)) {
        detail::require_product(*h_, "spectrum");
        const CoordMask semi = h_->semigroup_mask();
        const CoordMask grp = h_->group_mask();
        // Proper subsets of the semigroup coordinates give the faces.
        for (CoordMask s = semi;; s = (s - 1) & semi) {
            if (s != semi) {
                PrimeIdeal p;
                p.face = s | grp;
                std::vector<GroupVector> g;
                for (std::size_t i = 0; i < h_->rank(); ++i) {
                    if (!(semi & ~s & (CoordMask{1} << i))) continue;
                    for (i64 x : h_->coord(i).generators()) g.push_back(GroupVector::unit(h_->rank(), i, x));
                }
                p.ideal = Ideal::from(h_, std::move(g));
                primes_.push_back(std::move(p));
            }
            if (s == 0) break;
        }
        // Heights by longest chain in the inclusion poset.
        std::sort(primes_.begin(), primes_.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
            return __builtin_popcount(a.face) > __builtin_popcount(b.face);
        });
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            int h = 1;
            for (std::size_t j = 0; j < i; ++j)
                if (primes_[j].ideal != primes_[i].ideal && ideal_subset(primes_[j].ideal, primes_[i].ideal))
                    h = std::max(h, primes_[j].height + 1);
            primes_[i].height = h;
        }
        std::sort(primes_.begin(), primes_.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
            if (a.height != b.height) return a.height < b.height;
            return a.ideal < b.ideal;
        });
    }

    const MonoidPtr& monoid_ptr() const { return h_; }
    const std::vector<PrimeIdeal>& primes() const { return primes_; }

    /// The height-one primes.
    std::vector<PrimeIdeal> height_one() const {
        std::vector<PrimeIdeal> out;
        for (const auto& p : primes_)
            if (p.height == 1) out.push_back(p);
        return out;
    }

    /// Minimal primes containing a nonempty integral ideal.
    std::vector<PrimeIdeal> minimal_primes_over(const Ideal& I) const {
        std::vector<PrimeIdeal> above;
        for (const auto& p : primes_)
            if (ideal_subset(I, p.ideal)) above.push_back(p);
        std::vector<PrimeIdeal> out;
        for (const auto& p : above) {
            bool minimal = std::none_of(above.begin(), above.end(), [&](const PrimeIdeal& q) {
                return q.ideal != p.ideal && ideal_subset(q.ideal, p.ideal);
            });
            if (minimal) out.push_back(p);
        }
        return out;
    }

    /// The maximal ideal H \ H^x (absent when H = G).
    const PrimeIdeal* maximal() const { return primes_.empty() ? nullptr : &primes_.back(); }

    int dimension() const { return primes_.empty() ? 0 : primes_.back().height; }

    const PrimeIdeal* find(const Ideal& I) const {
        for (const auto& p : primes_)
            if (p.ideal == I) return &p;
        return nullptr;
    }

private:
    MonoidPtr h_;
    std::vector<PrimeIdeal> primes_;
};

/// H_P: the face coordinates become Z.
inline MonoidPtr localize(const MonoidModel& H, const PrimeIdeal& P) {
    MonoidModel m = H.localize_face(P.face);
    m.rename(H.name() + "_P");
    return make_monoid(std::move(m));
}

/// Primality of an integral ideal checked on all pairs from the radius box.
inline bool is_prime_on_box(const Ideal& P, i64 radius) {
    if (P.is_empty() || P.is_whole()) return false;
    auto box = P.monoid().enumerate(radius);
    for (const auto& x : box) {
        if (P.contains(x)) continue;
        for (const auto& y : box)
            if (!P.contains(y) && P.contains(x + y)) return false;
    }
    return true;
}

/**
 * Discrete valuation monoid test.
 *
 * H != G, H local with principal maximal ideal of height one, cross-checked
 * by requiring every ideal generated by up to two box elements to be
 * principal.
 */
inline Verdict is_dvm(const MonoidPtr& H, i64 radius = 4) {
    detail::require_product(*H, "is_dvm");
    if (H->is_group()) return Verdict::NotApplicable;
    Spectrum spec(H);
    const PrimeIdeal* m = spec.maximal();
    bool structural = m && m->ideal.is_principal() && m->height == 1;
    if (!structural) return Verdict::False;
    auto box = H->enumerate(radius);
    for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = i + 1; j < box.size(); ++j)
            if (!Ideal::from(H, {box[i], box[j]}).is_principal())
                throw std::logic_error("is_dvm cross-check failed on " + H->describe());
    return Verdict::True;
}

}  // namespace idealis
