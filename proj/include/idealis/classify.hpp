#pragma once
// Named properties of a monoid under an ideal system, and the equivalence
// suites that cross-check them.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "factor.hpp"
#include "universe.hpp"

namespace idealis {

enum class Truth { False, True, Unknown };

inline const char* to_string(Truth t) {
    switch (t) {
        case Truth::False: return "false";
        case Truth::True: return "true";
        case Truth::Unknown: return "unknown-beyond-radius";
    }
    return "?";
}

/// Search bounds. Every field is surfaced by the CLI or recorded in reports.
struct EvalConfig {
    i64 radius = 8;
    std::size_t pair_cap = 80;       ///< pair-box size for the closed-ideal universe
    i64 small_radius = 3;            ///< radius of the family used by quadratic checks
    std::size_t small_cap = 14;      ///< pair-box size of that family
    std::size_t tiny_cap = 8;        ///< pair-box size for the cubic modular-law check
    int torsion_cap = 4;
    std::size_t search_cap = 4096;   ///< states explored by one product search
    int power_cap = 64;
    std::size_t meager_size = 3;
    std::uint64_t seed = 1;
};

/// Outcome of a property on one instance (an ideal, a prime, an element).
struct Check {
    Truth truth = Truth::True;
    std::string why;
};

struct PropertyVerdict {
    std::string property;
    std::string system;
    Truth verdict = Truth::Unknown;
    std::optional<Ideal> witness;
    std::string detail;
    i64 radius = 0;
    /// How the verdict was reached: "structural", "exhaustive" or "box".
    std::string basis;
};

/**
 * Per-monoid evaluation state: one closure operator per system plus the
 * finite families every property ranges over. Not thread-safe; use one
 * context per thread.
 */
class Context {
public:
    explicit Context(MonoidPtr H, EvalConfig cfg = {}) : h_(std::move(H)), cfg_(cfg) {
        detail::require_product(*h_, "classification");
        spec_ = std::make_shared<Spectrum>(h_);
    }

    const MonoidPtr& monoid() const { return h_; }
    const EvalConfig& config() const { return cfg_; }
    const Spectrum& spectrum() const { return *spec_; }
    const ClosureOp& op(const System& sys) { return slot(sys).op; }

    const std::vector<GroupVector>& elements() {
        if (!elements_) elements_ = element_box(*h_, cfg_.radius);
        return *elements_;
    }

    /// x + H for the non-units x of the element box.
    const std::vector<Ideal>& principals() {
        if (!principals_) {
            std::vector<Ideal> v;
            for (const auto& x : elements())
                if (!h_->is_unit(x)) v.push_back(Ideal::principal(h_, x));
            normalize(v);
            principals_ = std::move(v);
        }
        return *principals_;
    }

    /// All nonempty radical ideals, H included.
    const std::vector<Ideal>& radicals() {
        if (!radicals_) {
            auto fam = radical_family(h_);
            if (!fam) throw UncertifiedError("radical enumeration needs at most four semigroup coordinates");
            radicals_ = std::move(*fam);
        }
        return *radicals_;
    }

    /// Proper radical ideals fixed by the closure.
    const std::vector<Ideal>& closed_radicals(const System& sys) {
        Slot& s = slot(sys);
        if (!s.radicals) {
            std::vector<Ideal> v;
            for (const auto& R : radicals())
                if (!R.is_whole() && s.op.is_closed(R)) v.push_back(R);
            s.radicals = std::move(v);
        }
        return *s.radicals;
    }

    /// Closed ideals from the element and pair boxes, closed radicals and closed primes.
    const std::vector<Ideal>& universe(const System& sys) {
        Slot& s = slot(sys);
        if (!s.universe) {
            auto v = closed_universe(s.op, cfg_.radius, cfg_.pair_cap);
            for (const auto& R : radicals()) v.push_back(s.op.close(R));
            for (const auto& P : s.op.closed_primes()) v.push_back(P.ideal);
            normalize(v);
            s.universe = std::move(v);
        }
        return *s.universe;
    }

    /// The smaller family used by checks that are quadratic in the universe.
    const std::vector<Ideal>& small_universe(const System& sys) {
        Slot& s = slot(sys);
        if (!s.small) {
            auto v = closed_universe(s.op, cfg_.small_radius, cfg_.small_cap);
            for (const auto& R : radicals()) v.push_back(s.op.close(R));
            normalize(v);
            s.small = std::move(v);
        }
        return *s.small;
    }

    /// Closures of singletons and pairs from a very small box, for cubic checks.
    const std::vector<Ideal>& tiny_universe(const System& sys) {
        Slot& s = slot(sys);
        if (!s.tiny) {
            std::vector<Ideal> v;
            auto pb = pair_box(*h_, cfg_.small_radius, cfg_.tiny_cap);
            for (std::size_t i = 0; i < pb.size(); ++i) {
                v.push_back(s.op.close(Ideal::principal(h_, pb[i])));
                for (std::size_t j = i + 1; j < pb.size(); ++j) v.push_back(s.op.close(Ideal::from(h_, {pb[i], pb[j]})));
            }
            normalize(v);
            s.tiny = std::move(v);
        }
        return *s.tiny;
    }

    const std::vector<Ideal>& invertibles(const System& sys) {
        Slot& s = slot(sys);
        if (!s.invertibles) {
            std::vector<Ideal> v;
            for (const auto& I : universe(sys))
                if (invertible(sys, I)) v.push_back(I);
            s.invertibles = std::move(v);
        }
        return *s.invertibles;
    }

    bool invertible(const System& sys, const Ideal& I) {
        Slot& s = slot(sys);
        auto it = s.invertible.find(I);
        if (it != s.invertible.end()) return it->second;
        bool v = is_invertible(s.op, I);
        s.invertible.emplace(I, v);
        return v;
    }

    /// (A + B)_r, memoized.
    const Ideal& product(const System& sys, const Ideal& A, const Ideal& B) {
        Slot& s = slot(sys);
        auto key = A < B ? std::make_pair(A, B) : std::make_pair(B, A);
        auto it = s.products.find(key);
        if (it == s.products.end()) it = s.products.emplace(key, s.op.close(ideal_sum(A, B))).first;
        return it->second;
    }

    MonoidPtr localization(const PrimeIdeal& P) {
        auto it = local_.find(P.face);
        if (it == local_.end()) it = local_.emplace(P.face, localize(*h_, P)).first;
        return it->second;
    }

    /**
     * True when the universe provably represents every closed ideal: all
     * semigroup coordinates are N and the system is t, v or a modularization
     * of one, so every closed ideal is principal and the box holds a
     * translate of each support pattern.
     */
    bool exhaustive(const System& sys) const {
        for (const auto& c : h_->coords())
            if (c.kind() == CoordKind::Numerical) return false;
        auto coarse_t = [](const System& x) { return x.kind() == System::Kind::T || x.kind() == System::Kind::V; };
        if (coarse_t(sys)) return true;
        return sys.kind() == System::Kind::Mod && coarse_t(sys.coarse());
    }

    std::map<std::string, PropertyVerdict>& verdict_cache(const System& sys) { return slot(sys).verdicts; }

private:
    struct Slot {
        Slot(const MonoidPtr& H, const System& sys, std::shared_ptr<const Spectrum> sp) : op(H, sys, std::move(sp)) {}
        ClosureOp op;
        std::optional<std::vector<Ideal>> universe, small, tiny, radicals, invertibles;
        std::map<Ideal, bool> invertible;
        std::map<std::pair<Ideal, Ideal>, Ideal> products;
        std::map<std::string, PropertyVerdict> verdicts;
    };

    Slot& slot(const System& sys) {
        const std::string key = sys.name();
        auto it = slots_.find(key);
        if (it == slots_.end()) it = slots_.emplace(key, std::make_unique<Slot>(h_, sys, spec_)).first;
        return *it->second;
    }

    MonoidPtr h_;
    EvalConfig cfg_;
    std::shared_ptr<const Spectrum> spec_;
    std::map<std::string, std::unique_ptr<Slot>> slots_;
    std::map<CoordMask, MonoidPtr> local_;
    std::optional<std::vector<GroupVector>> elements_;
    std::optional<std::vector<Ideal>> principals_, radicals_;
};

namespace detail {

inline Check ok() { return {}; }
inline Check no(std::string why) { return {Truth::False, std::move(why)}; }
inline Check pending(std::string why) { return {Truth::Unknown, std::move(why)}; }
inline Check from_bool(bool b, std::string why_not) { return b ? ok() : no(std::move(why_not)); }

/**
 * Breadth-first search for target = (R_1 + ... + R_n)_r with every R_i drawn
 * from the pool. Intermediate products always contain the target, which
 * bounds the search. With `chain` set, factors must form an ascending chain.
 */
inline Check reaches(Context& ctx, const System& sys, const Ideal& target, const std::vector<Ideal>& pool, bool chain) {
    if (target.is_whole()) return ok();
    // A peeled factorization that reassembles from pool members settles the question at once.
    auto peeled = sp_factor(ctx.op(sys), target);
    if (const auto* fc = std::get_if<FactorChain>(&peeled)) {
        bool in_pool = std::all_of(fc->factors.begin(), fc->factors.end(), [&](const Ideal& f) {
            return std::find(pool.begin(), pool.end(), f) != pool.end();
        });
        if (fc->reassembles && in_pool && (!chain || fc->comparable)) return ok();
    }
    std::vector<Ideal> cands;
    for (const auto& R : pool)
        if (ideal_subset(target, R)) cands.push_back(R);
    std::set<std::pair<Ideal, int>> seen;
    std::deque<std::pair<Ideal, int>> queue;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (cands[i] == target) return ok();
        int tag = chain ? static_cast<int>(i) : -1;
        if (seen.emplace(cands[i], tag).second) queue.emplace_back(cands[i], tag);
    }
    while (!queue.empty()) {
        auto [P, last] = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < cands.size(); ++j) {
            if (chain && !ideal_subset(cands[static_cast<std::size_t>(last)], cands[j])) continue;
            const Ideal& Q = ctx.product(sys, P, cands[j]);
            if (Q == target) return ok();
            if (!ideal_subset(target, Q)) continue;
            int tag = chain ? static_cast<int>(j) : -1;
            if (seen.emplace(Q, tag).second) {
                if (seen.size() > ctx.config().search_cap) return pending("product search exceeded its state cap");
                queue.emplace_back(Q, tag);
            }
        }
    }
    return no("no product of " + std::string(chain ? "comparable " : "") + "radical " + sys.name() + "-ideals equals it");
}

/// I is P-primary for a prime P: I equals the contraction of its localization at sqrt(I).
inline bool is_primary(Context& ctx, const Ideal& I) {
    if (I.is_empty() || I.is_whole()) return false;
    const PrimeIdeal* P = ctx.spectrum().find(radical(I));
    if (!P) return false;
    Ideal back = ideal_intersect(extend(I, ctx.localization(*P)), Ideal::whole(ctx.monoid()));
    return back == I;
}

/// I = (P^k)_r for some k >= 1.
inline Check is_power_of(Context& ctx, const System& sys, const Ideal& I, const Ideal& P) {
    Ideal pk = ctx.op(sys).close(P);
    for (int k = 1; k <= ctx.config().power_cap; ++k) {
        if (pk == I) return ok();
        if (!ideal_subset(I, pk)) return no("not a " + sys.name() + "-power of its radical " + P.str());
        pk = ctx.product(sys, pk, P);
    }
    return pending("power search exceeded its cap");
}

inline Check half_cancellative(Context& ctx, const System& sys, const Ideal& I) {
    for (const auto& J : ctx.small_universe(sys))
        if (!J.is_whole() && ctx.product(sys, I, J) == I) return no("(I + J)_r = I for J = " + J.str());
    return ok();
}

inline Check cancellative(Context& ctx, const System& sys, const Ideal& I) {
    std::map<Ideal, Ideal> seen;
    for (const auto& J : ctx.small_universe(sys)) {
        auto [it, fresh] = seen.emplace(ctx.product(sys, I, J), J);
        if (!fresh) return no("equal products with " + it->second.str() + " and " + J.str());
    }
    return ok();
}

inline Check minimal_primes_height_one(Context& ctx, const Ideal& I) {
    for (const auto& P : ctx.spectrum().minimal_primes_over(I))
        if (P.height != 1) return no("minimal prime " + P.ideal.str() + " has height " + std::to_string(P.height));
    return ok();
}

inline Check localization_is_dvm(Context& ctx, const Ideal& P) {
    const PrimeIdeal* p = ctx.spectrum().find(P);
    if (!p) throw std::logic_error(P.str() + " is not a prime of the spectrum");
    return from_bool(is_dvm(ctx.localization(*p)) == Verdict::True, "localization at " + P.str() + " is not a DVM");
}

inline Check radical_invertible(Context& ctx, const System& sys, const Ideal& I) {
    Ideal R = radical(I);
    return from_bool(ctx.invertible(sys, R), "radical " + R.str() + " is not " + sys.name() + "-invertible");
}

inline Check radical_principal(const Ideal& I) {
    Ideal R = radical(I);
    return from_bool(R.is_principal(), "radical " + R.str() + " is not principal");
}

/// Element-wise factorization: x is a sum of elements drawn from `atoms`.
inline bool decomposes(const MonoidModel& H, const GroupVector& x, const std::vector<GroupVector>& atoms,
                       std::map<GroupVector, bool>& memo) {
    if (H.is_unit(x)) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool v = false;
    for (const auto& z : atoms)
        if (H.divides(z, x) && decomposes(H, x - z, atoms, memo)) {
            v = true;
            break;
        }
    memo.emplace(x, v);
    return v;
}

inline std::vector<Ideal> closed_prime_ideals(const ClosureOp& op) {
    std::vector<Ideal> v;
    for (const auto& p : op.closed_primes()) v.push_back(p.ideal);
    return v;
}

inline std::vector<Ideal> prime_ideals(const std::vector<PrimeIdeal>& ps) {
    std::vector<Ideal> v;
    for (const auto& p : ps) v.push_back(p.ideal);
    return v;
}

}  // namespace detail

/// Which family a property quantifies over.
enum class Domain { ClosedIdeals, SmallClosedIdeals, TinyClosedIdeals, Invertibles, Principals, PrincipalRadicals,
                    ClosedPrimes, MaxPrimes,
                    HeightOne, PrincipalMinimalPrimes, Global };

struct PropertyDef {
    std::string name;
    std::string summary;
    Domain domain = Domain::Global;
    /// Properties that do not depend on the ideal system.
    bool system_free = false;
    /// Per-instance test; absent for Global properties.
    std::function<Check(Context&, const System&, const Ideal&)> instance;
    /// Whole-property procedure for Global properties, or a structural shortcut returning a verdict early.
    std::function<std::optional<PropertyVerdict>(const PropertyDef&, Context&, const System&)> global;
};

namespace detail {

inline PropertyVerdict make_verdict(const PropertyDef& d, Context& ctx, const System& sys) {
    PropertyVerdict v;
    v.property = d.name;
    v.system = d.system_free ? "-" : sys.name();
    v.radius = ctx.config().radius;
    return v;
}

inline std::vector<Ideal> domain_of(const PropertyDef& d, Context& ctx, const System& sys) {
    std::vector<Ideal> v;
    switch (d.domain) {
        case Domain::ClosedIdeals: v = ctx.universe(sys); break;
        case Domain::SmallClosedIdeals: v = ctx.small_universe(sys); break;
        case Domain::TinyClosedIdeals: v = ctx.tiny_universe(sys); break;
        case Domain::Invertibles: v = ctx.invertibles(sys); break;
        case Domain::Principals: v = ctx.principals(); break;
        case Domain::PrincipalRadicals:
            for (const auto& I : ctx.principals()) v.push_back(radical(I));
            break;
        case Domain::ClosedPrimes: v = closed_prime_ideals(ctx.op(sys)); break;
        case Domain::MaxPrimes: v = prime_ideals(ctx.op(sys).max_primes()); break;
        case Domain::HeightOne: v = prime_ideals(ctx.spectrum().height_one()); break;
        case Domain::PrincipalMinimalPrimes:
            for (const auto& I : ctx.principals())
                for (const auto& P : ctx.spectrum().minimal_primes_over(I)) v.push_back(P.ideal);
            break;
        case Domain::Global: break;
    }
    normalize(v);
    return v;
}

/// Box-bounded families exhaust the quantifier only in the cases Context::exhaustive accepts.
inline bool domain_exact(const PropertyDef& d, Context& ctx, const System& sys) {
    switch (d.domain) {
        case Domain::ClosedIdeals:
        case Domain::SmallClosedIdeals:
        case Domain::TinyClosedIdeals:
        case Domain::Invertibles: return ctx.exhaustive(sys);
        default: return true;
    }
}

inline PropertyVerdict scan(const PropertyDef& d, Context& ctx, const System& sys) {
    PropertyVerdict v = make_verdict(d, ctx, sys);
    bool undecided = false;
    std::string first_open;
    for (const auto& I : domain_of(d, ctx, sys)) {
        Check c = d.instance(ctx, sys, I);
        if (c.truth == Truth::False) {
            v.verdict = Truth::False;
            v.witness = I;
            v.detail = c.why;
            v.basis = "box";
            return v;
        }
        if (c.truth == Truth::Unknown && !undecided) {
            undecided = true;
            first_open = I.str() + ": " + c.why;
        }
    }
    const bool exact = domain_exact(d, ctx, sys);
    v.basis = exact ? "exhaustive" : "box";
    if (undecided) {
        v.verdict = Truth::Unknown;
        v.detail = first_open;
    } else {
        v.verdict = exact ? Truth::True : Truth::Unknown;
        if (!exact) v.detail = "no counterexample in the box, which does not exhaust the quantifier";
    }
    return v;
}

inline PropertyVerdict global_verdict(const PropertyDef& d, Context& ctx, const System& sys, Truth t, std::string basis,
                                      std::optional<Ideal> witness = std::nullopt, std::string detail = {}) {
    PropertyVerdict v = make_verdict(d, ctx, sys);
    v.verdict = t;
    v.basis = std::move(basis);
    v.witness = std::move(witness);
    v.detail = std::move(detail);
    return v;
}

inline Check sp_instance(Context& ctx, const System& sys, const Ideal& I) {
    return reaches(ctx, sys, I, ctx.closed_radicals(sys), false);
}

inline Check primes_contain_invertible_radical(Context& ctx, const System& sys, const Ideal& P) {
    for (const auto& R : ctx.closed_radicals(sys))
        if (ideal_subset(R, P) && ctx.invertible(sys, R)) return ok();
    return no("contains no " + sys.name() + "-invertible radical " + sys.name() + "-ideal");
}

inline Check primes_contain_radical_principal(Context& ctx, const Ideal& P) {
    const auto& H = ctx.monoid();
    for (const auto& x : ctx.elements())
        if (!H->is_unit(x) && P.contains(x) && is_radical(Ideal::principal(H, x))) return ok();
    return no("contains no nontrivial radical principal ideal");
}

inline Check treed_at(Context& ctx, const System& sys, const Ideal& M) {
    std::vector<Ideal> below;
    for (const auto& p : ctx.op(sys).closed_primes())
        if (ideal_subset(p.ideal, M)) below.push_back(p.ideal);
    for (std::size_t i = 0; i < below.size(); ++i)
        for (std::size_t j = i + 1; j < below.size(); ++j)
            if (!ideal_subset(below[i], below[j]) && !ideal_subset(below[j], below[i]))
                return no("incomparable primes " + below[i].str() + " and " + below[j].str() + " below it");
    return ok();
}

inline Check prime_power_instance(Context& ctx, const System& sys, const Ideal& I, bool strong) {
    if (I.is_whole()) return ok();
    Ideal R = radical(I);
    if (!ctx.spectrum().find(R)) return ok();
    if (!strong && !is_primary(ctx, I)) return ok();
    return is_power_of(ctx, sys, I, R);
}

/// Ideals with primary I, P in I, I != sqrt(I) and sqrt(I) in Q: from the universe, then by localizing (P u 2x)_r.
inline Check primary_between(Context& ctx, const System& sys, const Ideal& P, const Ideal& Q) {
    auto good = [&](const Ideal& I) {
        if (!ideal_subset(P, I) || !is_primary(ctx, I)) return false;
        Ideal R = radical(I);
        return I != R && ideal_subset(R, Q);
    };
    for (const auto& I : ctx.universe(sys))
        if (good(I)) return ok();
    const ClosureOp& op = ctx.op(sys);
    const auto& H = ctx.monoid();
    for (const auto& x : ctx.elements()) {
        if (!Q.contains(x) || P.contains(x)) continue;
        Ideal J = op.close(ideal_union(P, Ideal::principal(H, x + x)));
        for (const auto& L : ctx.spectrum().minimal_primes_over(J)) {
            if (!ideal_subset(L.ideal, Q)) continue;
            Ideal I = ideal_intersect(extend(J, ctx.localization(L)), Ideal::whole(H));
            if (op.is_closed(I) && good(I)) return ok();
        }
    }
    return no("no primary " + sys.name() + "-ideal strictly between " + P.str() + " and its radical inside " + Q.str());
}

inline Check primary_inclusive_at(Context& ctx, const System& sys, const Ideal& P) {
    for (const auto& q : ctx.op(sys).closed_primes())
        if (q.ideal != P && ideal_subset(P, q.ideal)) {
            Check c = primary_between(ctx, sys, P, q.ideal);
            if (c.truth != Truth::True) return c;
        }
    return ok();
}

inline Check modular_at(Context& ctx, const System& sys, const Ideal& I) {
    const ClosureOp& op = ctx.op(sys);
    const auto& fam = ctx.tiny_universe(sys);
    for (const auto& N : fam) {
        if (!ideal_subset(I, N)) continue;
        for (const auto& J : fam) {
            Ideal lhs = ideal_intersect(op.close(ideal_union(I, J)), N);
            Ideal rhs = op.close(ideal_union(I, ideal_intersect(J, N)));
            if (!ideal_subset(lhs, rhs)) return no("fails with J = " + J.str() + ", N = " + N.str());
        }
    }
    return ok();
}

inline Check meager_instance(Context& ctx, const System& sys, const Ideal& I) {
    if (I.is_whole()) return ok();
    std::vector<Ideal> cands;
    for (const auto& J : ctx.small_universe(sys))
        if (ctx.invertible(sys, J)) cands.push_back(J);
    for (const auto& R : ctx.closed_radicals(sys))
        if (ctx.invertible(sys, R)) cands.push_back(R);
    normalize(cands);
    auto found = find_meager(ctx.op(sys), cands, I, ctx.config().meager_size);
    return from_bool(found.has_value(), "no meager family of invertible ideals meets in its radical");
}

inline Check minimal_prime_split(Context& ctx, const System& sys, const Ideal& P) {
    Check c = half_cancellative(ctx, sys, P);
    if (c.truth != Truth::True) return c;
    for (const auto& I : ctx.universe(sys)) {
        if (radical(I) != P) continue;
        Check d = is_power_of(ctx, sys, I, P);
        if (d.truth != Truth::True) return {d.truth, "ideal " + I.str() + " " + d.why};
    }
    return ok();
}

inline bool same_prime_sets(const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& b,
                            std::optional<Ideal>& witness) {
    for (const auto& p : a)
        if (std::find(b.begin(), b.end(), p) == b.end()) {
            witness = p.ideal;
            return false;
        }
    for (const auto& p : b)
        if (std::find(a.begin(), a.end(), p) == a.end()) {
            witness = p.ideal;
            return false;
        }
    return true;
}

inline std::vector<PropertyDef> build_registry() {
    using D = Domain;
    std::vector<PropertyDef> r;
    auto add = [&](std::string name, std::string summary, D dom, bool free,
                   std::function<Check(Context&, const System&, const Ideal&)> inst,
                   std::function<std::optional<PropertyVerdict>(const PropertyDef&, Context&, const System&)> glob =
                       nullptr) {
        r.push_back(PropertyDef{std::move(name), std::move(summary), dom, free, std::move(inst), std::move(glob)});
    };

    add("SP", "every closed ideal is a finite closed product of radical closed ideals", D::ClosedIdeals, false,
        sp_instance);
    add("radical_factorial", "every principal ideal is a finite product of radical principal ideals", D::Principals,
        true, [](Context& ctx, const System&, const Ideal& I) {
            const auto& H = ctx.monoid();
            std::vector<GroupVector> atoms;
            for (const auto& x : ctx.elements())
                if (!H->is_unit(x) && is_radical(Ideal::principal(H, x))) atoms.push_back(x);
            std::map<GroupVector, bool> memo;
            return from_bool(decomposes(*H, I.gens().front(), atoms, memo), "not a product of radical principal ideals");
        });
    add("factorial", "every principal ideal is a finite product of prime principal ideals", D::Principals, true,
        [](Context& ctx, const System&, const Ideal& I) {
            const auto& H = ctx.monoid();
            std::vector<GroupVector> atoms;
            for (const auto& x : ctx.elements())
                if (!H->is_unit(x) && ctx.spectrum().find(Ideal::principal(H, x))) atoms.push_back(x);
            std::map<GroupVector, bool> memo;
            return from_bool(decomposes(*H, I.gens().front(), atoms, memo), "not a product of prime principal ideals");
        });
    add("DVM", "H is a discrete valuation monoid", D::Global, true, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            Verdict d = is_dvm(ctx.monoid());
            const PrimeIdeal* m = ctx.spectrum().maximal();
            if (d == Verdict::True) return global_verdict(self, ctx, sys, Truth::True, "structural");
            return global_verdict(self, ctx, sys, Truth::False, "structural",
                                  m ? std::optional<Ideal>(m->ideal) : std::nullopt,
                                  m ? "maximal ideal is not principal of height one" : "H is a group");
        });
    add("PIT", "minimal primes over nontrivial principal ideals have height one", D::Principals, true,
        [](Context& ctx, const System&, const Ideal& I) { return minimal_primes_height_one(ctx, I); });
    add("PIT_fg", "minimal primes over nontrivial finitely generated closed ideals have height one", D::ClosedIdeals,
        false, [](Context& ctx, const System&, const Ideal& I) { return minimal_primes_height_one(ctx, I); });
    add("local", "exactly one maximal closed prime", D::Global, false, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            const auto& mx = ctx.op(sys).max_primes();
            if (mx.size() == 1) return global_verdict(self, ctx, sys, Truth::True, "structural");
            return global_verdict(self, ctx, sys, Truth::False, "structural",
                                  mx.size() > 1 ? std::optional<Ideal>(mx[1].ideal) : std::nullopt,
                                  std::to_string(mx.size()) + " maximal closed primes");
        });
    add("treed", "the closed primes below each maximal one form a chain", D::MaxPrimes, false, treed_at);
    add("almost_dedekind", "H is a group or every localization at a maximal closed prime is a DVM", D::MaxPrimes,
        false, [](Context& ctx, const System&, const Ideal& M) { return localization_is_dvm(ctx, M); });
    add("Prufer", "every finitely generated closed ideal is invertible", D::ClosedIdeals, false,
        [](Context& ctx, const System& sys, const Ideal& I) {
            return from_bool(ctx.invertible(sys, I), "not " + sys.name() + "-invertible");
        });
    add("Bezout", "every finitely generated closed ideal is principal", D::ClosedIdeals, false,
        [](Context&, const System&, const Ideal& I) { return from_bool(I.is_principal(), "not principal"); });
    add("prime_power_condition", "every primary closed ideal is a closed power of its radical", D::ClosedIdeals, false,
        [](Context& ctx, const System& sys, const Ideal& I) { return prime_power_instance(ctx, sys, I, false); });
    add("strong_prime_power_condition", "every closed ideal with prime radical is a closed power of it",
        D::ClosedIdeals, false,
        [](Context& ctx, const System& sys, const Ideal& I) { return prime_power_instance(ctx, sys, I, true); });
    add("primary_inclusive", "primary closed ideals fit between any two nested closed primes", D::ClosedPrimes, false,
        primary_inclusive_at);
    add("cancellative", "every nontrivial closed ideal is cancellative for closed products", D::SmallClosedIdeals,
        false, cancellative);
    add("half_cancellative", "(I + J)_r = I forces J = H", D::SmallClosedIdeals, false, half_cancellative);
    add("finite_conductor", "xH n yH is a finitely generated closed ideal", D::Global, false, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            const auto& H = ctx.monoid();
            auto pb = pair_box(*H, ctx.config().small_radius, ctx.config().small_cap);
            for (std::size_t i = 0; i < pb.size(); ++i)
                for (std::size_t j = i + 1; j < pb.size(); ++j) {
                    Ideal J = ideal_intersect(Ideal::principal(H, pb[i]), Ideal::principal(H, pb[j]));
                    if (!ctx.op(sys).is_closed(J))
                        return global_verdict(self, ctx, sys, Truth::False, "box", J,
                                              "intersection is not closed");
                }
            return global_verdict(self, ctx, sys, Truth::True, "structural",
                                  std::nullopt, "cell intersections have finitely many generators");
        });
    add("modular_system", "(I u J)_r n N lies in (I u (J n N))_r whenever I lies in N", D::TinyClosedIdeals, false,
        modular_at, [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            const bool fine_s = sys.kind() == System::Kind::S ||
                                (sys.kind() == System::Kind::Mod && sys.fine().kind() == System::Kind::S);
            if (fine_s)
                return global_verdict(self, ctx, sys, Truth::True, "structural", std::nullopt,
                                      "the s-system and its modularizations are modular");
            return std::nullopt;
        });
    add("ACC_radical_principal", "ascending chain condition on radical principal ideals", D::Global, true, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            return global_verdict(self, ctx, sys, Truth::True, "structural", std::nullopt,
                                  "radical ideals are unions of finitely many support ideals");
        });
    add("class_group_trivial", "every invertible closed ideal is principal", D::Global, false, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            auto rep = class_group_probe(ctx.op(sys), ctx.universe(sys), ctx.config().radius, ctx.config().torsion_cap);
            if (!rep.trivial)
                return global_verdict(self, ctx, sys, Truth::False, "box",
                                      rep.nonprincipal_witness, "invertible but not principal");
            return global_verdict(self, ctx, sys, Truth::True, "box", std::nullopt,
                                  "probe radius " + std::to_string(ctx.config().radius) + ", " +
                                      std::to_string(rep.invertibles) + " invertible ideals checked");
        });
    add("radicals_fg_invertible", "radicals of nontrivial finitely generated closed ideals are invertible",
        D::ClosedIdeals, false, radical_invertible);
    add("radicals_fg_principal", "radicals of finitely generated closed ideals are principal", D::ClosedIdeals, false,
        [](Context&, const System&, const Ideal& I) { return radical_principal(I); });
    add("radicals_principal_invertible", "radicals of nontrivial principal ideals are invertible", D::PrincipalRadicals,
        false, radical_invertible);
    add("radicals_principal_principal", "radicals of principal ideals are principal", D::PrincipalRadicals, true,
        [](Context&, const System&, const Ideal& I) { return radical_principal(I); });
    add("radicals_invertible_invertible", "radicals of invertible closed ideals are invertible", D::Invertibles, false,
        radical_invertible);
    add("comparable_radical_products", "every closed ideal is a product of comparable radical closed ideals",
        D::ClosedIdeals, false, [](Context& ctx, const System& sys, const Ideal& I) {
            return reaches(ctx, sys, I, ctx.closed_radicals(sys), true);
        });
    add("principal_radical_products", "every principal ideal is a finite closed product of radical closed ideals",
        D::Principals, false, sp_instance);
    add("principal_comparable_radical_products",
        "every principal ideal is a closed product of comparable radical closed ideals", D::Principals, false,
        [](Context& ctx, const System& sys, const Ideal& I) {
            return reaches(ctx, sys, I, ctx.closed_radicals(sys), true);
        });
    add("principal_comparable_radical_principals",
        "every principal ideal is a product of comparable radical principal ideals", D::Principals, true,
        [](Context& ctx, const System&, const Ideal& I) {
            auto out = radical_factor_principal(ctx.monoid(), I.gens().front());
            if (auto* f = std::get_if<Failure>(&out))
                return no(std::string(to_string(f->reason)) + (f->witness ? " at " + f->witness->str() : ""));
            const auto& c = std::get<FactorChain>(out);
            return from_bool(c.comparable && c.reassembles, "peeled chain is not comparable or does not reassemble");
        });
    add("invertible_comparable_radical_products",
        "every invertible closed ideal is a closed product of comparable radical closed ideals", D::Invertibles, false,
        [](Context& ctx, const System& sys, const Ideal& I) {
            return reaches(ctx, sys, I, ctx.closed_radicals(sys), true);
        });
    add("invertible_radical_products", "every invertible closed ideal is a finite closed product of radical ideals",
        D::Invertibles, false, sp_instance);
    add("invertibles_radical_factorial", "the monoid of invertible closed ideals is radical factorial",
        D::Invertibles, false, [](Context& ctx, const System& sys, const Ideal& I) {
            // Radical elements of the invertible monoid are exactly its radical members.
            std::vector<Ideal> atoms;
            for (const auto& R : ctx.closed_radicals(sys))
                if (ctx.invertible(sys, R) && is_radical_in_invertibles(ctx.op(sys), R)) atoms.push_back(R);
            return reaches(ctx, sys, I, atoms, false);
        });
    add("primes_contain_invertible_radical", "each nontrivial closed prime contains an invertible radical closed ideal",
        D::ClosedPrimes, false, primes_contain_invertible_radical);
    add("primes_contain_radical_principal", "each nontrivial closed prime contains a nontrivial radical principal ideal",
        D::ClosedPrimes, false, [](Context& ctx, const System&, const Ideal& P) {
            return primes_contain_radical_principal(ctx, P);
        });
    add("height_one_dvm", "localizations at height-one primes are DVMs", D::HeightOne, true,
        [](Context& ctx, const System&, const Ideal& P) { return localization_is_dvm(ctx, P); });
    add("height_one_meet", "H is the intersection of its localizations at height-one primes", D::Global, true, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            const auto& H = ctx.monoid();
            std::vector<MonoidPtr> locals;
            for (const auto& p : ctx.spectrum().height_one()) locals.push_back(ctx.localization(p));
            const std::size_t d = H->rank();
            std::vector<i64> span(d, 0);
            for (std::size_t i = 0; i < d; ++i)
                if (!H->coord(i).is_group()) span[i] = H->coord(i).conductor() + H->coord(i).multiplicity() + 1;
            GroupVector g(d);
            for (std::size_t i = 0; i < d; ++i) g[i] = -span[i];
            while (true) {
                bool everywhere = std::all_of(locals.begin(), locals.end(), [&](const MonoidPtr& L) { return L->contains(g); });
                if (everywhere && !H->contains(g))
                    return global_verdict(self, ctx, sys, Truth::False, "structural", std::nullopt,
                                          g.str() + " lies in every height-one localization but not in H");
                std::size_t i = d;
                while (true) {
                    if (i == 0)
                        return global_verdict(self, ctx, sys, Truth::True, "structural");
                    --i;
                    if (g[i] < span[i]) {
                        ++g[i];
                        break;
                    }
                    g[i] = -span[i];
                }
            }
        });
    add("meager_radicals", "radicals of invertible closed ideals are meets of meager invertible families",
        D::Invertibles, false, meager_instance);
    add("max_is_height_one", "the maximal closed primes are exactly the height-one primes", D::Global, false, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            std::optional<Ideal> w;
            bool same = same_prime_sets(ctx.op(sys).max_primes(), ctx.spectrum().height_one(), w);
            return global_verdict(self, ctx, sys, same ? Truth::True : Truth::False,
                                  "structural", w, same ? "" : "prime in only one of the two sets");
        });
    add("max_is_t_max", "the maximal closed primes are exactly the maximal t-primes", D::Global, false, nullptr,
        [](const PropertyDef& self, Context& ctx, const System& sys) -> std::optional<PropertyVerdict> {
            std::optional<Ideal> w;
            bool same = same_prime_sets(ctx.op(sys).max_primes(), ctx.op(System::t()).max_primes(), w);
            return global_verdict(self, ctx, sys, same ? Truth::True : Truth::False, "structural",
                                  w, same ? "" : "prime in only one of the two sets");
        });
    add("minimal_primes_split",
        "primes minimal over principal ideals are half cancellative and their closed ideals are powers",
        D::PrincipalMinimalPrimes, false, minimal_prime_split);
    return r;
}

}  // namespace detail

inline const std::vector<PropertyDef>& property_registry() {
    static const std::vector<PropertyDef> reg = detail::build_registry();
    return reg;
}

/// Resolves a property name; a "<system>_" prefix naming the given system is accepted ("t_SP").
inline const PropertyDef& find_property(const std::string& name, const System& sys) {
    const auto& reg = property_registry();
    for (const auto& d : reg)
        if (d.name == name) return d;
    const std::string prefix = sys.name() + "_";
    if (name.rfind(prefix, 0) == 0) {
        const std::string rest = name.substr(prefix.size());
        for (const auto& d : reg)
            if (d.name == rest) return d;
    }
    throw std::invalid_argument("unregistered property '" + name + "'");
}

/**
 * Evaluates one property. Falsifying verdicts carry the lexicographically
 * least failing instance of the property's domain.
 */
inline PropertyVerdict evaluate(Context& ctx, const System& sys, const std::string& property) {
    const PropertyDef& d = find_property(property, sys);
    const System key_sys = d.system_free ? System::s() : sys;
    auto& cache = ctx.verdict_cache(key_sys);
    auto it = cache.find(d.name);
    if (it != cache.end()) return it->second;
    PropertyVerdict v;
    try {
        std::optional<PropertyVerdict> early;
        if (d.global) early = d.global(d, ctx, key_sys);
        if (early) {
            v = *early;
        } else if (d.instance) {
            v = detail::scan(d, ctx, key_sys);
        } else {
            throw std::logic_error("property " + d.name + " has no procedure");
        }
    } catch (const UncertifiedError& e) {
        v = detail::make_verdict(d, ctx, key_sys);
        v.verdict = Truth::Unknown;
        v.basis = "box";
        v.detail = e.what();
    }
    if (d.name == "SP" && v.verdict != Truth::True) {
        // The finite criterion (radicals of finitely generated closed ideals invertible)
        // implies SP; a direct search that disagrees signals a bug.
        PropertyVerdict crit = evaluate(ctx, key_sys, "radicals_fg_invertible");
        if (crit.verdict == Truth::True)
            throw std::logic_error("SP search disagrees with the radical criterion on " + ctx.monoid()->describe());
    }
    cache.emplace(d.name, v);
    return v;
}

inline PropertyVerdict evaluate(const MonoidPtr& H, const System& sys, const std::string& property, i64 radius) {
    EvalConfig cfg;
    cfg.radius = radius;
    Context ctx(H, cfg);
    return evaluate(ctx, sys, property);
}

/// Re-runs a property's per-instance test, for checking witnesses.
inline Check check_instance(Context& ctx, const System& sys, const std::string& property, const Ideal& I) {
    const PropertyDef& d = find_property(property, sys);
    if (!d.instance) throw std::invalid_argument("property " + d.name + " has no per-instance test");
    return d.instance(ctx, d.system_free ? System::s() : sys, I);
}

// ---------------------------------------------------------------------------
// Equivalence suites

/// A system slot in a suite condition: the suite's r, t itself, w, or the modularization of r over s.
enum class SysRole { R, T, W, RP };

struct ConditionSpec {
    std::string label;
    std::string statement;
    std::vector<std::pair<std::string, SysRole>> parts;
    /// Conditions with the same group must agree; suites with two equivalence lists use "A" and "B".
    std::string group = "";
};

struct SuiteSpec {
    std::string id;
    std::string title;
    bool needs_proper = false;  ///< only stated for H != G
    bool fixed_t = false;       ///< the statement fixes r = t
    std::vector<ConditionSpec> conditions;
    std::vector<std::string> notes;
};

struct ConditionResult {
    std::string label;
    std::string statement;
    std::string group;
    Truth verdict = Truth::Unknown;
    std::vector<PropertyVerdict> parts;
    std::vector<std::string> skipped;  ///< parts not evaluated after a false conjunct
};

struct TfaeReport {
    std::string suite;
    std::string title;
    std::string system;
    i64 radius = 0;
    bool applicable = true;
    bool agreement = true;
    std::vector<ConditionResult> conditions;
    std::vector<std::string> notes;
    /// Closure identity checked when every condition holds (set only for suites that assert one).
    std::optional<bool> identity_holds;
};

inline const std::vector<SuiteSpec>& suite_registry() {
    using R = SysRole;
    static const std::vector<SuiteSpec> reg = [] {
        std::vector<SuiteSpec> v;
        v.push_back({"Thm4.2", "t-almost Dedekind t-SP criteria", false, true,
                     {{"1", "t-almost Dedekind and t-SP", {{"almost_dedekind", R::T}, {"SP", R::T}}},
                      {"2", "t-finite conductor and principal ideals are t-products of radicals",
                       {{"finite_conductor", R::T}, {"principal_radical_products", R::T}}},
                      {"3", "t-ideals are t-products of comparable radical t-ideals",
                       {{"comparable_radical_products", R::T}}},
                      {"4", "radicals of nontrivial principal ideals are t-invertible",
                       {{"radicals_principal_invertible", R::T}}}},
                     {}});
        v.push_back({"Cor4.4", "w-SP criteria", false, true,
                     {{"1", "t-almost Dedekind and t-SP", {{"almost_dedekind", R::T}, {"SP", R::T}}},
                      {"2", "w-SP", {{"SP", R::W}}},
                      {"3", "w-finite conductor and principal ideals are w-products of radicals",
                       {{"finite_conductor", R::W}, {"principal_radical_products", R::W}}},
                      {"4", "w-ideals are w-products of comparable radical w-ideals",
                       {{"comparable_radical_products", R::W}}},
                      {"5", "radicals of nontrivial principal ideals are w-invertible",
                       {{"radicals_principal_invertible", R::W}}}},
                     {}});
        v.push_back({"Cor4.5", "Bezout SP criteria", false, true,
                     {{"1", "t-Bezout and t-SP", {{"Bezout", R::T}, {"SP", R::T}}},
                      {"2", "w-Bezout and w-SP", {{"Bezout", R::W}, {"SP", R::W}}},
                      {"3", "radicals of principal ideals are principal", {{"radicals_principal_principal", R::T}}},
                      {"4", "principal ideals are products of comparable radical principal ideals",
                       {{"principal_comparable_radical_principals", R::T}}}},
                     {}});
        v.push_back({"Cor4.6", "factoriality", false, true,
                     {{"1", "factorial", {{"factorial", R::T}}},
                      {"2", "radicals of principal ideals are principal and ACC on radical principal ideals",
                       {{"radicals_principal_principal", R::T}, {"ACC_radical_principal", R::T}}}},
                     {}});
        v.push_back({"Thm3.9", "r-almost Dedekind r-SP criteria", false, false,
                     {{"1", "r-almost Dedekind and r-SP", {{"almost_dedekind", R::R}, {"SP", R::R}}},
                      {"2", "r-treed and every nontrivial closed prime contains an invertible radical",
                       {{"treed", R::R}, {"primes_contain_invertible_radical", R::R}}},
                      {"3", "prime power condition, primary inclusive, primes contain invertible radicals",
                       {{"prime_power_condition", R::R}, {"primary_inclusive", R::R},
                        {"primes_contain_invertible_radical", R::R}}},
                      {"4", "radicals of nontrivial finitely generated closed ideals are invertible",
                       {{"radicals_fg_invertible", R::R}}},
                      {"5", "principal ideal theorem for finitely generated closed ideals, radicals of principals invertible",
                       {{"PIT_fg", R::R}, {"radicals_principal_invertible", R::R}}}},
                     {}});
        v.push_back({"Thm3.10", "r-Bezout r-SP criteria", false, false,
                     {{"1", "r-Bezout and r-SP", {{"Bezout", R::R}, {"SP", R::R}}},
                      {"2", "radical factorial and r-Bezout", {{"radical_factorial", R::R}, {"Bezout", R::R}}},
                      {"3", "r-treed, trivial class group, primes contain radical principal ideals",
                       {{"treed", R::R}, {"class_group_trivial", R::R}, {"primes_contain_radical_principal", R::R}}},
                      {"4", "prime power condition, primary inclusive, radicals of principals principal",
                       {{"prime_power_condition", R::R}, {"primary_inclusive", R::R},
                        {"radicals_principal_principal", R::R}}},
                      {"5", "r-treed and radicals of principals principal",
                       {{"treed", R::R}, {"radicals_principal_principal", R::R}}},
                      {"6", "principal ideal theorem for finitely generated closed ideals, radicals of principals principal",
                       {{"PIT_fg", R::R}, {"radicals_principal_principal", R::R}}},
                      {"7", "radicals of finitely generated closed ideals are principal",
                       {{"radicals_fg_principal", R::R}}}},
                     {}});
        v.push_back({"Prop3.6", "r-almost Dedekind criteria", true, false,
                     {{"1", "r-almost Dedekind", {{"almost_dedekind", R::R}}},
                      {"2", "strong prime power condition and nontrivial closed ideals cancellative",
                       {{"strong_prime_power_condition", R::R}, {"cancellative", R::R}}},
                      {"3", "primes minimal over principal ideals are half cancellative with power ideals",
                       {{"minimal_primes_split", R::R}}},
                      {"4", "r-treed and strong prime power condition",
                       {{"treed", R::R}, {"strong_prime_power_condition", R::R}}},
                      {"5", "strong prime power condition and r modular",
                       {{"strong_prime_power_condition", R::R}, {"modular_system", R::R}}},
                      {"6", "maximal closed primes are the height-one primes and prime power condition",
                       {{"max_is_height_one", R::R}, {"prime_power_condition", R::R}}},
                      {"7", "prime power condition, principal ideal theorem, primary inclusive",
                       {{"prime_power_condition", R::R}, {"PIT", R::R}, {"primary_inclusive", R::R}}}},
                     {}});
        v.push_back({"Cor3.8", "almost Dedekind through the modularization", true, false,
                     {{"1", "r-almost Dedekind", {{"almost_dedekind", R::R}}},
                      {"2", "modularization almost Dedekind", {{"almost_dedekind", R::RP}}},
                      {"3", "modularization maxima are height one and its prime power condition holds",
                       {{"max_is_height_one", R::RP}, {"prime_power_condition", R::RP}}},
                      {"4", "strong prime power condition for the modularization",
                       {{"strong_prime_power_condition", R::RP}}},
                      {"5", "prime power condition for the modularization and principal ideal theorem",
                       {{"prime_power_condition", R::RP}, {"PIT", R::RP}}}},
                     {"modularization taken over the s-system"}});
        v.push_back({"Thm4.3", "SP through the modularization", true, false,
                     {{"A1", "r-almost Dedekind and r-SP", {{"almost_dedekind", R::R}, {"SP", R::R}}, "A"},
                      {"A2", "r-max equals t-max and radicals of nontrivial principals t-invertible",
                       {{"max_is_t_max", R::R}, {"radicals_principal_invertible", R::T}}, "A"},
                      {"A3", "modularization SP", {{"SP", R::RP}}, "A"},
                      {"B1", "r-Bezout and r-SP", {{"Bezout", R::R}, {"SP", R::R}}, "B"},
                      {"B2", "r-max equals t-max and radicals of principals principal",
                       {{"max_is_t_max", R::R}, {"radicals_principal_principal", R::R}}, "B"},
                      {"B3", "modularization Bezout and SP", {{"Bezout", R::RP}, {"SP", R::RP}}, "B"}},
                     {"modularization taken over the s-system"}});
        v.push_back({"Prop5.2", "radical factoriality of the invertible ideals", false, false,
                     {{"1", "invertible closed ideals form a radical factorial monoid",
                       {{"invertibles_radical_factorial", R::R}}},
                      {"2", "invertible closed ideals are closed products of radical closed ideals",
                       {{"invertible_radical_products", R::R}}},
                      {"3", "height-one localizations meet in H, are DVMs, and meager families exist",
                       {{"height_one_meet", R::R}, {"height_one_dvm", R::R}, {"meager_radicals", R::R}}}},
                     {}});
        v.push_back({"Prop5.4", "comparable radical products", false, false,
                     {{"1", "principal ideals are closed products of comparable radical closed ideals",
                       {{"principal_comparable_radical_products", R::R}}},
                      {"2", "radicals of nontrivial principal ideals are invertible",
                       {{"radicals_principal_invertible", R::R}}},
                      {"3", "radicals of invertible closed ideals are invertible",
                       {{"radicals_invertible_invertible", R::R}}},
                      {"5", "invertible closed ideals are closed products of comparable radical closed ideals",
                       {{"invertible_comparable_radical_products", R::R}}}},
                     {"condition 4 ranges over the ideals of the invertible-ideal monoid, which are not materialized; "
                      "conditions 2, 3 and 5 stand in for it"}});
        v.push_back({"Cor5.3", "Prufer and radical factorial invertibles", false, false,
                     {{"1", "r-almost Dedekind and r-SP", {{"almost_dedekind", R::R}, {"SP", R::R}}},
                      {"2", "r-Prufer and invertible closed ideals radical factorial",
                       {{"Prufer", R::R}, {"invertibles_radical_factorial", R::R}}}},
                     {}});
        return v;
    }();
    return reg;
}

inline const SuiteSpec& find_suite(const std::string& id) {
    std::string key = id;
    if (key == "Prop5.2A" || key == "Prop5.2(A)") key = "Prop5.2";
    for (const auto& s : suite_registry())
        if (s.id == key) return s;
    throw std::invalid_argument("unregistered suite '" + id + "'");
}

namespace detail {

inline System resolve(SysRole role, const System& r) {
    switch (role) {
        case SysRole::R: return r;
        case SysRole::T: return System::t();
        case SysRole::W: return System::w();
        case SysRole::RP: return System::mod(System::s(), r);
    }
    return r;
}

/// The closure identity asserted when all conditions of the modularization suite hold.
inline bool closure_identity(Context& ctx, const System& r) {
    const ClosureOp& rp = ctx.op(System::mod(System::s(), r));
    const ClosureOp& rr = ctx.op(r);
    const ClosureOp& t = ctx.op(System::t());
    std::mt19937_64 rng(ctx.config().seed);
    auto box = ctx.monoid()->enumerate(ctx.config().small_radius);
    for (int n = 0; n < 100; ++n) {
        Ideal X = Ideal::from(ctx.monoid(), sample_subset(box, rng, 3));
        Ideal a = rp.close(X);
        if (a != rr.close(X) || a != t.close(X)) return false;
    }
    return true;
}

}  // namespace detail

/**
 * Evaluates every condition of a suite. Each condition is a conjunction of
 * registered properties, evaluated left to right; after a false conjunct the
 * rest are listed as skipped.
 */
inline TfaeReport tfae_suite(Context& ctx, const std::string& suite, const System& r = System::t()) {
    const SuiteSpec& spec = find_suite(suite);
    const System sys = spec.fixed_t ? System::t() : r;
    TfaeReport rep;
    rep.suite = spec.id;
    rep.title = spec.title;
    rep.system = sys.name();
    rep.radius = ctx.config().radius;
    rep.notes = spec.notes;
    if (spec.needs_proper && ctx.monoid()->is_group()) {
        rep.applicable = false;
        rep.notes.push_back("stated only for monoids that are not groups");
        return rep;
    }
    for (const auto& c : spec.conditions) {
        ConditionResult cr;
        cr.label = c.label;
        cr.statement = c.statement;
        cr.group = c.group;
        cr.verdict = Truth::True;
        for (const auto& [prop, role] : c.parts) {
            System s = detail::resolve(role, sys);
            if (cr.verdict == Truth::False) {
                cr.skipped.push_back(prop + "@" + s.name());
                continue;
            }
            PropertyVerdict pv = evaluate(ctx, s, prop);
            if (pv.verdict == Truth::False) cr.verdict = Truth::False;
            else if (pv.verdict == Truth::Unknown) cr.verdict = Truth::Unknown;
            cr.parts.push_back(std::move(pv));
        }
        rep.conditions.push_back(std::move(cr));
    }
    std::map<std::string, Truth> first;
    for (const auto& c : rep.conditions) {
        auto [it, fresh] = first.emplace(c.group, c.verdict);
        if (!fresh && it->second != c.verdict) rep.agreement = false;
    }
    for (const auto& c : rep.conditions)
        if (c.verdict == Truth::Unknown) rep.agreement = false;
    bool primary_vacuous = ctx.op(sys).closed_primes().size() < 2;
    for (const auto& c : spec.conditions)
        for (const auto& part : c.parts)
            if (part.first == "primary_inclusive" && primary_vacuous) {
                rep.notes.push_back("primary inclusiveness is vacuous: fewer than two closed primes");
                goto noted;
            }
noted:
    if (spec.id == "Cor3.8" && rep.agreement && !rep.conditions.empty() && rep.conditions.front().verdict == Truth::True) {
        rep.identity_holds = detail::closure_identity(ctx, sys);
        if (!*rep.identity_holds) rep.agreement = false;
    }
    return rep;
}

inline TfaeReport tfae_suite(const MonoidPtr& H, const std::string& suite, i64 radius, const System& r = System::t()) {
    EvalConfig cfg;
    cfg.radius = radius;
    Context ctx(H, cfg);
    return tfae_suite(ctx, suite, r);
}

/// The suites checked for agreement across the corpus.
inline const std::vector<std::string>& core_suites() {
    static const std::vector<std::string> v{"Thm4.2", "Cor4.4", "Cor4.5", "Thm3.9", "Thm3.10",
                                            "Prop3.6", "Prop5.2", "Cor5.3", "Cor4.6"};
    return v;
}

struct PrimeSummary {
    std::vector<std::size_t> face;
    int height = 0;
    Ideal ideal;
    std::map<std::string, bool> closed;   ///< per system name
    std::map<std::string, bool> maximal;  ///< per system name
};

struct Classification {
    std::string monoid;
    std::string spec;
    i64 radius = 0;
    int dimension = 0;
    std::vector<PrimeSummary> primes;
    std::vector<PropertyVerdict> properties;
    std::vector<TfaeReport> suites;
    bool all_agree = true;
};

inline const std::vector<System>& matrix_systems() {
    static const std::vector<System> v{System::s(), System::w(), System::t()};
    return v;
}

/// Full property matrix over s, w and t, every suite, and a spectrum summary.
inline Classification classify(Context& ctx) {
    Classification out;
    const auto& H = ctx.monoid();
    out.monoid = H->name();
    out.spec = H->to_spec();
    out.radius = ctx.config().radius;
    out.dimension = ctx.spectrum().dimension();
    for (const auto& p : ctx.spectrum().primes()) {
        PrimeSummary ps{p.face_indices(H->rank()), p.height, p.ideal, {}, {}};
        for (const auto& sys : matrix_systems()) {
            const ClosureOp& op = ctx.op(sys);
            ps.closed[sys.name()] = std::find(op.closed_primes().begin(), op.closed_primes().end(), p) != op.closed_primes().end();
            ps.maximal[sys.name()] = std::find(op.max_primes().begin(), op.max_primes().end(), p) != op.max_primes().end();
        }
        out.primes.push_back(std::move(ps));
    }
    for (const auto& d : property_registry()) {
        if (d.system_free) {
            out.properties.push_back(evaluate(ctx, System::s(), d.name));
            continue;
        }
        for (const auto& sys : matrix_systems()) out.properties.push_back(evaluate(ctx, sys, d.name));
    }
    for (const auto& s : suite_registry()) {
        out.suites.push_back(tfae_suite(ctx, s.id));
        out.all_agree = out.all_agree && out.suites.back().agreement;
    }
    return out;
}

inline Classification classify(const MonoidPtr& H, i64 radius) {
    EvalConfig cfg;
    cfg.radius = radius;
    Context ctx(H, cfg);
    return classify(ctx);
}

}  // namespace idealis
