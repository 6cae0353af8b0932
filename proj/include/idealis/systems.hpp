#pragma once
// Finitary ideal systems s, v, t, w and generic modularizations.

#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spectrum.hpp"

namespace idealis {

/// Immutable description of an ideal system; modularizations nest.
class System {
public:
    enum class Kind { S, V, T, Mod };

    static System s() { return System(Kind::S); }
    static System v() { return System(Kind::V); }
    static System t() { return System(Kind::T); }
    /// The p-modularization of r; requires p <= r.
    static System mod(const System& p, const System& r) {
        System x(Kind::Mod);
        x.p_ = std::make_shared<const System>(p);
        x.r_ = std::make_shared<const System>(r);
        return x;
    }
    static System w() { return mod(s(), t()); }

    Kind kind() const { return kind_; }
    const System& fine() const { return *p_; }
    const System& coarse() const { return *r_; }

    std::string name() const {
        switch (kind_) {
            case Kind::S: return "s";
            case Kind::V: return "v";
            case Kind::T: return "t";
            case Kind::Mod:
                if (r_->kind_ == Kind::T) return p_->kind_ == Kind::S ? "w" : "w_p:" + p_->name();
                return "mod(" + p_->name() + "," + r_->name() + ")";
        }
        return "?";
    }

    friend bool operator==(const System& a, const System& b) { return a.name() == b.name(); }

    /// Accepts s, v, t, w, w_p:<sys> and mod(<sys>,<sys>).
    static System parse(const std::string& text) {
        std::size_t pos = 0;
        System sys = parse_at(text, pos);
        if (pos != text.size()) throw std::invalid_argument("trailing text in system '" + text + "'");
        return sys;
    }

private:
    explicit System(Kind k) : kind_(k) {}

    static System parse_at(const std::string& s, std::size_t& pos) {
        auto starts = [&](const char* lit) { return s.compare(pos, std::strlen(lit), lit) == 0; };
        if (starts("mod(")) {
            pos += 4;
            System p = parse_at(s, pos);
            if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("expected ',' in '" + s + "'");
            ++pos;
            System r = parse_at(s, pos);
            if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ')' in '" + s + "'");
            ++pos;
            return mod(p, r);
        }
        if (starts("w_p:")) {
            pos += 4;
            return mod(parse_at(s, pos), t());
        }
        if (pos < s.size()) {
            char c = s[pos++];
            if (c == 's') return System::s();
            if (c == 'v') return System::v();
            if (c == 't') return System::t();
            if (c == 'w') return System::w();
        }
        throw std::invalid_argument("unknown ideal system '" + s + "'");
    }

    Kind kind_;
    std::shared_ptr<const System> p_, r_;
};

/**
 * A closure operator bound to one monoid.
 *
 * Construction precomputes the maximal closed primes, and for a
 * modularization the localized models used by the intersection formula.
 * Instances are immutable and may be shared between threads.
 */
class ClosureOp {
public:
    ClosureOp(MonoidPtr H, System sys) : h_(std::move(H)), sys_(std::move(sys)), spec_(std::make_shared<Spectrum>(h_)) {
        detail::require_product(*h_, "closure");
        init();
    }
    ClosureOp(MonoidPtr H, System sys, std::shared_ptr<const Spectrum> spec)
        : h_(std::move(H)), sys_(std::move(sys)), spec_(std::move(spec)) {
        detail::require_product(*h_, "closure");
        init();
    }

    const System& system() const { return sys_; }
    const MonoidPtr& monoid_ptr() const { return h_; }
    const Spectrum& spectrum() const { return *spec_; }
    std::shared_ptr<const Spectrum> spectrum_ptr() const { return spec_; }

    Ideal operator()(const Ideal& X) const { return close(X); }

    Ideal close(const Ideal& X) const {
        if (X.is_empty()) return X;
        switch (sys_.kind()) {
            case System::Kind::S: return X;
            case System::Kind::V:
            case System::Kind::T:
                // For a finitely generated X the t- and v-closures coincide.
                if (h_->is_group()) return Ideal::whole(h_);
                return inverse(inverse(X));
            case System::Kind::Mod: return modular_close(X);
        }
        return X;
    }

    bool is_closed(const Ideal& X) const { return close(X) == X; }

    /// Maximal elements among the nonempty primes fixed by this closure.
    const std::vector<PrimeIdeal>& max_primes() const { return rmax_; }
    /// Nonempty primes fixed by this closure.
    const std::vector<PrimeIdeal>& closed_primes() const { return closed_primes_; }

    /**
     * Intersection over M in r-max(H) of (X_p)_M, intersected with H.
     *
     * A fractional X is first moved inside H by a translation, which the
     * closure commutes with.
     */
    Ideal modular_close(const Ideal& X) const {
        if (X.is_empty()) return X;
        if (!X.is_integral()) {
            GroupVector c = shift_into(X);
            return translate(modular_close(translate(X, c)), -c);
        }
        Ideal xp = fine_->close(X);
        if (local_models_.empty()) return Ideal::whole(h_);
        Ideal acc = Ideal::whole(h_);
        for (const auto& L : local_models_) acc = ideal_intersect(acc, extend(xp, L));
        return acc;
    }

    /**
     * Membership in the modularization straight from its definition: x is in
     * the closure iff x + F lies in X_p for some F in H with F_r = H. F is the
     * largest such set inside the radius box.
     */
    bool definitional_member(const Ideal& X, const GroupVector& x, i64 radius) const {
        if (sys_.kind() != System::Kind::Mod) throw std::logic_error("definitional test needs a modularization");
        if (!h_->contains(x)) return false;
        Ideal xp = fine_->close(X);
        std::vector<GroupVector> F;
        for (const auto& f : h_->enumerate(radius))
            if (xp.contains(x + f)) F.push_back(f);
        if (F.empty()) return false;
        return coarse_->close(Ideal::from(h_, F)).is_whole();
    }

    const ClosureOp& fine_op() const { return *fine_; }
    const ClosureOp& coarse_op() const { return *coarse_; }

private:
    void init() {
        if (sys_.kind() == System::Kind::Mod) {
            fine_ = std::make_shared<ClosureOp>(h_, sys_.fine(), spec_);
            coarse_ = std::make_shared<ClosureOp>(h_, sys_.coarse(), spec_);
            for (const auto& m : coarse_->max_primes()) local_models_.push_back(localize(*h_, m));
        }
        for (const auto& p : spec_->primes())
            if (close(p.ideal) == p.ideal) closed_primes_.push_back(p);
        for (const auto& p : closed_primes_) {
            bool maximal = std::none_of(closed_primes_.begin(), closed_primes_.end(), [&](const PrimeIdeal& q) {
                return q.ideal != p.ideal && ideal_subset(p.ideal, q.ideal);
            });
            if (maximal) rmax_.push_back(p);
        }
    }

    GroupVector shift_into(const Ideal& X) const {
        GroupVector c(h_->rank());
        for (std::size_t i = 0; i < h_->rank(); ++i) {
            if (h_->coord(i).is_group()) continue;
            i64 need = 0;
            for (const auto& a : X.gens()) need = std::max(need, checked::sub(h_->coord(i).conductor(), a[i]));
            c[i] = need;
        }
        return c;
    }

    MonoidPtr h_;
    System sys_;
    std::shared_ptr<const Spectrum> spec_;
    std::shared_ptr<ClosureOp> fine_, coarse_;
    std::vector<MonoidPtr> local_models_;
    std::vector<PrimeIdeal> closed_primes_, rmax_;
};

/// One-shot closure; prefer a reusable ClosureOp in loops.
inline Ideal close(const System& sys, const Ideal& X) { return ClosureOp(X.monoid_ptr(), sys).close(X); }

inline Ideal modular_close(const System& p, const System& r, const Ideal& X) {
    return ClosureOp(X.monoid_ptr(), System::mod(p, r)).close(X);
}

/// The maximal primes fixed by sys.
inline std::vector<PrimeIdeal> r_max(const MonoidPtr& H, const System& sys) { return ClosureOp(H, sys).max_primes(); }

/// Outcome of a sampled property run.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string failed_axiom;  // "A", "B", "C" or "leq"
    std::string witness;
    std::optional<std::string> strict_witness;  // leq_check only
};

namespace detail {

inline std::vector<GroupVector> sample_subset(const std::vector<GroupVector>& box, std::mt19937_64& rng, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    std::vector<GroupVector> out;
    std::size_t n = size_dist(rng);
    for (std::size_t i = 0; i < n; ++i) out.push_back(box[pick(rng)]);
    return out;
}

}  // namespace detail

using ClosureFn = std::function<Ideal(const Ideal&)>;

/**
 * Checks (A) extension, (B) idempotence and monotonicity, (C) translation on
 * seeded random finite subsets of the radius box. (D) holds by construction
 * since every closure is computed from a finite generator set.
 */
inline CheckReport axioms_check(const MonoidPtr& H, const ClosureFn& cl, const std::string& name, std::size_t samples,
                                i64 radius, std::uint64_t seed) {
    CheckReport rep{.name = name, .pass = true, .samples = samples, .seed = seed,
                    .failed_axiom = {}, .witness = {}, .strict_witness = {}};
    std::mt19937_64 rng(seed);
    auto box = H->enumerate(radius);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    auto fail = [&](const char* ax, std::string w) {
        rep.pass = false;
        rep.failed_axiom = ax;
        rep.witness = std::move(w);
    };
    for (std::size_t n = 0; n < samples && rep.pass; ++n) {
        Ideal X = Ideal::from(H, detail::sample_subset(box, rng, 3));
        Ideal Xr = cl(X);
        if (!ideal_subset(X, Xr)) { fail("A", "X=" + X.str() + " X_r=" + Xr.str()); break; }
        if (cl(Xr) != Xr) { fail("B", "idempotence X=" + X.str()); break; }
        // Monotonicity: any finite Z inside Y_r has Z_r inside Y_r.
        Ideal Y = Ideal::from(H, detail::sample_subset(box, rng, 3));
        Ideal Yr = cl(Y);
        std::vector<GroupVector> z;
        for (const auto& g : Yr.gens()) z.push_back(g + box[pick(rng)]);
        Ideal Z = Ideal::from(H, z);
        if (!ideal_subset(cl(Z), Yr)) { fail("B", "Z=" + Z.str() + " Y=" + Y.str()); break; }
        const GroupVector& c = box[pick(rng)];
        if (cl(translate(X, c)) != translate(Xr, c)) { fail("C", "X=" + X.str() + " c=" + c.str()); break; }
    }
    return rep;
}

inline CheckReport axioms_check(const ClosureOp& op, std::size_t samples, i64 radius, std::uint64_t seed) {
    return axioms_check(op.monoid_ptr(), [&](const Ideal& X) { return op.close(X); }, op.system().name(), samples, radius, seed);
}

/// X_p inside X_r on sampled X; records the first strict witness.
inline CheckReport leq_check(const ClosureOp& p, const ClosureOp& r, std::size_t samples, i64 radius, std::uint64_t seed) {
    CheckReport rep{.name = p.system().name() + "<=" + r.system().name(), .pass = true, .samples = samples, .seed = seed,
                    .failed_axiom = {}, .witness = {}, .strict_witness = {}};
    std::mt19937_64 rng(seed);
    auto box = p.monoid_ptr()->enumerate(radius);
    for (std::size_t n = 0; n < samples; ++n) {
        Ideal X = Ideal::from(p.monoid_ptr(), detail::sample_subset(box, rng, 3));
        Ideal a = p.close(X), b = r.close(X);
        if (!ideal_subset(a, b)) {
            rep.pass = false;
            rep.failed_axiom = "leq";
            rep.witness = X.str();
            break;
        }
        if (!rep.strict_witness && a != b) rep.strict_witness = X.str();
    }
    return rep;
}

}  // namespace idealis
