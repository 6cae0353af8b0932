#pragma once
// Invertibility, radical factorizations, meager sets and class-group probes.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "universe.hpp"

namespace idealis {

/// Why a factorization or witness construction stopped.
struct Failure {
    enum class Reason { NonPrincipalRadical, BoundExceeded, RadicalNotInvertible, NoMeagerSet, NotInvertible };
    Reason reason;
    std::optional<Ideal> witness;
    std::string detail;
};

inline const char* to_string(Failure::Reason r) {
    switch (r) {
        case Failure::Reason::NonPrincipalRadical: return "NonPrincipalRadical";
        case Failure::Reason::BoundExceeded: return "BoundExceeded";
        case Failure::Reason::RadicalNotInvertible: return "RadicalNotInvertible";
        case Failure::Reason::NoMeagerSet: return "NoMeagerSet";
        case Failure::Reason::NotInvertible: return "NotInvertible";
    }
    return "?";
}

/**
 * A factorization of `target` into radical factors under one closure.
 * `comparable` records whether consecutive factors increase.
 */
struct FactorChain {
    std::vector<Ideal> factors;
    std::string system;
    Ideal target;
    bool comparable = true;
    bool reassembles = false;
};

template <class T>
using Outcome = std::variant<T, Failure>;

template <class T>
bool succeeded(const Outcome<T>& o) {
    return std::holds_alternative<T>(o);
}

/// (I + I^{-1})_r = H.
inline bool is_invertible(const ClosureOp& op, const Ideal& I) {
    if (I.is_empty()) return false;
    return op.close(ideal_sum(I, inverse(I))).is_whole();
}

namespace detail {

inline void require_invertible(const ClosureOp& op, const Ideal& I) {
    if (!is_invertible(op, I)) throw std::invalid_argument("ideal " + I.str() + " is not " + op.system().name() + "-invertible");
}

inline Ideal closed_sum(const ClosureOp& op, const std::vector<Ideal>& parts, const MonoidPtr& H) {
    Ideal acc = Ideal::whole(H);
    for (const auto& p : parts) acc = ideal_sum(acc, p);
    return op.close(acc);
}

inline bool increasing(const std::vector<Ideal>& f) {
    for (std::size_t i = 1; i < f.size(); ++i)
        if (!ideal_subset(f[i - 1], f[i])) return false;
    return true;
}

inline FactorChain finish_chain(const ClosureOp& op, std::vector<Ideal> factors, const Ideal& target) {
    FactorChain c;
    c.system = op.system().name();
    c.comparable = increasing(factors);
    c.reassembles = closed_sum(op, factors, target.monoid_ptr()) == target;
    c.factors = std::move(factors);
    c.target = target;
    return c;
}

}  // namespace detail

/// I | J in the monoid of invertible closed ideals, read as J inside I.
inline bool divides_in_invertibles(const ClosureOp& op, const Ideal& I, const Ideal& J) {
    detail::require_invertible(op, I);
    detail::require_invertible(op, J);
    return ideal_subset(J, I);
}

/// The candidate cofactor (J + I^{-1})_r; it is a true cofactor iff (B + I)_r = J with B integral.
inline Ideal cofactor(const ClosureOp& op, const Ideal& I, const Ideal& J) { return op.close(ideal_sum(J, inverse(I))); }

inline bool has_cofactor(const ClosureOp& op, const Ideal& I, const Ideal& J) {
    Ideal B = cofactor(op, I, J);
    return B.is_integral() && op.close(ideal_sum(B, I)) == J;
}

/// Radical as an element of the invertible-ideal monoid, which coincides with sqrt(I) = I.
inline bool is_radical_in_invertibles(const ClosureOp& op, const Ideal& I) {
    detail::require_invertible(op, I);
    return is_radical(I);
}

/**
 * Peels radical principal ideals off x + H: z_1 + H = sqrt(x + H), then the
 * radical of the remainder, until the remainder is a unit. The number of
 * steps can not exceed the least k with k * z_1 in x + H.
 */
inline Outcome<FactorChain> radical_factor_principal(const MonoidPtr& H, const GroupVector& x) {
    detail::require_product(*H, "radical_factor_principal");
    if (!H->contains(x)) throw std::invalid_argument(x.str() + " is not an element of the monoid");
    ClosureOp s(H, System::s());
    const Ideal target = Ideal::principal(H, x);
    std::vector<Ideal> factors;
    GroupVector rest = x;
    std::optional<i64> bound;
    while (true) {
        Ideal r = radical(Ideal::principal(H, rest));
        if (r.is_whole()) break;
        if (!r.is_principal()) return Failure{Failure::Reason::NonPrincipalRadical, r, "radical of " + rest.str() + " is not principal"};
        const GroupVector& z = r.gens().front();
        if (!bound) {
            i64 k = 1;
            GroupVector m = z;
            while (!target.contains(m)) {
                m += z;
                if (++k > 1'000'000) return Failure{Failure::Reason::BoundExceeded, r, "no multiple of the first factor lies in x + H"};
            }
            bound = k;
        }
        factors.push_back(r);
        if (static_cast<i64>(factors.size()) > *bound)
            return Failure{Failure::Reason::BoundExceeded, r, "more factors than the power bound " + std::to_string(*bound)};
        rest -= z;
    }
    return detail::finish_chain(s, std::move(factors), target);
}

/**
 * Factors a closed ideal into radicals by repeated peeling: I_1 = sqrt(I),
 * then the cofactor (I + I_1^{-1})_r. Fails as soon as a radical is not
 * invertible.
 */
inline Outcome<FactorChain> sp_factor(const ClosureOp& op, const Ideal& I, int max_steps = 256) {
    if (I.is_empty() || !I.is_integral()) throw std::invalid_argument("sp_factor needs a nonempty integral ideal");
    if (!op.is_closed(I)) throw std::invalid_argument(I.str() + " is not " + op.system().name() + "-closed");
    std::vector<Ideal> factors;
    Ideal rest = I;
    while (!rest.is_whole()) {
        Ideal r = radical(rest);
        if (!is_invertible(op, r)) return Failure{Failure::Reason::RadicalNotInvertible, r, "radical of " + rest.str() + " is not invertible"};
        factors.push_back(r);
        if (static_cast<int>(factors.size()) > max_steps) return Failure{Failure::Reason::BoundExceeded, rest, "peeling did not terminate"};
        Ideal next = op.close(ideal_sum(rest, inverse(r)));
        if (next == rest) return Failure{Failure::Reason::BoundExceeded, rest, "peeling made no progress"};
        if (!next.is_integral()) return Failure{Failure::Reason::BoundExceeded, rest, "cofactor left the monoid"};
        rest = next;
    }
    return detail::finish_chain(op, std::move(factors), I);
}

/// Per height-one prime: the number k_P of members inside P and whether I lies in (k_P * P)_r.
struct MeagerReport {
    struct Entry {
        Ideal prime;
        int count = 0;
        bool holds = false;
    };
    bool meager = true;
    std::vector<Entry> entries;
};

inline MeagerReport meager_check(const ClosureOp& op, const std::vector<Ideal>& members, const Ideal& I) {
    MeagerReport rep;
    for (const auto& P : op.spectrum().height_one()) {
        MeagerReport::Entry e{P.ideal, 0, false};
        for (const auto& J : members)
            if (ideal_subset(J, P.ideal)) ++e.count;
        e.holds = ideal_subset(I, op.close(ideal_power(P.ideal, e.count)));
        rep.meager = rep.meager && e.holds;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

/// max{k : A in (k * P)_r for some height-one P}, capped; nullopt when the cap is reached.
inline std::optional<int> prime_power_measure(const ClosureOp& op, const Ideal& A, int cap = 64) {
    int best = 0;
    for (const auto& P : op.spectrum().height_one()) {
        int k = 0;
        Ideal pow = Ideal::whole(op.monoid_ptr());
        while (true) {
            pow = ideal_sum(pow, P.ideal);
            if (!ideal_subset(A, op.close(pow))) break;
            if (++k >= cap) return std::nullopt;
        }
        best = std::max(best, k);
    }
    return best;
}

namespace detail {

/// Invertible radical closed ideals other than H, sorted.
inline std::optional<std::vector<Ideal>> invertible_radicals(const ClosureOp& op) {
    auto fam = radical_family(op.monoid_ptr());
    if (!fam) return std::nullopt;
    std::vector<Ideal> out;
    for (const auto& R : *fam)
        if (!R.is_whole() && op.is_closed(R) && is_invertible(op, R)) out.push_back(R);
    return out;
}

/// Smallest-first search for a meager family among the candidates whose meet is sqrt(I).
inline std::optional<std::vector<Ideal>> find_meager(const ClosureOp& op, const std::vector<Ideal>& candidates,
                                                     const Ideal& I, std::size_t max_size) {
    const Ideal root = radical(I);
    std::vector<Ideal> above;
    for (const auto& J : candidates)
        if (ideal_subset(root, J)) above.push_back(J);
    std::vector<Ideal> cur;
    std::optional<std::vector<Ideal>> found;
    for (std::size_t size = 1; size <= max_size && !found; ++size) {
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (found) return;
            if (cur.size() == size) {
                Ideal meet = cur.front();
                for (std::size_t i = 1; i < cur.size(); ++i) meet = ideal_intersect(meet, cur[i]);
                if (meet == root && meager_check(op, cur, I).meager) found = cur;
                return;
            }
            for (std::size_t i = start; i < above.size(); ++i) {
                cur.push_back(above[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    return found;
}

}  // namespace detail

/**
 * Radical factorization through meager families: pick a meager family
 * whose intersection is sqrt(I), split I = (L + sum of the family)_r and
 * recurse on L, whose prime-power measure is strictly smaller.
 */
inline Outcome<FactorChain> meager_factor(const ClosureOp& op, const Ideal& I, std::size_t max_family = 4) {
    if (!is_invertible(op, I) || !op.is_closed(I) || !I.is_integral())
        return Failure{Failure::Reason::NotInvertible, I, "meager factorization needs an invertible closed ideal"};
    auto candidates = detail::invertible_radicals(op);
    if (!candidates) return Failure{Failure::Reason::BoundExceeded, std::nullopt, "too many semigroup coordinates"};
    std::vector<Ideal> factors;
    Ideal rest = I;
    auto measure = prime_power_measure(op, rest);
    if (!measure) return Failure{Failure::Reason::BoundExceeded, rest, "prime-power measure above cap"};
    while (!rest.is_whole()) {
        auto family = detail::find_meager(op, *candidates, rest, max_family);
        if (!family) return Failure{Failure::Reason::NoMeagerSet, rest, "no meager family among invertible radicals"};
        Ideal prod = detail::closed_sum(op, *family, op.monoid_ptr());
        Ideal L = op.close(ideal_sum(rest, inverse(prod)));
        auto m = prime_power_measure(op, L);
        if (!m || *m >= *measure)
            throw std::logic_error("meager measure did not decrease on " + rest.str());
        factors.insert(factors.end(), family->begin(), family->end());
        rest = L;
        measure = m;
    }
    auto chain = detail::finish_chain(op, std::move(factors), I);
    if (!chain.reassembles) throw std::logic_error("meager factorization of " + I.str() + " does not reassemble");
    return chain;
}

/**
 * An element z whose height-one primes are exactly those containing I.
 *
 * Needs principal radicals of principal ideals. Two generators x, y are
 * merged through a = gen sqrt(x+y), b = gen sqrt(x), c = gen sqrt(y),
 * d = gen(sqrt(a-b) n sqrt(a-c)) and z = a - d; the fold runs over all
 * generators of I, and the result is replaced by the generator of its radical.
 */
inline Outcome<GroupVector> support_witness(const Ideal& I) {
    if (I.is_empty()) throw std::invalid_argument("support_witness of the empty ideal");
    const MonoidPtr& H = I.monoid_ptr();
    auto root_gen = [&](const GroupVector& x) -> std::optional<GroupVector> {
        Ideal r = radical(Ideal::principal(H, x));
        if (!r.is_principal()) return std::nullopt;
        return r.gens().front();
    };
    auto fail = [&](const GroupVector& x) {
        return Failure{Failure::Reason::NonPrincipalRadical, radical(Ideal::principal(H, x)), "radical of " + x.str() + " is not principal"};
    };
    GroupVector z = I.gens().front();
    if (!root_gen(z)) return fail(z);
    for (std::size_t i = 1; i < I.gens().size(); ++i) {
        const GroupVector& y = I.gens()[i];
        auto a = root_gen(z + y);
        auto b = root_gen(z);
        auto c = root_gen(y);
        if (!a) return fail(z + y);
        if (!b) return fail(z);
        if (!c) return fail(y);
        Ideal left = radical(Ideal::principal(H, *a - *b));
        Ideal right = radical(Ideal::principal(H, *a - *c));
        Ideal meet = ideal_intersect(left, right);
        if (!meet.is_principal())
            return Failure{Failure::Reason::NonPrincipalRadical, meet, "meet of radicals is not principal"};
        z = *a - meet.gens().front();
    }
    // The radical generator lies in the same height-one primes and is the canonical choice.
    auto root = root_gen(z);
    if (!root) return fail(z);
    z = *root;
    Spectrum spec(H);
    for (const auto& P : spec.height_one())
        if (ideal_subset(I, P.ideal) != P.ideal.contains(z))
            throw std::logic_error("support witness " + z.str() + " disagrees with the spectrum on " + P.ideal.str());
    return z;
}

/// Triviality and torsion evidence for the class group, from the closed invertibles in the box.
struct ClassGroupReport {
    std::string system;
    i64 radius = 0;
    std::size_t invertibles = 0;
    bool trivial = true;
    std::optional<Ideal> nonprincipal_witness;
    bool torsion_found = false;
    std::optional<Ideal> torsion_witness;
    int torsion_order = 0;
    int torsion_cap = 4;
};

/// Probe over a caller-supplied family of closed ideals (for example a cached universe).
inline ClassGroupReport class_group_probe(const ClosureOp& op, const std::vector<Ideal>& family, i64 radius,
                                          int torsion_cap = 4) {
    ClassGroupReport rep;
    rep.system = op.system().name();
    rep.radius = radius;
    rep.torsion_cap = torsion_cap;
    for (const auto& I : family) {
        if (!is_invertible(op, I)) continue;
        ++rep.invertibles;
        if (I.is_principal()) continue;
        if (rep.trivial) {
            rep.trivial = false;
            rep.nonprincipal_witness = I;
        }
        if (rep.torsion_found) continue;
        for (int k = 2; k <= torsion_cap; ++k)
            if (op.close(ideal_power(I, k)).is_principal()) {
                rep.torsion_found = true;
                rep.torsion_witness = I;
                rep.torsion_order = k;
                break;
            }
    }
    return rep;
}

inline ClassGroupReport class_group_probe(const ClosureOp& op, i64 radius, int torsion_cap = 4) {
    return class_group_probe(op, closed_universe(op, radius), radius, torsion_cap);
}

/**
 * Searches for a radical element x and k <= kmax with k * x inside
 * (I_1 + ... + I_{k+1})_r for nontrivial radical ideals I_j all inside one
 * height-one prime. Such an x would contradict the power obstruction;
 * returns the first one found in the element box.
 */
inline std::optional<std::string> power_obstruction_violation(const ClosureOp& op, const std::vector<Ideal>& radicals,
                                                              const Ideal& prime, i64 radius) {
    const int k = static_cast<int>(radicals.size()) - 1;
    if (k < 1) return std::nullopt;
    for (const auto& J : radicals)
        if (J.is_empty() || J.is_whole() || !ideal_subset(J, prime) || !is_radical(J))
            throw std::invalid_argument("inputs must be proper radical ideals inside the prime");
    Ideal prod = detail::closed_sum(op, radicals, op.monoid_ptr());
    for (const auto& x : element_box(*op.monoid_ptr(), radius)) {
        if (op.monoid_ptr()->is_unit(x)) continue;
        if (!is_radical(Ideal::principal(op.monoid_ptr(), x))) continue;
        if (prod.contains(k * x)) return "x=" + x.str() + " k=" + std::to_string(k) + " product=" + prod.str();
    }
    return std::nullopt;
}

}  // namespace idealis
