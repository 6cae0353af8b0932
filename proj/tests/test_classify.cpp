#include <doctest.h>

#include "idealis/classify.hpp"
#include "idealis/corpus.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

MonoidPtr M(const char* spec) { return make_monoid(parse_monoid(spec)); }

EvalConfig radius(i64 r) {
    EvalConfig c;
    c.radius = r;
    return c;
}

/// Pointwise equality of two modules over `pts`, membership decided by the oracle.
bool same_on(const MonoidModel& H, const std::vector<GroupVector>& a, const std::vector<GroupVector>& b,
             const std::vector<GroupVector>& pts) {
    for (const auto& x : pts)
        if (oracle::in_module(H, a, x) != oracle::in_module(H, b, x)) return false;
    return true;
}

/// Generators of the t-closure of k*M in a one-dimensional numerical semigroup, found by brute force.
std::vector<GroupVector> t_power_points(const MonoidModel& H, const std::vector<GroupVector>& m, int k,
                                        const std::vector<GroupVector>& pts) {
    std::vector<GroupVector> sum = m;
    for (int i = 1; i < k; ++i) {
        std::vector<GroupVector> next;
        for (const auto& a : sum)
            for (const auto& b : m) next.push_back(a + b);
        sum = next;
    }
    std::vector<GroupVector> out;
    for (const auto& x : pts)
        if (oracle::in_double_inverse(H, sum, x)) out.push_back(x);
    return out;
}

/// Primary test straight from the definition over a finite box of elements.
bool primary_by_pairs(const MonoidModel& H, const Ideal& I, const std::vector<GroupVector>& box) {
    const auto& g = I.gens();
    bool proper = false;
    for (const auto& x : box)
        if (!oracle::in_module(H, g, x)) proper = true;
    if (!proper || g.empty()) return false;
    for (const auto& a : box)
        for (const auto& b : box)
            if (oracle::in_module(H, g, a + b) && !oracle::in_module(H, g, a) && !oracle::in_radical(H, g, b)) return false;
    return true;
}

}  // namespace

TEST_CASE("property lookup and verdict strings") {
    CHECK(find_property("t_SP", System::t()).name == "SP");
    CHECK(find_property("radical_factorial", System::t()).system_free);
    CHECK_THROWS_AS(find_property("no_such_property", System::t()), std::invalid_argument);
    CHECK(std::string(to_string(Truth::Unknown)) == "unknown-beyond-radius");
    CHECK_THROWS_AS(find_suite("Thm9.9"), std::invalid_argument);
    CHECK(find_suite("Prop5.2(A)").id == "Prop5.2");
}

TEST_CASE("prime power condition fails on <2,3> under t") {
    auto H = M("numerical 2 3");
    Context ctx(H, radius(8));
    auto v = evaluate(ctx, System::t(), "prime_power_condition");
    CHECK(v.verdict == Truth::False);
    REQUIRE(v.witness);
    CHECK(check_instance(ctx, System::t(), "prime_power_condition", *v.witness).truth == Truth::False);

    // ideal{3} = {3,4,5,...}: primary to M by the radical oracle and equal to no t-power of M.
    Ideal three = ideal_from({{3}}, H);
    auto pts = oracle::box({-2}, {20});
    std::vector<GroupVector> m{{2}, {3}};
    for (i64 x = 2; x <= 12; ++x) CHECK(oracle::in_radical(*H, {{3}}, GroupVector{x}));
    for (int k = 1; k <= 6; ++k) CHECK_FALSE(same_on(*H, {{3}}, t_power_points(*H, m, k, pts), pts));
    CHECK(check_instance(ctx, System::t(), "prime_power_condition", three).truth == Truth::False);
}

TEST_CASE("t-SP fails on <2,3>; ideal{3} is also a counterexample") {
    auto H = M("numerical 2 3");
    Context ctx(H, radius(8));
    auto v = evaluate(ctx, System::t(), "t_SP");
    CHECK(v.verdict == Truth::False);
    REQUIRE(v.witness);
    CHECK(check_instance(ctx, System::t(), "SP", *v.witness).truth == Truth::False);
    CHECK(check_instance(ctx, System::t(), "SP", ideal_from({{3}}, H)).truth == Truth::False);
}

TEST_CASE("radical factoriality of N^2 at radius 6") {
    auto H = M("free 2");
    Context ctx(H, radius(6));
    auto v = evaluate(ctx, System::t(), "radical_factorial");
    CHECK(v.verdict == Truth::True);
    // Independent decomposition: (a,b) = min(a,b)(1,1) + rest, each summand generating its own radical.
    for (const GroupVector& z : {GroupVector{1, 1}, GroupVector{1, 0}, GroupVector{0, 1}}) {
        for (const auto& x : oracle::box({0, 0}, {6, 6})) {
            bool in_principal = oracle::in_module(*H, {z}, x);
            CHECK(oracle::in_radical(*H, {z}, x) == in_principal);
        }
    }
}

TEST_CASE("the s system of N^d is modular") {
    for (const char* spec : {"free 1", "free 2", "free 3"}) {
        Context ctx(M(spec), radius(4));
        CHECK(evaluate(ctx, System::s(), "modular_system").verdict == Truth::True);
    }
}

TEST_CASE("<2,3> x N is not t-almost Dedekind; the witness is the prime of the numerical coordinate") {
    auto H = M("numerical 2 3 | free 1");
    Context ctx(H, radius(8));
    auto v = evaluate(ctx, System::t(), "almost_dedekind");
    CHECK(v.verdict == Truth::False);
    REQUIRE(v.witness);
    CHECK(*v.witness == ideal_from({{2, 0}, {3, 0}}, H));
    CHECK(check_instance(ctx, System::t(), "almost_dedekind", *v.witness).truth == Truth::False);
    // Its localization is <2,3> x Z, whose value semigroup misses 1: not a valuation monoid.
    MonoidPtr loc = localize(*H, *ctx.spectrum().find(*v.witness));
    CHECK_FALSE(loc->contains(GroupVector{1, 0}));
    CHECK_FALSE(loc->contains(GroupVector{-1, 0}));
}

TEST_CASE("w-SP fails on <3,4,5> because M is not w-invertible") {
    auto H = M("numerical 3 4 5");
    Context ctx(H, radius(8));
    CHECK(evaluate(ctx, System::w(), "w_SP").verdict == Truth::False);
    auto v = evaluate(ctx, System::w(), "radicals_principal_invertible");
    CHECK(v.verdict == Truth::False);
    REQUIRE(v.witness);
    std::vector<GroupVector> m{{3}, {4}, {5}};
    CHECK(*v.witness == Ideal::from(H, m));
    // Oracle: 0 is not in (M + M^{-1})_t, so M is not even t-invertible.
    auto inv = oracle::inverse_points(*H, m);
    std::vector<GroupVector> prod;
    for (const auto& a : m)
        for (const auto& b : inv) prod.push_back(a + b);
    CHECK_FALSE(oracle::in_double_inverse(*H, prod, GroupVector{0}));
}

TEST_CASE("N and <2,3> basic classification") {
    Context n(M("free 1"), radius(8));
    CHECK(evaluate(n, System::t(), "factorial").verdict == Truth::True);
    CHECK(evaluate(n, System::t(), "DVM").verdict == Truth::True);

    Context g(M("numerical 2 3"), radius(8));
    CHECK(evaluate(g, System::t(), "local").verdict == Truth::True);
    CHECK(evaluate(g, System::t(), "class_group_trivial").verdict == Truth::True);
    CHECK(g.spectrum().dimension() == 1);
    // Quantifiers over all finitely generated ideals are not exhausted on numerical coordinates.
    CHECK(evaluate(g, System::t(), "PIT_fg").verdict == Truth::Unknown);

    Context p(M("numerical 2 3 | free 1"), radius(8));
    CHECK(p.op(System::t()).max_primes().size() == 2);
    CHECK(p.op(System::s()).max_primes().size() == 1);
}

TEST_CASE("box verdicts on free coordinates are exact") {
    Context ctx(M("free 2"), radius(5));
    CHECK(ctx.exhaustive(System::t()));
    CHECK(ctx.exhaustive(System::w()));
    CHECK_FALSE(ctx.exhaustive(System::s()));
    auto v = evaluate(ctx, System::t(), "PIT_fg");
    CHECK(v.verdict == Truth::True);
    CHECK(v.basis == "exhaustive");
}

TEST_CASE("suite verdicts on small models") {
    SUBCASE("N^2 Cor4.5 at radius 6 is all true") {
        auto rep = tfae_suite(M("free 2"), "Cor4.5", 6);
        CHECK(rep.agreement);
        for (const auto& c : rep.conditions) CHECK(c.verdict == Truth::True);
    }
    SUBCASE("<2,3> Thm4.2 is all false with witness M for the radical condition") {
        auto H = M("numerical 2 3");
        Context ctx(H, radius(8));
        auto rep = tfae_suite(ctx, "Thm4.2");
        CHECK(rep.agreement);
        REQUIRE(rep.conditions.size() == 4);
        for (const auto& c : rep.conditions) CHECK(c.verdict == Truth::False);
        const auto& c4 = rep.conditions[3];
        REQUIRE_FALSE(c4.parts.empty());
        REQUIRE(c4.parts.front().witness);
        CHECK(*c4.parts.front().witness == ideal_from({{2}, {3}}, H));
        CHECK(check_instance(ctx, System::t(), "comparable_radical_products", ideal_from({{3}}, H)).truth ==
              Truth::False);
    }
    SUBCASE("<3,4,5> Cor4.4 is all false") {
        auto rep = tfae_suite(M("numerical 3 4 5"), "Cor4.4", 8);
        CHECK(rep.agreement);
        for (const auto& c : rep.conditions) CHECK(c.verdict == Truth::False);
    }
    SUBCASE("one-dimensional models mark the prime pair quantifier vacuous") {
        auto rep = tfae_suite(M("numerical 2 3"), "Thm3.9", 8);
        bool vacuity = false;
        for (const auto& n : rep.notes) vacuity = vacuity || n.find("vacuous") != std::string::npos;
        CHECK(vacuity);
    }
    SUBCASE("conjunctions stop at the first false part") {
        auto rep = tfae_suite(M("numerical 2 3"), "Cor4.4", 8);
        const auto& c1 = rep.conditions.front();
        CHECK(c1.verdict == Truth::False);
        CHECK(c1.parts.size() + c1.skipped.size() == 2);
    }
}

TEST_CASE("every reported witness fails its own property on re-evaluation") {
    for (const char* spec : {"numerical 2 3", "numerical 3 4 5", "numerical 2 3 | free 1", "numerical 2 3 | numerical 2 5",
                             "numerical 2 3 | group 1"}) {
        CAPTURE(spec);
        Context ctx(M(spec), radius(6));
        Classification c = classify(ctx);
        for (const auto& v : c.properties) {
            if (v.verdict != Truth::False || !v.witness) continue;
            const auto& d = find_property(v.property, System::t());
            if (!d.instance) continue;
            CAPTURE(v.property);
            CAPTURE(v.system);
            System sys = v.system == "-" ? System::s() : System::parse(v.system);
            CHECK(check_instance(ctx, sys, v.property, *v.witness).truth == Truth::False);
        }
    }
}

TEST_CASE("primary detection agrees with the pair definition on a box") {
    for (const char* spec : {"free 2", "numerical 2 3 | free 1", "numerical 3 4 5"}) {
        CAPTURE(spec);
        auto H = M(spec);
        Context ctx(H, radius(3));
        auto box = H->enumerate(7);
        std::size_t primaries = 0;
        for (const auto& I : ctx.small_universe(System::s())) {
            if (I.is_whole()) continue;
            CAPTURE(I.str());
            bool fast = detail::is_primary(ctx, I);
            primaries += fast;
            CHECK(fast == primary_by_pairs(*H, I, box));
        }
        CHECK(primaries > 0);
    }
}

TEST_CASE("w-SP matches t-almost Dedekind and t-SP across part of the corpus") {
    auto corpus = builtin_corpus(9);
    std::size_t checked = 0;
    for (const auto& e : corpus) {
        if (!e.certified) continue;
        CAPTURE(e.model.name());
        Context ctx(make_monoid(e.model), radius(8));
        Truth w = evaluate(ctx, System::w(), "SP").verdict;
        Truth ad = evaluate(ctx, System::t(), "almost_dedekind").verdict;
        Truth sp = evaluate(ctx, System::t(), "SP").verdict;
        Truth both = (ad == Truth::True && sp == Truth::True) ? Truth::True
                     : (ad == Truth::False || sp == Truth::False) ? Truth::False
                                                                  : Truth::Unknown;
        CHECK(w == both);
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("core suites on named corpus models give the expected aggregate verdicts") {
    struct Case {
        const char* spec;
        Truth expected;
    };
    for (const Case& c : {Case{"free 1", Truth::True}, Case{"free 2", Truth::True}, Case{"free 1 | group 1", Truth::True},
                          Case{"numerical 2 5", Truth::False}, Case{"numerical 3 5 7", Truth::False},
                          Case{"numerical 2 3 | free 1", Truth::False}}) {
        CAPTURE(c.spec);
        Context ctx(M(c.spec), radius(8));
        for (const auto& id : core_suites()) {
            CAPTURE(id);
            auto rep = tfae_suite(ctx, id);
            CHECK(rep.agreement);
            for (const auto& cond : rep.conditions) CHECK(cond.verdict == c.expected);
        }
    }
}

TEST_CASE("affine models are refused by the classifier") {
    auto H = make_monoid(MonoidModel::affine("Cone", {{2, 0}, {1, 1}, {0, 2}}));
    CHECK_THROWS(classify(H, 4));
}
