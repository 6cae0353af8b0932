#include <doctest.h>

#include "idealis/systems.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

MonoidPtr M(const char* spec) { return make_monoid(parse_monoid(spec)); }

const char* kModels[] = {"numerical 2 3", "numerical 3 4 5", "numerical 3 5 7", "free 2", "free 1",
                         "numerical 2 3 | free 1", "free 1 | group 1", "numerical 2 3 | group 1",
                         "numerical 2 3 | numerical 2 5"};

/// Closed ideals from singletons and pairs of a small box.
std::vector<Ideal> closed_family(const ClosureOp& op, i64 radius) {
    std::vector<Ideal> out;
    auto pool = op.monoid_ptr()->enumerate(radius);
    for (const auto& s : oracle::small_subsets(pool, 2)) {
        Ideal c = op.close(Ideal::from(op.monoid_ptr(), s));
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("system names and parsing") {
    CHECK(System::parse("t").name() == "t");
    CHECK(System::parse("w") == System::w());
    CHECK(System::parse("w_p:s") == System::w());
    CHECK(System::parse("mod(s,t)") == System::w());
    CHECK(System::parse("mod(w,t)").name() == "w_p:w");
    CHECK(System::parse("mod(s,s)").name() == "mod(s,s)");
    CHECK_THROWS(System::parse("x"));
    CHECK_THROWS(System::parse("mod(s,t"));
    CHECK_THROWS(System::parse("tt"));
}

TEST_CASE("closure examples on <3,4,5> and N^2") {
    auto H = M("numerical 3 4 5");
    Ideal X = ideal_from({{3}, {4}}, H);
    CHECK(close(System::t(), X).gens() == std::vector<GroupVector>{{3}, {4}, {5}});
    CHECK(close(System::v(), X) == close(System::t(), X));
    Ideal Xs = close(System::s(), X);
    CHECK(Xs == X);
    CHECK_FALSE(Xs.contains({5}));
    CHECK(Xs.contains({6}));
    CHECK(Xs.contains({7}));
    auto N2 = M("free 2");
    CHECK(close(System::t(), ideal_from({{1, 0}, {0, 1}}, N2)).is_whole());
    CHECK(close(System::t(), Ideal::empty(N2)).is_empty());
}

TEST_CASE("modularization examples") {
    auto H = M("numerical 3 4 5");
    Ideal X = ideal_from({{3}, {4}}, H);
    CHECK(modular_close(System::s(), System::t(), X) == X);
    auto N2 = M("free 2");
    CHECK(modular_close(System::s(), System::t(), ideal_from({{1, 0}, {0, 1}}, N2)).is_whole());
    auto G = M("numerical 2 3");
    CHECK(modular_close(System::s(), System::t(), ideal_from({{4}, {5}}, G)) == ideal_from({{4}, {5}}, G));
    for (const char* spec : kModels) {
        auto K = M(spec);
        CHECK(modular_close(System::s(), System::t(), Ideal::whole(K)).is_whole());
    }
}

TEST_CASE("mod(s,s) is s and mod(w,t) is w") {
    for (const char* spec : kModels) {
        auto H = M(spec);
        ClosureOp s(H, System::s()), ss(H, System::mod(System::s(), System::s()));
        ClosureOp w(H, System::w()), wt(H, System::mod(System::w(), System::t()));
        std::mt19937_64 rng(21);
        auto box = H->enumerate(5);
        for (int n = 0; n < 60; ++n) {
            Ideal X = Ideal::from(H, detail::sample_subset(box, rng, 3));
            CHECK(ss.close(X) == s.close(X));
            CHECK(wt.close(X) == w.close(X));
        }
    }
}

TEST_CASE("axioms hold for s, t, w and fail for a corrupted closure") {
    for (const char* spec : kModels) {
        auto H = M(spec);
        for (auto sys : {System::s(), System::t(), System::w()}) {
            auto rep = axioms_check(ClosureOp(H, sys), 200, 5, 42);
            INFO(spec << " " << sys.name() << " " << rep.failed_axiom << " " << rep.witness);
            CHECK(rep.pass);
        }
    }
    auto H = M("numerical 2 3");
    auto broken = [&](const Ideal& X) {
        auto g = X.gens();
        if (!g.empty()) g.erase(g.begin());
        return Ideal::from(X.monoid_ptr(), g);
    };
    auto rep = axioms_check(H, broken, "broken", 200, 5, 42);
    CHECK_FALSE(rep.pass);
    CHECK(rep.failed_axiom == "A");
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("leq_check reports the chain s <= w <= t") {
    auto H = M("numerical 3 4 5");
    ClosureOp s(H, System::s()), w(H, System::w()), t(H, System::t());
    auto st = leq_check(s, t, 200, 5, 1);
    CHECK(st.pass);
    CHECK(st.strict_witness.has_value());
    auto wt = leq_check(w, t, 200, 5, 1);
    CHECK(wt.pass);
    CHECK(wt.strict_witness.has_value());
    auto ss = leq_check(s, s, 200, 5, 1);
    CHECK(ss.pass);
    CHECK_FALSE(ss.strict_witness.has_value());
    Ideal X = ideal_from({{3}, {4}}, H);
    CHECK(s.close(X) != t.close(X));
    CHECK(w.close(X) != t.close(X));
    for (const char* spec : kModels) {
        auto K = M(spec);
        ClosureOp a(K, System::s()), b(K, System::w()), c(K, System::t());
        CHECK(leq_check(a, b, 100, 5, 9).pass);
        CHECK(leq_check(b, c, 100, 5, 9).pass);
    }
}

TEST_CASE("intersection formula matches the definitional predicate") {
    for (const char* spec : kModels) {
        auto H = M(spec);
        ClosureOp w(H, System::w());
        auto pool = H->enumerate(H->rank() == 1 ? 6 : 3);
        const i64 radius = H->rank() == 1 ? 14 : 6;
        for (const auto& g : oracle::small_subsets(pool, 2)) {
            Ideal X = Ideal::from(H, g);
            Ideal Xw = w.close(X);
            for (const auto& x : H->enumerate(H->rank() == 1 ? 10 : 4)) {
                INFO(spec << " X=" << X.str() << " x=" << x.str());
                CHECK(Xw.contains(x) == w.definitional_member(X, x, radius));
            }
        }
    }
}

TEST_CASE("r-max agrees for t and its modularization") {
    for (const char* spec : kModels) {
        auto H = M(spec);
        auto a = r_max(H, System::t());
        auto b = r_max(H, System::w());
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].ideal == b[i].ideal);
    }
}

TEST_CASE("group models close every nonempty set to H") {
    auto Z = M("group 2");
    ClosureOp t(Z, System::t()), w(Z, System::w());
    for (const auto& x : Z->enumerate(2)) {
        CHECK(t.close(Ideal::principal(Z, x)).is_whole());
        CHECK(w.close(Ideal::principal(Z, x)).is_whole());
    }
}

TEST_CASE("modular law holds for s and w on small closed triples") {
    for (const char* spec : {"numerical 2 3", "numerical 3 4 5", "free 2", "numerical 2 3 | free 1"}) {
        auto H = M(spec);
        for (auto sys : {System::s(), System::w()}) {
            ClosureOp op(H, sys);
            auto fam = closed_family(op, H->rank() == 1 ? 5 : 2);
            std::size_t checked = 0;
            for (const auto& I : fam)
                for (const auto& N : fam) {
                    if (!ideal_subset(I, N)) continue;
                    for (const auto& J : fam) {
                        Ideal lhs = ideal_intersect(op.close(ideal_union(I, J)), N);
                        Ideal rhs = op.close(ideal_union(I, ideal_intersect(J, N)));
                        INFO(spec << " " << sys.name() << " I=" << I.str() << " J=" << J.str() << " N=" << N.str());
                        CHECK(ideal_subset(lhs, rhs));
                        ++checked;
                    }
                }
            CHECK(checked > 0);
        }
    }
}
