#include <doctest.h>

#include "idealis/systems.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

MonoidPtr M(const char* spec) { return make_monoid(parse_monoid(spec)); }

std::vector<int> heights(const Spectrum& s) {
    std::vector<int> h;
    for (const auto& p : s.primes()) h.push_back(p.height);
    return h;
}

}  // namespace

TEST_CASE("spectrum of N^2") {
    auto H = M("free 2");
    Spectrum s(H);
    REQUIRE(s.primes().size() == 3);
    CHECK(heights(s) == std::vector<int>{1, 1, 2});
    CHECK(s.height_one().size() == 2);
    CHECK(s.primes()[0].ideal == Ideal::principal(H, {0, 1}));
    CHECK(s.primes()[1].ideal == Ideal::principal(H, {1, 0}));
    CHECK(s.maximal()->ideal == ideal_from({{1, 0}, {0, 1}}, H));
    CHECK(s.dimension() == 2);
    auto over = s.minimal_primes_over(Ideal::principal(H, {1, 1}));
    CHECK(over.size() == 2);
    CHECK(s.minimal_primes_over(Ideal::whole(H)).empty());
}

TEST_CASE("spectrum of <2,3> and <2,3> x N") {
    auto G = M("numerical 2 3");
    Spectrum sg(G);
    REQUIRE(sg.primes().size() == 1);
    CHECK(sg.primes()[0].ideal == ideal_from({{2}, {3}}, G));
    CHECK(sg.primes()[0].height == 1);

    auto H = M("numerical 2 3 | free 1");
    Spectrum s(H);
    REQUIRE(s.primes().size() == 3);
    CHECK(heights(s) == std::vector<int>{1, 1, 2});
    Ideal P = Ideal::principal(H, {0, 1});
    Ideal Q = ideal_from({{2, 0}, {3, 0}}, H);
    CHECK(s.find(P) != nullptr);
    CHECK(s.find(Q) != nullptr);
    auto over = s.minimal_primes_over(Ideal::principal(H, {2, 0}));
    REQUIRE(over.size() == 1);
    CHECK(over[0].ideal == Q);

    auto tmax = r_max(H, System::t());
    REQUIRE(tmax.size() == 2);
    CHECK(((tmax[0].ideal == P && tmax[1].ideal == Q) || (tmax[0].ideal == Q && tmax[1].ideal == P)));
    auto smax = r_max(H, System::s());
    REQUIRE(smax.size() == 1);
    CHECK(smax[0].ideal == s.maximal()->ideal);
    CHECK(r_max(G, System::t()).size() == 1);
}

TEST_CASE("group models have empty spectra") {
    auto Z = M("group 1");
    Spectrum s(Z);
    CHECK(s.primes().empty());
    CHECK(s.height_one().empty());
    CHECK(s.maximal() == nullptr);
    CHECK(is_dvm(Z) == Verdict::NotApplicable);
}

TEST_CASE("localization at primes") {
    auto N2 = M("free 2");
    Spectrum s(N2);
    const PrimeIdeal* p1 = s.find(Ideal::principal(N2, {1, 0}));
    REQUIRE(p1);
    auto L = localize(*N2, *p1);
    CHECK(L->coord(0).kind() == CoordKind::Free);
    CHECK(L->coord(1).is_group());
    auto G = M("numerical 2 3");
    CHECK(localize(*G, *Spectrum(G).maximal())->same_monoid(*G));
    auto H = M("numerical 2 3 | free 1");
    Spectrum sh(H);
    auto LQ = localize(*H, *sh.find(ideal_from({{2, 0}, {3, 0}}, H)));
    CHECK(LQ->same_monoid(parse_monoid("numerical 2 3 | group 1")));
}

TEST_CASE("DVM detection") {
    CHECK(is_dvm(M("free 1")) == Verdict::True);
    CHECK(is_dvm(M("numerical 2 3")) == Verdict::False);
    CHECK(is_dvm(M("free 1 | group 2")) == Verdict::True);
    CHECK(is_dvm(M("free 2")) == Verdict::False);
}

TEST_CASE("primes are prime on the box and radicals are intersections of minimal primes") {
    for (const char* spec : {"numerical 2 3", "numerical 3 5 7", "free 2", "free 3", "numerical 2 3 | free 1",
                             "numerical 2 3 | numerical 2 5", "free 1 | group 1"}) {
        auto H = M(spec);
        Spectrum s(H);
        for (const auto& p : s.primes()) CHECK(is_prime_on_box(p.ideal, 5));
        // Heights match chain lengths: each prime of height h > 1 strictly contains one of height h - 1.
        for (const auto& p : s.primes())
            if (p.height > 1)
                CHECK(std::any_of(s.primes().begin(), s.primes().end(), [&](const PrimeIdeal& q) {
                    return q.height == p.height - 1 && q.ideal != p.ideal && ideal_subset(q.ideal, p.ideal);
                }));
        auto pool = H->enumerate(H->rank() == 1 ? 6 : 3);
        for (const auto& g : oracle::small_subsets(pool, 2)) {
            Ideal I = Ideal::from(H, g);
            if (I.is_whole()) continue;
            Ideal meet;
            bool first = true;
            for (const auto& p : s.minimal_primes_over(I)) {
                meet = first ? p.ideal : ideal_intersect(meet, p.ideal);
                first = false;
            }
            REQUIRE_FALSE(first);
            CHECK(radical(I) == meet);
        }
    }
}

TEST_CASE("affine spectra are not certified") {
    auto A = make_monoid(MonoidModel::affine("cone", {{2, 0}, {1, 1}, {0, 2}}));
    CHECK_THROWS_AS(Spectrum{A}, UncertifiedError);
}
