#include <doctest.h>

#include <random>
#include <set>

#include "idealis/monoid.hpp"

using namespace idealis;

namespace {

// Brute force: all non-negative combinations of gens up to `limit`.
std::set<i64> combos(const std::vector<i64>& gens, i64 limit) {
    std::set<i64> out{0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (i64 x : std::vector<i64>(out.begin(), out.end()))
            for (i64 g : gens)
                if (x + g <= limit && out.insert(x + g).second) grew = true;
    }
    return out;
}

}  // namespace

TEST_CASE("parse numerical 2 3 gives gaps {1} and Frobenius 1") {
    auto H = parse_monoid("numerical 2 3");
    REQUIRE(H.rank() == 1);
    auto reach = combos({2, 3}, 10);
    std::vector<i64> oracle_gaps;
    for (i64 v = 0; v <= 10; ++v)
        if (!reach.count(v)) oracle_gaps.push_back(v);
    CHECK(H.coord(0).gaps() == oracle_gaps);
    CHECK(H.coord(0).frobenius() == 1);
}

TEST_CASE("parse free 2 and compact products") {
    auto N2 = parse_monoid("free 2");
    CHECK(N2.rank() == 2);
    CHECK(N2.coord(0).gaps().empty());
    auto P = parse_monoid("numerical 2 3 | free 1");
    CHECK(P.rank() == 2);
    CHECK(P.coord(0).kind() == CoordKind::Numerical);
    CHECK(P.coord(1).kind() == CoordKind::Free);
}

TEST_CASE("full grammar with name and coord lines") {
    auto H = parse_monoid("name = gap23xN\ncoord = numerical 2 3\ncoord = free 1\n");
    CHECK(H.name() == "gap23xN");
    CHECK(H.rank() == 2);
    auto A = parse_monoid("name = cone\naffine = (2,0) (1,1) (0,2)\n");
    CHECK(A.is_affine());
    CHECK(A.rank() == 2);
    CHECK(parse_monoid(H.to_spec()).same_monoid(H));
}

TEST_CASE("parse errors report position") {
    CHECK_THROWS_AS(parse_monoid("name = x\ncoord = numerical 2 4\n"), ParseError);
    CHECK_THROWS_AS(parse_monoid("name = x\ncoord = numerical\n"), ParseError);
    try {
        parse_monoid("name = x\ncoord = bogus 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 9);
    }
    try {
        parse_monoid("name = x\ncoord = free 1 @\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("numerical semigroup caches match brute force") {
    for (auto gens : std::vector<std::vector<i64>>{{3, 4, 5}, {2, 5}, {3, 5, 7}, {4, 6, 9}, {5, 7, 9, 11}}) {
        auto c = Coordinate::numerical(gens);
        auto reach = combos(gens, 200);
        i64 frob = -1;
        for (i64 v = 0; v <= 200; ++v)
            if (!reach.count(v)) frob = v;
        CHECK(c.frobenius() == frob);
        for (i64 v = -3; v <= 60; ++v) CHECK(c.contains(v) == (v >= 0 && reach.count(v) > 0));
    }
    CHECK(Coordinate::numerical({3, 4, 5, 6, 7, 8}).generators() == std::vector<i64>{3, 4, 5});
    CHECK(Coordinate::numerical({1, 5}).kind() == CoordKind::Free);
}

TEST_CASE("contains") {
    auto H = make_monoid(parse_monoid("numerical 2 3"));
    CHECK_FALSE(H->contains({1}));
    CHECK(H->contains({0}));
    auto P = parse_monoid("numerical 2 3 | free 1");
    CHECK(P.contains({5, 7}));
    CHECK_THROWS_AS(P.contains({5}), DimensionError);
}

TEST_CASE("divides") {
    auto N2 = parse_monoid("free 2");
    CHECK(N2.divides({1, 1}, {2, 1}));
    auto H = parse_monoid("numerical 2 3");
    CHECK_FALSE(H.divides({2}, {3}));
    CHECK(H.divides({0}, {7}));
}

TEST_CASE("enumerate") {
    auto H = parse_monoid("numerical 2 3");
    std::vector<GroupVector> e1{{0}, {2}, {3}, {4}, {5}};
    CHECK(H.enumerate(5) == e1);
    std::vector<GroupVector> e2{{0}, {1}, {2}};
    CHECK(parse_monoid("free 1").enumerate(2) == e2);
    std::vector<GroupVector> e3{{0}, {3}, {4}, {5}, {6}};
    CHECK(parse_monoid("numerical 3 4 5").enumerate(6) == e3);
    auto Z = parse_monoid("free 1 | group 1");
    CHECK(Z.enumerate(1).size() == 6);
}

TEST_CASE("localize by faces") {
    auto N2 = parse_monoid("free 2");
    // Inverting the second coordinate gives N x Z.
    auto L = N2.localize_face(0b10);
    CHECK(L.coord(0).kind() == CoordKind::Free);
    CHECK(L.coord(1).kind() == CoordKind::Group);
    auto P = parse_monoid("numerical 2 3 | free 1");
    auto Q = P.localize_face(0b10);
    CHECK(Q.coord(0).generators() == std::vector<i64>{2, 3});
    CHECK(Q.coord(1).is_group());
    CHECK(parse_monoid("numerical 2 3").localize_face(0).same_monoid(parse_monoid("numerical 2 3")));
}

TEST_CASE("monoid properties on sampled pairs") {
    std::mt19937_64 rng(7);
    for (const char* spec : {"numerical 3 4 5", "numerical 2 3 | free 1", "free 1 | group 1", "numerical 2 3 | numerical 2 5"}) {
        auto H = parse_monoid(spec);
        auto box = H.enumerate(6);
        std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
        CHECK(H.contains(GroupVector::zero(H.rank())));
        for (int n = 0; n < 1000; ++n) {
            const auto& a = box[pick(rng)];
            const auto& b = box[pick(rng)];
            const auto& c = box[pick(rng)];
            CHECK(H.contains(a + b));
            CHECK(H.divides(a, a));
            if (H.divides(a, b) && H.divides(b, c)) CHECK(H.divides(a, c));
        }
        // localization contains H, and iterated localization matches a single one
        for (CoordMask f = 0; f < (CoordMask{1} << H.rank()); ++f) {
            auto L = H.localize_face(f);
            for (const auto& x : box) CHECK(L.contains(x));
            for (CoordMask g = 0; g <= f; ++g) {
                if ((g & f) != g) continue;
                auto LL = H.localize_face(g).localize_face(f);
                for (const auto& x : L.enumerate(4)) CHECK(LL.contains(x) == L.contains(x));
            }
        }
    }
}

TEST_CASE("affine membership agrees with the product model where both apply") {
    auto A = MonoidModel::affine("n2", {{1, 0}, {0, 1}});
    auto P = parse_monoid("free 2");
    for (i64 x = -2; x <= 4; ++x)
        for (i64 y = -2; y <= 4; ++y) CHECK((A.membership({x, y}) == Membership::Yes) == P.contains({x, y}));
    auto C = MonoidModel::affine("cone", {{2, 0}, {1, 1}, {0, 2}});
    CHECK(C.membership({1, 1}) == Membership::Yes);
    CHECK(C.membership({1, 0}) == Membership::No);
    auto U = MonoidModel::affine("half", {{1, 0}, {-1, 1}});
    CHECK(U.membership({-1, 1}) == Membership::Yes);
    CHECK(U.membership({0, -1}, 6) == Membership::Undecided);
}

TEST_CASE("checked arithmetic refuses overflow") {
    GroupVector a{std::numeric_limits<i64>::max()};
    CHECK_THROWS_AS(a + GroupVector{1}, OverflowError);
    CHECK_THROWS_AS(3 * a, OverflowError);
}
