#include <doctest.h>

#include "idealis/report.hpp"

using namespace idealis;

namespace {

MonoidPtr M(const char* spec) { return make_monoid(parse_monoid(spec)); }

}  // namespace

TEST_CASE("FNV-1a reference values") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("CSV quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_row({"x", "{(2),(3)}", ""}) == "x,\"{(2),(3)}\",\n");
    CHECK(csv_header().rfind("monoid,record,", 0) == 0);
}

TEST_CASE("ideal and verdict JSON") {
    auto H = M("free 2");
    Json j = to_json(ideal_from({{1, 0}, {0, 1}}, H));
    CHECK(j["kind"] == "integral");
    CHECK(j["gens"].size() == 2);
    CHECK(j.dump() == R"({"gens":[[0,1],[1,0]],"kind":"integral"})");
    auto v = evaluate(M("numerical 2 3"), System::t(), "SP", 8);
    Json vj = to_json(v);
    CHECK(vj["verdict"] == "false");
    CHECK(vj["witness"].is_object());
    CHECK(vj["system"] == "t");
}

TEST_CASE("spectrum JSON carries per-system flags") {
    auto H = M("numerical 2 3 | free 1");
    Json t = spectrum_json(ClosureOp(H, System::t()));
    CHECK(t["dimension"] == 2);
    REQUIRE(t["primes"].size() == 3);
    int t_max = 0;
    for (const auto& p : t["primes"]) {
        CHECK(p.contains("t_ideal"));
        t_max += p["t_max"].get<bool>();
    }
    CHECK(t_max == 2);
    Json s = spectrum_json(ClosureOp(H, System::s()));
    int s_max = 0;
    for (const auto& p : s["primes"]) s_max += p["s_max"].get<bool>();
    CHECK(s_max == 1);
}

TEST_CASE("factor JSON") {
    auto H = M("free 2");
    ClosureOp t(H, System::t());
    Json ok = to_json(sp_factor(t, ideal_from({{2, 1}}, H)));
    CHECK(ok["ok"] == true);
    CHECK(ok["chain"].dump() == R"([{"gens":[[1,1]],"kind":"integral"},{"gens":[[1,0]],"kind":"integral"}])");
    CHECK(ok["reassembles"] == true);
    CHECK(ok["reassembly_hash"].get<std::string>().size() == 16);

    auto G = M("numerical 2 3");
    Json bad = to_json(radical_factor_principal(G, GroupVector{2}));
    CHECK(bad["ok"] == false);
    CHECK(bad["failure"]["reason"] == "NonPrincipalRadical");
}

TEST_CASE("classification JSON is byte-identical across runs") {
    auto H = M("numerical 2 3 | free 1");
    std::string a = to_json(classify(H, 5)).dump();
    std::string b = to_json(classify(H, 5)).dump();
    CHECK(a == b);
    Json j = Json::parse(a);
    CHECK(j["all_agree"] == true);
    CHECK(j["spectrum"]["primes"].size() == 3);
    CHECK_FALSE(j["suites"].empty());
    std::string csv = csv_rows("S2_3xN", classify(H, 5));
    CHECK(csv.find("S2_3xN,property,t,SP,,false,") != std::string::npos);
    CHECK(csv.find("S2_3xN,suite,t,Thm4.2,1,false") != std::string::npos);
}
