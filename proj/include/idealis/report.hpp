#pragma once
// JSON and CSV renderings of library results. JSON objects keep insertion
// order so that identical inputs serialize to identical bytes.

#include <cstdint>
#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"

namespace idealis {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

inline Json to_json(const GroupVector& g) {
    Json a = Json::array();
    for (i64 v : g) a.push_back(v);
    return a;
}

inline Json to_json(const Ideal& I) {
    Json gens = Json::array();
    for (const auto& g : I.gens()) gens.push_back(to_json(g));
    return Json{{"gens", gens}, {"kind", to_string(I.kind())}};
}

inline Json optional_ideal(const std::optional<Ideal>& I) { return I ? to_json(*I) : Json(nullptr); }

inline Json to_json(const PropertyVerdict& v) {
    return Json{{"property", v.property}, {"system", v.system},   {"verdict", to_string(v.verdict)},
                {"witness", optional_ideal(v.witness)},           {"detail", v.detail},
                {"basis", v.basis},       {"radius", v.radius}};
}

inline Json to_json(const TfaeReport& r) {
    Json conds = Json::array();
    for (const auto& c : r.conditions) {
        Json parts = Json::array();
        for (const auto& p : c.parts) parts.push_back(to_json(p));
        Json cj{{"label", c.label}, {"statement", c.statement}, {"verdict", to_string(c.verdict)}, {"parts", parts},
                {"skipped", c.skipped}};
        if (!c.group.empty()) cj["group"] = c.group;
        conds.push_back(std::move(cj));
    }
    Json j{{"suite", r.suite},           {"title", r.title},         {"system", r.system},
           {"radius", r.radius},         {"applicable", r.applicable}, {"agreement", r.agreement},
           {"conditions", conds},        {"notes", r.notes}};
    if (r.identity_holds) j["identity_holds"] = *r.identity_holds;
    return j;
}

inline Json to_json(const Failure& f) {
    return Json{{"reason", to_string(f.reason)}, {"witness", optional_ideal(f.witness)}, {"detail", f.detail}};
}

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline Json to_json(const Outcome<FactorChain>& out) {
    if (const auto* f = std::get_if<Failure>(&out)) return Json{{"ok", false}, {"failure", to_json(*f)}};
    const auto& c = std::get<FactorChain>(out);
    Json chain = Json::array();
    std::string hash_input;
    for (const auto& f : c.factors) {
        chain.push_back(to_json(f));
        hash_input += f.str() + ";";
    }
    return Json{{"ok", true},
                {"system", c.system},
                {"target", to_json(c.target)},
                {"chain", chain},
                {"comparable", c.comparable},
                {"reassembles", c.reassembles},
                {"reassembly_hash", fnv1a_hex(hash_input + "=" + c.target.str())}};
}

/// Prime list with closure flags for one system; keys are "<system>_ideal" and "<system>_max".
inline Json spectrum_json(const ClosureOp& op) {
    const auto& H = op.monoid_ptr();
    const std::string sys = op.system().name();
    Json primes = Json::array();
    for (const auto& p : op.spectrum().primes()) {
        bool closed = std::find(op.closed_primes().begin(), op.closed_primes().end(), p) != op.closed_primes().end();
        bool maximal = std::find(op.max_primes().begin(), op.max_primes().end(), p) != op.max_primes().end();
        primes.push_back(Json{{"face", p.face_indices(H->rank())},
                              {"height", p.height},
                              {sys + "_ideal", closed},
                              {sys + "_max", maximal},
                              {"ideal", to_json(p.ideal)}});
    }
    return Json{{"dimension", op.spectrum().dimension()}, {"primes", primes}};
}

inline Json to_json(const CheckReport& r) {
    return Json{{"system", r.name}, {"pass", r.pass}, {"samples", r.samples}, {"seed", r.seed},
                {"failed_axiom", r.failed_axiom}, {"witness", r.witness}};
}

inline Json to_json(const Classification& c) {
    Json primes = Json::array();
    for (const auto& p : c.primes) {
        Json closed = Json::object(), maximal = Json::object();
        for (const auto& [k, v] : p.closed) closed[k] = v;
        for (const auto& [k, v] : p.maximal) maximal[k] = v;
        primes.push_back(Json{{"face", p.face}, {"height", p.height}, {"ideal", to_json(p.ideal)},
                              {"closed", closed}, {"maximal", maximal}});
    }
    Json props = Json::array();
    for (const auto& v : c.properties) props.push_back(to_json(v));
    Json suites = Json::array();
    for (const auto& s : c.suites) suites.push_back(to_json(s));
    return Json{{"spectrum", Json{{"dimension", c.dimension}, {"primes", primes}}},
                {"properties", props},
                {"suites", suites},
                {"all_agree", c.all_agree}};
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
    return line + "\n";
}

inline std::string csv_header() {
    return csv_row({"monoid", "record", "system", "name", "label", "verdict", "witness", "detail"});
}

inline std::string csv_rows(const std::string& monoid, const TfaeReport& r) {
    std::string out;
    for (const auto& c : r.conditions) {
        std::string detail;
        for (const auto& sk : c.skipped) detail += (detail.empty() ? "skipped: " : " ") + sk;
        out += csv_row({monoid, "suite", r.system, r.suite, c.label, to_string(c.verdict), "", detail});
    }
    return out;
}

/// One row per property verdict and one per suite condition.
inline std::string csv_rows(const std::string& monoid, const Classification& c) {
    std::string out;
    for (const auto& v : c.properties)
        out += csv_row({monoid, "property", v.system, v.property, "", to_string(v.verdict),
                        v.witness ? v.witness->str() : "", v.detail});
    for (const auto& s : c.suites) out += csv_rows(monoid, s);
    return out;
}

}  // namespace idealis
