// Command-line front end: analyze, closure, factor, spectrum, verify, corpus.
//
// Exit status: 0 on success, 1 when a suite disagrees, an axiom check fails
// or (with --strict) a model is uncertified, 2 on usage, I/O or parse errors.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <idealis/idealis.hpp>

namespace fs = std::filesystem;
using namespace idealis;

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string system = "t";
    std::string suite;
    std::string element;
    std::string mode = "sp";
    i64 radius = 8;
    std::uint64_t seed = 1;
    Format format = Format::Text;
    bool strict = false;
    bool timing = false;
    unsigned jobs = 0;
    std::size_t axiom_samples = 200;
    i64 axiom_radius = 5;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string file;  ///< path as given or discovered
    std::string name;
    MonoidPtr monoid;
};

/// Outcome of one per-monoid task.
struct TaskResult {
    Json json = Json::object();
    std::string text;
    std::string csv;
    bool failed = false;       ///< disagreement or axiom failure
    bool uncertified = false;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Input> load_inputs(const std::vector<std::string>& paths) {
    std::vector<fs::path> files;
    for (const auto& p : paths) {
        fs::path path(p);
        if (fs::is_directory(path)) {
            std::vector<fs::path> found;
            for (const auto& e : fs::directory_iterator(path))
                if (e.is_regular_file() && e.path().extension() == ".spec") found.push_back(e.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (fs::exists(path)) {
            files.push_back(path);
        } else {
            throw std::runtime_error("no such file or directory: " + p);
        }
    }
    std::vector<Input> out;
    for (const auto& f : files) {
        std::string text = read_file(f);
        try {
            MonoidModel m = parse_monoid(text);
            std::string name = m.name() == "anonymous" ? f.stem().string() : m.name();
            out.push_back({f.string(), name, make_monoid(std::move(m))});
        } catch (const ParseError& e) {
            throw std::runtime_error(f.string() + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " +
                                     e.what());
        }
    }
    return out;
}

/// "2,1" is one element; "2,1;0,3" and "2,1 0,3" are lists of generators.
std::vector<GroupVector> parse_elements(const std::string& raw, std::size_t rank) {
    // Generators are separated by ';' or blanks; blanks next to a comma belong to the element.
    std::string text;
    for (char c : raw) {
        if (c == ';' || c == '\t') c = ' ';
        if (c == ' ' && (text.empty() || text.back() == ' ' || text.back() == ',')) continue;
        if (c == ',' && !text.empty() && text.back() == ' ') text.pop_back();
        text += c;
    }
    std::vector<GroupVector> out;
    std::istringstream groups(text);
    std::string group;
    while (groups >> group) {
        std::vector<i64> xs;
        std::stringstream parts(group);
        std::string part;
        while (std::getline(parts, part, ',')) {
            try {
                std::size_t used = 0;
                xs.push_back(std::stoll(part, &used));
                if (used != part.size()) throw std::invalid_argument(part);
            } catch (const std::logic_error&) {
                throw UsageError("bad integer '" + part + "' in --element");
            }
        }
        if (xs.size() != rank)
            throw UsageError("--element '" + group + "' has " + std::to_string(xs.size()) + " coordinates, the monoid has rank " +
                             std::to_string(rank));
        out.push_back(GroupVector(xs));
    }
    if (out.empty()) throw UsageError("--element is empty");
    return out;
}

std::string truth_letter(Truth t) { return t == Truth::True ? "T" : t == Truth::False ? "F" : "?"; }

Json config_json(const RunConfig& cfg) {
    Json j{{"radius", cfg.radius}, {"seed", cfg.seed}, {"system", cfg.system}};
    if (cfg.command == "verify") j["suite"] = cfg.suite;
    if (cfg.command == "factor") j["mode"] = cfg.mode;
    if (!cfg.element.empty()) j["element"] = cfg.element;
    if (cfg.command == "analyze") j["axiom_samples"] = cfg.axiom_samples;
    j["strict"] = cfg.strict;
    return j;
}

EvalConfig eval_config(const RunConfig& cfg) {
    EvalConfig ec;
    ec.radius = cfg.radius;
    ec.seed = cfg.seed;
    return ec;
}

std::string describe(const Ideal& I) { return I.str(); }

// ---------------------------------------------------------------------------
// Per-command tasks

TaskResult run_analyze(const RunConfig& cfg, const Input& in) {
    TaskResult r;
    Context ctx(in.monoid, eval_config(cfg));
    Json axioms = Json::array();
    std::ostringstream text;
    text << "== " << in.name << " (" << in.file << ")\n";
    for (const auto& sys : matrix_systems()) {
        CheckReport rep = axioms_check(ctx.op(sys), cfg.axiom_samples, cfg.axiom_radius, cfg.seed);
        axioms.push_back(to_json(rep));
        if (!rep.pass) {
            r.failed = true;
            text << "  axiom " << rep.failed_axiom << " fails for " << rep.name << ": " << rep.witness << "\n";
        }
    }
    Classification c = classify(ctx);
    r.failed = r.failed || !c.all_agree;
    r.json = to_json(c);
    r.json["axioms"] = axioms;
    r.csv = csv_rows(in.name, c);

    text << "  dimension " << c.dimension << ", " << c.primes.size() << " nonzero primes\n";
    for (const auto& p : c.primes) {
        text << "    face {";
        for (std::size_t i = 0; i < p.face.size(); ++i) text << (i ? "," : "") << p.face[i];
        text << "} height " << p.height << "  t-ideal " << (p.closed.at("t") ? "yes" : "no") << "  t-max "
             << (p.maximal.at("t") ? "yes" : "no") << "\n";
    }
    for (const auto& v : c.properties) {
        text << "  " << std::left << std::setw(2) << v.system << " " << std::setw(44) << v.property << " "
             << to_string(v.verdict);
        if (v.witness) text << "  witness " << describe(*v.witness);
        text << "\n";
    }
    for (const auto& s : c.suites) {
        text << "  suite " << std::setw(8) << s.suite << " [" << s.system << "] ";
        for (const auto& cond : s.conditions) text << truth_letter(cond.verdict);
        text << (s.agreement ? "  agree" : "  DISAGREE") << "\n";
    }
    r.text = text.str();
    return r;
}

TaskResult run_verify(const RunConfig& cfg, const Input& in) {
    TaskResult r;
    Context ctx(in.monoid, eval_config(cfg));
    TfaeReport rep = tfae_suite(ctx, cfg.suite, System::parse(cfg.system));
    r.failed = rep.applicable && !rep.agreement;
    r.json = to_json(rep);
    r.csv = csv_rows(in.name, rep);
    std::ostringstream text;
    text << in.name << "  " << rep.suite << " [" << rep.system << "]";
    if (!rep.applicable) {
        text << " not applicable\n";
    } else {
        text << (rep.agreement ? " agreement\n" : " DISAGREEMENT\n");
        for (const auto& c : rep.conditions) {
            text << "  (" << c.label << ") " << to_string(c.verdict);
            for (const auto& p : c.parts)
                if (p.witness && p.verdict == Truth::False) {
                    text << "  witness " << describe(*p.witness) << " [" << p.property << "]";
                    break;
                }
            text << "\n";
        }
    }
    for (const auto& n : rep.notes) text << "  note: " << n << "\n";
    r.text = text.str();
    return r;
}

TaskResult run_spectrum(const RunConfig& cfg, const Input& in) {
    TaskResult r;
    ClosureOp op(in.monoid, System::parse(cfg.system));
    r.json = spectrum_json(op);
    const std::string sys = op.system().name();
    std::ostringstream text;
    text << in.name << "  dimension " << op.spectrum().dimension() << "\n";
    for (const auto& p : r.json["primes"]) {
        std::string face;
        for (const auto& i : p["face"]) face += (face.empty() ? "" : ",") + std::to_string(i.get<std::size_t>());
        text << "  face {" << face << "} height " << p["height"].get<int>() << "  " << sys << "-ideal "
             << (p[sys + "_ideal"].get<bool>() ? "yes" : "no") << "  " << sys << "-max "
             << (p[sys + "_max"].get<bool>() ? "yes" : "no") << "\n";
        r.csv += csv_row({in.name, "prime", sys, face, std::to_string(p["height"].get<int>()),
                          p[sys + "_ideal"].get<bool>() ? "true" : "false", "", p[sys + "_max"].get<bool>() ? "max" : ""});
    }
    r.text = text.str();
    return r;
}

TaskResult run_closure(const RunConfig& cfg, const Input& in) {
    TaskResult r;
    ClosureOp op(in.monoid, System::parse(cfg.system));
    Ideal X = Ideal::from(in.monoid, parse_elements(cfg.element, in.monoid->rank()));
    Ideal Xr = op.close(X);
    r.json = Json{{"input", to_json(X)}, {"closure", to_json(Xr)}, {"closed", X == Xr}};
    r.text = in.name + "  " + X.str() + "_" + op.system().name() + " = " + Xr.str() + "\n";
    r.csv = csv_row({in.name, "closure", op.system().name(), X.str(), "", X == Xr ? "closed" : "not closed", Xr.str(), ""});
    return r;
}

TaskResult run_factor(const RunConfig& cfg, const Input& in) {
    TaskResult r;
    ClosureOp op(in.monoid, System::parse(cfg.system));
    auto gens = parse_elements(cfg.element, in.monoid->rank());
    Outcome<FactorChain> out = [&]() -> Outcome<FactorChain> {
        if (cfg.mode == "principal") {
            if (gens.size() != 1) throw UsageError("--mode principal takes a single element");
            return radical_factor_principal(in.monoid, gens.front());
        }
        Ideal I = op.close(Ideal::from(in.monoid, gens));
        if (cfg.mode == "sp") return sp_factor(op, I);
        return meager_factor(op, I);
    }();
    r.json = to_json(out);
    std::ostringstream text;
    text << in.name << "  " << cfg.mode << " factorization";
    if (const auto* f = std::get_if<Failure>(&out)) {
        text << " failed: " << to_string(f->reason);
        if (f->witness) text << "  witness " << describe(*f->witness);
        text << "  (" << f->detail << ")\n";
        r.csv = csv_row({in.name, "factor", cfg.system, cfg.mode, "", "failed", f->witness ? f->witness->str() : "",
                         to_string(f->reason)});
    } else {
        const auto& c = std::get<FactorChain>(out);
        text << " of " << c.target.str() << " [" << c.system << "]\n";
        std::string chain;
        for (const auto& f : c.factors) {
            text << "  " << f.str() << "\n";
            chain += (chain.empty() ? "" : " ") + f.str();
        }
        text << "  comparable " << (c.comparable ? "yes" : "no") << ", reassembles " << (c.reassembles ? "yes" : "no")
             << "\n";
        r.csv = csv_row({in.name, "factor", c.system, cfg.mode, "", "ok", chain, c.comparable ? "comparable" : ""});
    }
    r.text = text.str();
    return r;
}

// ---------------------------------------------------------------------------

/// Runs `task` on every input with a small worker pool; results keep input order.
std::vector<TaskResult> run_all(const RunConfig& cfg, const std::vector<Input>& inputs,
                                const std::function<TaskResult(const RunConfig&, const Input&)>& task) {
    std::vector<TaskResult> results(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < inputs.size();) {
            const Input& in = inputs[i];
            TaskResult& r = results[i];
            auto start = std::chrono::steady_clock::now();
            try {
                if (in.monoid->is_affine()) throw UncertifiedError("affine models are outside the certified product class");
                r = task(cfg, in);
            } catch (const UncertifiedError& e) {
                r = TaskResult{};
                r.uncertified = true;
                r.json = Json{{"error", e.what()}};
                r.text = in.name + "  uncertified: " + e.what() + "\n";
                r.csv = csv_row({in.name, "error", cfg.system, cfg.command, "", "uncertified", "", e.what()});
            }
            Json head{{"monoid", in.name}, {"file", in.file}, {"spec", in.monoid->to_spec()}, {"certified", !r.uncertified}};
            for (auto& [k, v] : r.json.items()) head[k] = v;
            if (cfg.timing)
                head["timing_ms"] =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            r.json = std::move(head);
        }
    };
    unsigned n = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(inputs.size(), 1)));
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mu;
    for (unsigned k = 0; k < n; ++k)
        pool.emplace_back([&] {
            try {
                worker();
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                next = inputs.size();
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

int emit(const RunConfig& cfg, const std::vector<TaskResult>& results) {
    std::size_t failed = 0, uncertified = 0;
    for (const auto& r : results) {
        failed += r.failed;
        uncertified += r.uncertified;
    }
    switch (cfg.format) {
        case Format::Json: {
            Json reports = Json::array();
            for (const auto& r : results) reports.push_back(r.json);
            Json doc{{"schema", kSchemaVersion},
                     {"tool", "idealis"},
                     {"version", kToolVersion},
                     {"command", cfg.command},
                     {"config", config_json(cfg)},
                     {"reports", reports},
                     {"summary", Json{{"monoids", results.size()}, {"failed", failed}, {"uncertified", uncertified}}}};
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << csv_header();
            for (const auto& r : results) std::cout << r.csv;
            break;
        case Format::Text:
            for (const auto& r : results) std::cout << r.text;
            std::cout << "-- " << results.size() << " monoid(s), " << failed << " failed, " << uncertified
                      << " uncertified (radius " << cfg.radius << ", seed " << cfg.seed << ")\n";
            break;
    }
    return (failed || (cfg.strict && uncertified)) ? 1 : 0;
}

int run_corpus(const RunConfig& cfg, const std::string& out_dir, i64 max_frobenius) {
    auto entries = builtin_corpus(max_frobenius);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (const auto& e : entries) {
            std::ofstream f(fs::path(out_dir) / e.file, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + (fs::path(out_dir) / e.file).string());
            f << e.model.to_spec();
        }
    }
    if (cfg.format == Format::Json) {
        Json list = Json::array();
        for (const auto& e : entries)
            list.push_back(Json{{"file", e.file}, {"monoid", e.model.name()}, {"certified", e.certified}});
        std::cout << Json{{"schema", kSchemaVersion}, {"tool", "idealis"}, {"version", kToolVersion},
                          {"command", "corpus"}, {"entries", list}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& e : entries) std::cout << e.file << (e.certified ? "" : "  (uncertified)") << "\n";
        std::cout << "-- " << entries.size() << " entries" << (out_dir.empty() ? "" : " written to " + out_dir) << "\n";
    }
    return 0;
}

i64 default_radius() {
    const char* env = std::getenv("IDEALIS_RADIUS");
    if (!env || !*env) return 8;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (*end || v < 1) throw UsageError(std::string("IDEALIS_RADIUS must be a positive integer, got '") + env + "'");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"idealis: finitary ideal systems on finitely generated cancellative monoids"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::optional<i64> radius_flag;
    bool json = false, csv = false;
    auto add_common = [&](CLI::App* sub, bool with_system) {
        sub->add_option("inputs", cfg.inputs, "monoid spec files or directories of *.spec")->required();
        if (with_system)
            sub->add_option("--system", cfg.system, "ideal system: s, v, t, w or mod(p,r)")->capture_default_str();
        sub->add_option("--radius", radius_flag, "search radius (default 8, or IDEALIS_RADIUS)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for every sampled check")->capture_default_str();
        auto* j = sub->add_flag("--json", json, "emit JSON");
        sub->add_flag("--csv", csv, "emit CSV")->excludes(j);
        sub->add_flag("--strict", cfg.strict, "treat uncertified models as failures");
        sub->add_flag("--timing", cfg.timing, "add wall-clock timings to JSON reports");
        sub->add_option("--jobs", cfg.jobs, "worker threads (default: hardware concurrency)");
    };

    auto* analyze = app.add_subcommand("analyze", "property matrix, spectrum and suites per monoid");
    add_common(analyze, false);
    analyze->add_option("--axiom-samples", cfg.axiom_samples, "samples per axiom check")->capture_default_str();

    auto* closure = app.add_subcommand("closure", "closure of the ideal generated by --element");
    add_common(closure, true);
    closure->add_option("--element", cfg.element, "generators, e.g. \"2,1;0,3\"")->required();

    auto* factor = app.add_subcommand("factor", "radical factorization");
    add_common(factor, true);
    factor->add_option("--element", cfg.element, "element or generators, e.g. \"2,1\"")->required();
    factor->add_option("--mode", cfg.mode, "principal, sp or meager")
        ->check(CLI::IsMember({"principal", "sp", "meager"}))
        ->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "nonzero primes with closure flags");
    add_common(spectrum, true);

    auto* verify = app.add_subcommand("verify", "evaluate one equivalence suite");
    add_common(verify, true);
    verify->add_option("--suite", cfg.suite, "suite id")->required();

    std::string out_dir;
    i64 max_frobenius = 15;
    auto* corpus = app.add_subcommand("corpus", "list or write the built-in corpus");
    corpus->add_option("--out", out_dir, "directory to write spec files into");
    corpus->add_option("--max-frobenius", max_frobenius, "largest Frobenius number of generated semigroups")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    corpus->add_flag("--json", json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.format = json ? Format::Json : csv ? Format::Csv : Format::Text;
        if (cfg.command == "corpus") return run_corpus(cfg, out_dir, max_frobenius);

        cfg.radius = radius_flag ? *radius_flag : default_radius();
        System::parse(cfg.system);  // reject bad selectors before any work
        if (cfg.command == "verify") find_suite(cfg.suite);

        auto inputs = load_inputs(cfg.inputs);
        using Task = TaskResult (*)(const RunConfig&, const Input&);
        static const std::map<std::string, Task> tasks{{"analyze", run_analyze}, {"closure", run_closure},
                                                       {"factor", run_factor},   {"spectrum", run_spectrum},
                                                       {"verify", run_verify}};
        return emit(cfg, run_all(cfg, inputs, tasks.at(cfg.command)));
    } catch (const UsageError& e) {
        std::cerr << "idealis: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "idealis: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "idealis: " << e.what() << "\n";
        return 2;
    }
}
