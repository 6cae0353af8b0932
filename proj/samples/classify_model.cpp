// Prints the equivalence suites for a monoid given on the command line,
// e.g. classify_model "numerical 2 3 | free 1".
#include <iostream>

#include <idealis/idealis.hpp>

int main(int argc, char** argv) {
    using namespace idealis;
    auto H = make_monoid(parse_monoid(argc > 1 ? argv[1] : "free 2"));
    Context ctx(H, EvalConfig{});
    for (const auto& id : core_suites()) {
        TfaeReport rep = tfae_suite(ctx, id);
        std::cout << id << (rep.agreement ? " agree:" : " DISAGREE:");
        for (const auto& c : rep.conditions) std::cout << " (" << c.label << ")" << to_string(c.verdict);
        std::cout << "\n";
    }
}
