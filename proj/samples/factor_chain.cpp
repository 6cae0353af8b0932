// Radical factorization of principal ideals of N^2, and a failure on <2,3>.
#include <iostream>

#include <idealis/idealis.hpp>

using namespace idealis;

void show(const Outcome<FactorChain>& out) {
    if (const auto* f = std::get_if<Failure>(&out)) {
        std::cout << "  failed: " << to_string(f->reason) << " (" << f->detail << ")\n";
        return;
    }
    for (const auto& I : std::get<FactorChain>(out).factors) std::cout << "  " << I.str() << "\n";
}

int main() {
    auto N2 = make_monoid(parse_monoid("free 2"));
    for (GroupVector x : {GroupVector{2, 1}, GroupVector{3, 3}, GroupVector{0, 4}}) {
        std::cout << x.str() << ":\n";
        show(radical_factor_principal(N2, x));
    }
    auto G = make_monoid(parse_monoid("numerical 2 3"));
    std::cout << "(2) in <2,3>:\n";
    show(radical_factor_principal(G, GroupVector{2}));
}
