// Compares the s, w and t closures of a few ideals of <3,4,5>.
#include <iostream>

#include <idealis/idealis.hpp>

int main() {
    using namespace idealis;
    auto H = make_monoid(parse_monoid("numerical 3 4 5"));
    for (const auto& sys : {System::s(), System::w(), System::t()}) {
        ClosureOp op(H, sys);
        for (auto gens : std::vector<std::vector<GroupVector>>{{{3}, {4}}, {{4}, {5}}, {{6}, {7}}}) {
            Ideal X = Ideal::from(H, gens);
            std::cout << X.str() << "_" << sys.name() << " = " << op.close(X).str() << "\n";
        }
    }
}
