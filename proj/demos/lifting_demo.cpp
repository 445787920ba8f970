// Small tour of the library: build a cover, decide a few lifts, and print
// the census of a cell.

#include <iostream>

#include "branchlift/branchlift.hpp"

int main() {
    using namespace branchlift;

    // A 5-fold cyclic cover of the sphere branched at 3 points.
    CoverSpec c = cyclic_cover(5, {1, 1, 3});
    auto inv = surface_invariants(c);
    std::cout << "cover (1,1,3) over Z/5: genus " << inv.genus << ", chi "
              << inv.euler_characteristic << "\n";

    for (const char* perm : {"id", "(1 2)", "(2 3)", "(1 2 3)"}) {
        MappingClass mc(Permutation::parse_cycles(perm, c.k()), +1);
        LiftDecision d = lifts(c, mc);
        std::cout << "  " << perm << " lifts: " << (d.lifts ? "yes" : "no");
        if (d.witness) std::cout << " (witness u=" << d.witness->images[0].coeffs[0] << ")";
        std::cout << "\n";
    }

    std::cout << "every homeomorphism lifts: " << (all_lift_theorem(c) ? "yes" : "no") << "\n";

    // The hyperelliptic double cover lifts everything.
    CoverSpec hyper = cyclic_cover(2, {1, 1, 1, 1, 1, 1});
    std::cout << "hyperelliptic k=6: all lift = " << (all_lift_theorem(hyper) ? "yes" : "no")
              << ", genus " << surface_invariants(hyper).genus << "\n";

    // Curves work too.
    CurveSpec cv = parse_curve("y^3 = (x-0)(x-1)");
    std::cout << render_curve(cv) << ": all lift = " << (all_lift_corollary(cv) ? "yes" : "no")
              << " (cover " << tuple_string(to_cover(cv).group(), to_cover(cv).tuple()) << ")\n";

    std::cout << "\n" << render_census_table(census(5, 5, 3, 3));
    return 0;
}
