#ifndef LEFSURF_FF_FACTOR_HPP
#define LEFSURF_FF_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "lefsurf/finite_field.hpp"

namespace lefsurf {

struct FFFactor {
    FPoly factor; // monic irreducible
    int multiplicity;
};

// Full factorisation over F_q (q odd): squarefree decomposition,
// distinct-degree splitting, then seeded Cantor-Zassenhaus equal-degree
// splitting.  Output is canonical: sorted by (degree, lexicographic
// coefficient order); the unit lc(f) is implicit.
std::vector<FFFactor> factor_univariate_ff(const FPoly& f, std::uint64_t seed);

// Roots in the coefficient field, from the degree-1 factors; sorted in
// the field's enumeration order.  Multiplicities dropped.
std::vector<FFElem> ff_roots(const FPoly& f, std::uint64_t seed);

} // namespace lefsurf

#endif
