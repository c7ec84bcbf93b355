#ifndef LEFSURF_HEIGHTS_HPP
#define LEFSURF_HEIGHTS_HPP

#include <vector>

#include "lefsurf/algebraic.hpp"

namespace lefsurf {

// Absolute logarithmic Weil height of a projective point with rational
// coordinates: clear denominators to a coprime integer vector, then
// h = log max |n_i|.  Exactly scale-invariant.
RBall weil_height_rational(const std::vector<Rat>& coords, long prec = 128);

// Height of a single algebraic number [alpha : 1] via the Mahler measure
// of its defining squarefree polynomial divided by the degree:
// h = (log |lc| + sum log^+ |root_i|) / deg.  For non-minimal defining
// polynomials this is an upper representative; exact for minimal ones.
RBall weil_height_algebraic(const AlgebraicNumber& alpha, long prec = 128);

} // namespace lefsurf

#endif
