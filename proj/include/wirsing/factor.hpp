#ifndef WIRSING_FACTOR_HPP
#define WIRSING_FACTOR_HPP

#include <mpfr.h>

#include <optional>
#include <vector>

#include "wirsing/polynomial.hpp"
#include "wirsing/rational.hpp"

namespace wirsing {

//=============================================================================
// Exact factorization over Q, degree <= 4.
//
// Rational roots are recognized from certified root boxes: any rational root
// a/b of a primitive polynomial has b | leading coefficient, and an interval
// of width < 1/lead^2 contains at most one rational with denominator <= lead,
// so the continued-fraction "simplest rational in an interval" either hits
// the root (verified by exact evaluation) or proves there is none.  No
// big-integer factoring of coefficients is ever required.
//
// Quartics additionally use the resolvent cubic
//   R(z) = z^3 - C z^2 + (BD - 4E) z - (B^2 E - 4CE + D^2)
// of the monic transform y^4 + By^3 + Cy^2 + Dy + E to decide splits into
// two quadratics.
//=============================================================================

// the unique rational of smallest denominator in [lo, hi]
Rat simplest_rational(const Rat& lo, const Rat& hi);

// exact rational roots of f with multiplicities, sorted; deg f >= 1
std::vector<std::pair<Rat, unsigned>> rational_roots(const IntPoly& f);

// irreducibility of the primitive part over Q; requires 1 <= deg <= 4,
// throws UnsupportedRegime beyond that
bool is_irreducible(const IntPoly& f);

// factorization of the primitive part into primitive irreducibles with
// positive leading coefficients (multiplicities aggregated); deg <= 4.
// The product of the factors equals the primitive part up to sign.
std::vector<std::pair<IntPoly, unsigned>> factor_poly(const IntPoly& f);

// exact conversion of an mpfr endpoint to a rational (dyadic)
Rat mpf_to_rat(mpfr_srcptr x);

} // namespace wirsing

#endif
