#ifndef WIRSING_EXCEPTIONAL_HPP
#define WIRSING_EXCEPTIONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "wirsing/algebraic.hpp"
#include "wirsing/heights.hpp"
#include "wirsing/polynomial.hpp"
#include "wirsing/projective.hpp"

namespace wirsing {

//=============================================================================
// Exceptional sets for approximation to divisors on P^1.
//
// For a reduced divisor D with support in P^1(Q), degree-d exceptional maps
//   phi_I = ( prod_{i in I_1} (b_i x - a_i y), prod_{i in I_2} (b_i x - a_i y) )
// run over ordered pairs of disjoint d-element index sets.  Whether a value
// phi(alpha) is rational is decided exactly in the number field: reduce
// numerator and denominator to canonical power-basis representatives mod the
// minimal polynomial and test proportionality.
//
// Membership in the exceptional set Z(D, t, d) is decided by regime:
// trivially everything for t <= min(d+1, deg D) (with an explicit witness map
// constructed from the division with remainder in the number field), via the
// finite phi_I family for t > 2d - 1 (extended to t > 9/2 when d = 3), and
// emptiness for t > deg D, t > 2d, or q < 2d.
//=============================================================================

// rational self-map of P^1 as a pair of integer binary forms of equal degree
class Rat1Map {
public:
    Rat1Map(BiForm num, BiForm den);  // joint content removed; equal degrees

    unsigned degree() const { return num_.degree(); }
    const BiForm& num() const { return num_; }
    const BiForm& den() const { return den_; }

    // image of a rational point; throws DegenerateMap if both forms vanish
    ProjPoint eval(const ProjPoint& P) const;

    // exact rational value at an algebraic point: the point of P^1(Q) if
    // phi(alpha) is rational (infinity included), nullopt otherwise
    std::optional<ProjPoint> rational_value(const AlgPoint& P) const;

    // phi composed with itself-style substitution: (this) o inner
    Rat1Map substitute(const Rat1Map& inner) const;
    // precompose with the Moebius substitution (x, y) -> (x, u x + y)
    Rat1Map shift_den(const Int& u) const;

    std::string str() const;

private:
    BiForm num_, den_;
};

//------------------------------------------------------------ the phi family

struct PhiIndex {
    std::vector<std::size_t> I1, I2;  // indices into the canonical point order
};

// ordered pairs of disjoint d-subsets of {0, ..., q-1}, lexicographic;
// empty when q < 2d.  Count: q! / (d! d! (q-2d)!).
std::vector<PhiIndex> enumerate_phi_indices(std::size_t q, unsigned d);

Rat1Map phi_from_index(const Divisor1& D, const PhiIndex& I);

// the full family for (D, d), in enumeration order
std::vector<Rat1Map> enumerate_phi(const Divisor1& D, unsigned d);

//------------------------------------------------------------- membership

enum class Membership { In, Out };

struct ZWitness {
    std::optional<PhiIndex> index;     // which phi_I certified membership
    std::optional<Rat1Map> map;        // the certifying map itself
    std::optional<ProjPoint> value;    // its rational value at P
};

struct ZResult {
    Membership status;
    ZWitness witness;
};

// decide P in Z(D, t, d); throws WrongDegree if deg P > d, OnSupport if P is
// a divisor point, UnsupportedRegime for t outside the decidable ranges
ZResult z_member(const AlgPoint& P, const Divisor1& D, unsigned d, const Rat& t);

// first map in the family with rational value at P, with that value
std::optional<std::pair<std::size_t, ProjPoint>> z_member_against(
    const AlgPoint& P, const std::vector<Rat1Map>& maps);

// explicit witness for the trivial regime t <= min(d+1, deg D): a map of
// degree <= d with phi(P) = 1, numerator vanishing on ceil(t)-1 divisor
// points and denominator on one more.  Throws DegreeTooSmall if no choice of
// divisor points admits the construction within degree d.
Rat1Map rem_witness(const AlgPoint& P, const Divisor1& D, unsigned d, const Rat& t);

// images of the divisor support under phi with the number of support points
// mapping to each, sorted by count descending (ties in point order)
std::vector<std::pair<ProjPoint, unsigned>> pullback_profile(const Rat1Map& phi,
                                                             const Divisor1& D);

} // namespace wirsing

#endif
