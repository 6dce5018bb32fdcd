#ifndef WIRSING_ALGEBRAIC_HPP
#define WIRSING_ALGEBRAIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "wirsing/heights.hpp"
#include "wirsing/interval.hpp"
#include "wirsing/logval.hpp"
#include "wirsing/polynomial.hpp"
#include "wirsing/projective.hpp"

namespace wirsing {

//=============================================================================
// Algebraic points of P^1, their heights and proximity functions, and the
// symmetric-power transport maps.
//
// An algebraic point is either a rational point (degree 1, infinity included)
// or a real/complex algebraic number given by its primitive irreducible
// minimal polynomial and a root index into the canonical conjugate order.
//
// Heights of algebraic points decompose as
//     exact rational combination of logs of rationals
//   + rational multiples of conjugate sums  Sigma_j log+ |alpha_j|.
// Everything p-adic is exact: the sum of the local terms above p equals
// (1/e) v_p(F~(a,b)) log p by taking norms, and likewise the archimedean
// conjugate sum  Sigma_j log |b alpha_j - a|  collapses exactly to
// log(|F~(a,b)| / |lead|).  Only the log+ sums (logarithmic Mahler measures)
// ever need numeric enclosures, and log+ has no singularity, so enclosures
// are always certified and shrink with precision.
//=============================================================================

class AlgPoint {
public:
    explicit AlgPoint(ProjPoint rational);  // degree 1, infinity allowed
    // algebraic of degree >= 2; the polynomial is primitivized, its leading
    // coefficient made positive, and irreducibility verified (degree <= 4
    // exactly; beyond that absence of rational roots).  Degree-1 input is
    // converted to the rational case.
    AlgPoint(const IntPoly& minpoly, unsigned root_index);

    unsigned degree() const;
    bool is_rational() const { return rat_.has_value(); }
    const ProjPoint& rational_point() const;  // throws unless rational
    const IntPoly& minpoly() const;           // throws unless algebraic
    unsigned root_index() const { return idx_; }

    // homogenized minimal form, uniformly: b x - a y for rational (a : b)
    // (so -y at infinity), F~(x, y) for algebraic points
    BiForm min_form() const;

    // certified box around the root_index-th conjugate (algebraic only)
    CInterval conjugate(mpfr_prec_t prec) const;

    bool operator==(const AlgPoint& o) const;
    bool operator<(const AlgPoint& o) const;  // canonical order
    std::string str() const;

private:
    std::optional<ProjPoint> rat_;
    IntPoly poly_;
    unsigned idx_ = 0;
};

//--------------------------------------------------------------- value type

enum class Sign4 { Negative, Zero, Positive, Undecided };

// weight * Sigma_j log+ |root_j(poly)|  (a scaled logarithmic Mahler measure)
struct PlusTerm {
    Rat weight;
    IntPoly poly;
};

// exact-plus-conjugate-sum value:  exact LogVal  +  Sigma_i PlusTerm_i.
// Degree-1 and binomial conjugate sums fold into the exact part, so values
// built from rational points and from binomial minimal polynomials stay
// fully exact and compare exactly.
class AlgReal {
public:
    AlgReal() = default;
    explicit AlgReal(LogVal exact) : exact_(std::move(exact)) {}
    static AlgReal log_plus_sum(const Rat& w, const IntPoly& f);

    bool is_exact() const { return plus_.empty(); }
    const LogVal& exact_part() const { return exact_; }
    const std::vector<PlusTerm>& plus_terms() const { return plus_; }

    AlgReal operator+(const AlgReal& o) const;
    AlgReal& operator+=(const AlgReal& o) { return *this = *this + o; }
    AlgReal operator-() const;
    AlgReal operator-(const AlgReal& o) const { return *this + (-o); }
    AlgReal scaled(const Rat& c) const;

    Interval enclosure(mpfr_prec_t prec) const;
    // refine until the enclosure width is <= eps; throws PrecisionExhausted
    Interval enclosure_within(double eps, mpfr_prec_t cap) const;
    double to_double() const { return enclosure(128).mid(); }

    // sign of (*this - t * o), exact when both sides are exact, otherwise
    // decided by enclosures on a precision ladder up to cap
    Sign4 sign_vs(const Rat& t, const AlgReal& o, mpfr_prec_t cap) const;
    Sign4 sign(mpfr_prec_t cap) const { return sign_vs(Rat(0), AlgReal(), cap); }

private:
    LogVal exact_;
    std::vector<PlusTerm> plus_;
    void coalesce();
};

//----------------------------------------------------------- heights / prox

// h(P): exact for rational points; (1/e)(log|lead| + Sigma_j log+|alpha_j|)
AlgReal alg_height(const AlgPoint& P);

// Sigma_{v in S} Sigma_i w_i lambda_v(P, Q_i) with the form normalization of
// local_height; exact p-adic part (1/e) v_p(F~(a_i, b_i)) log p, archimedean
// part (w/e)(Sigma_j log+|alpha_j| + log|lead| - log|F~(a_i, b_i)|).
// Throws OnSupport if P is rational and lies in the support of D.
AlgReal prox_alg(const AlgPoint& P, const Divisor1& D, const PlaceSet& S);

//------------------------------------------------------ symmetric transport

// sigma(P_1, ..., P_d): coefficient point of prod_i (b_i x - a_i y) in P^d,
// index i = coefficient of x^i y^(d-i)
ProjPoint sigma_point(const std::vector<ProjPoint>& tuple);

// psi(P): the coefficient point (c_0 : ... : c_e) of the minimal form
ProjPoint psi_point(const AlgPoint& P);

// H_P for rational P = (a : b) on the degree-d coefficient space:
// H_P(z) = Sigma_i z_i a^i b^(d-i); satisfies H_P(psi(Q)) = F~_Q(a, b) and
// H_P(sigma(tuple)) = 0 exactly when P occurs in the tuple
Form hyperplane_form(const ProjPoint& P, unsigned d);

// proximity of a point of the degree-d coefficient space to the transported
// divisor  Sigma_i w_i H_{P_i}
LogVal prox_transported(const ProjPoint& Z, const Divisor1& D, const PlaceSet& S);

// enclosures of  m_{psi D, S}(psi Q) - e m_{D,S}(Q)  and  h(psi Q) - e h(Q),
// refined to width <= eps
struct TransportDefect {
    Interval m_defect;
    Interval h_defect;
};
TransportDefect transport_defect(const AlgPoint& Q, const Divisor1& D,
                                 const PlaceSet& S, double eps,
                                 mpfr_prec_t cap);

} // namespace wirsing

#endif
