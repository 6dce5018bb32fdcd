#ifndef WIRSING_PROJECTIVE_HPP
#define WIRSING_PROJECTIVE_HPP

#include <string>
#include <vector>

#include "wirsing/polynomial.hpp"
#include "wirsing/rational.hpp"

namespace wirsing {

//=============================================================================
// Rational projective points and integral forms.
//
// A ProjPoint holds primitive integer coordinates (gcd 1, first nonzero
// coordinate positive), so equality is coordinate equality and heights read
// straight off the representative.  A Form is a homogeneous polynomial with
// integer coefficients, kept primitive; evaluation is exact.
//=============================================================================

class ProjPoint {
public:
    // normalizes: clears denominators, divides by content, fixes sign.
    // Throws ZeroInput if every coordinate is zero.
    explicit ProjPoint(std::vector<Int> coords);
    explicit ProjPoint(std::vector<Rat> coords);

    // points of P^1
    static ProjPoint p1(const Rat& x);             // (num : den)
    static ProjPoint p1_infinity();                // (1 : 0)

    std::size_t dim() const { return coords_.size() - 1; }  // ambient n
    std::size_t size() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_p1_infinity() const;
    // finite point of P^1 as a rational; throws UnsupportedRegime at infinity
    Rat to_rat() const;

    // log max_i |x_i| as an exact value (primitive representative)
    Int max_abs() const;

    bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const ProjPoint& o) const { return coords_ != o.coords_; }
    // canonical order (dimension, then lexicographic on coordinates)
    bool operator<(const ProjPoint& o) const;

    std::string str() const;  // "(a : b : c)"

private:
    std::vector<Int> coords_;
};

//------------------------------------------------------------------- forms

struct Monomial {
    Int coeff;
    std::vector<unsigned> exps;  // one exponent per variable
};

class Form {
public:
    // normalizes: merges duplicate exponent vectors, drops zero terms,
    // divides by content (sign of the leading term kept as given).
    // All monomials must share the same total degree; throws ZeroInput on
    // the zero form, UsageError on inhomogeneous input.
    Form(std::size_t nvars, std::vector<Monomial> monomials);

    // linear form  c_0 x_0 + ... + c_n x_n
    static Form linear(const std::vector<Int>& coeffs);
    // the P^1 form of the divisor point (a : b), fixed as  b x - a y
    static Form vanishing_at(const ProjPoint& p);
    // binary form c_0 x^d ... read off a BiForm (x^i y^(d-i) coefficients)
    static Form from_biform(const BiForm& f);

    std::size_t nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    std::size_t num_monomials() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    Int max_abs_coeff() const;

    // exact evaluation on integer coordinates
    Int eval(const std::vector<Int>& x) const;
    Int eval(const ProjPoint& p) const { return eval(p.coords()); }

    Form operator*(const Form& o) const;

    bool operator==(const Form& o) const;

    // human-readable with variables x, y, z, w, x4, x5, ...
    std::string str() const;

private:
    std::size_t nvars_;
    unsigned degree_;
    std::vector<Monomial> monomials_;  // sorted by exponent vector
};

} // namespace wirsing

#endif
