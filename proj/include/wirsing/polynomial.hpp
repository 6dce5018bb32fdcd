#ifndef WIRSING_POLYNOMIAL_HPP
#define WIRSING_POLYNOMIAL_HPP

#include <compare>
#include <iosfwd>
#include <vector>

#include "wirsing/rational.hpp"

namespace wirsing {

//=============================================================================
// Dense univariate polynomials over Z and Q, and binary forms.
//
// IntPoly is the workhorse (minimal polynomials, divisor forms after
// dehomogenization).  QPoly exists for Euclidean division and number-field
// arithmetic mod an irreducible minimal polynomial.  BiForm is a homogeneous
// binary form of explicit degree (leading zeros are meaningful: they record
// roots at infinity).
//=============================================================================

class QPoly;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);         // coeffs[i] * x^i
    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, unsigned i); // c * x^i

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
    bool is_zero() const { return c_.empty(); }
    const Int& operator[](size_t i) const;             // 0 beyond degree
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    Int content() const;                               // >= 0; 0 for zero poly
    IntPoly primitive() const;                         // f / content, sign kept
    IntPoly derivative() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    // homogenized evaluation F~(a, b) = Sigma c_i a^i b^(deg - i)
    Int eval_homog(const Int& a, const Int& b) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& c) const;
    IntPoly operator-() const { return *this * Int(-1); }

    // exact division; throws ZeroInput if not divisible or o == 0
    IntPoly divide_exact(const IntPoly& o) const;

    // gcd of primitive parts, primitive with positive leading coefficient
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    std::strong_ordering operator<=>(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const = default;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& f);

// resultant of f and g via Sylvester determinant (exact)
Int resultant(const IntPoly& f, const IntPoly& g);

//------------------------------------------------------------------ rationals

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    explicit QPoly(const IntPoly& f);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& c) const;
    bool operator==(const QPoly& o) const = default;

    // Euclidean division: returns (quotient, remainder); o != 0
    std::pair<QPoly, QPoly> divmod(const QPoly& o) const;

    // primitive integer scalar multiple (positive leading coefficient)
    IntPoly primitive_int() const;

    Rat eval(const Rat& x) const;

private:
    void normalize();
    std::vector<Rat> c_;
};

//--------------------------------------------------- number-field arithmetic
// Elements of Q[x]/(f) for irreducible f are represented by QPoly of degree
// < deg f (canonical power-basis representatives).

QPoly nf_reduce(const QPoly& a, const IntPoly& f);
QPoly nf_mul(const QPoly& a, const QPoly& b, const IntPoly& f);
// inverse mod f; throws ZeroInput if a reduces to 0
QPoly nf_inv(const QPoly& a, const IntPoly& f);

//-------------------------------------------------------------- binary forms

class BiForm {
public:
    BiForm() : d_(0), c_(1, Int(0)) {}
    // coefficient of x^i y^(d-i) is coeffs[i]; size must be d+1
    BiForm(unsigned d, std::vector<Int> coeffs);
    // b x - a y, the form vanishing at (a : b)
    static BiForm from_point(const Int& a, const Int& b);
    // homogenization of an integer polynomial to degree d >= deg f
    static BiForm homogenize(const IntPoly& f, unsigned d);

    unsigned degree() const { return d_; }
    const Int& operator[](size_t i) const { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const;

    Int eval(const Int& a, const Int& b) const;
    BiForm operator*(const BiForm& o) const;
    BiForm operator*(const Int& c) const;
    BiForm operator+(const BiForm& o) const;  // degrees must match

    // substitution (x, y) -> (m00 x + m01 y, m10 x + m11 y)
    BiForm compose(const Int& m00, const Int& m01, const Int& m10, const Int& m11) const;

    Int content() const;
    BiForm primitive() const;

    // F(x, 1) with the y-multiplicity (= multiplicity of the root (1:0))
    IntPoly dehomogenize() const;
    unsigned infinity_multiplicity() const;

    bool operator==(const BiForm& o) const = default;
    std::string str() const;

private:
    unsigned d_;
    std::vector<Int> c_;
};

} // namespace wirsing

#endif
