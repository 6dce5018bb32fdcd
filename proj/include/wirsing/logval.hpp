#ifndef WIRSING_LOGVAL_HPP
#define WIRSING_LOGVAL_HPP

#include <iosfwd>
#include <string>

#include "wirsing/interval.hpp"
#include "wirsing/rational.hpp"

namespace wirsing {

//=============================================================================
// Places of the rationals and the exact logarithmic value type.
//
// A place is the archimedean absolute value or one p-adic absolute value,
// normalized so that ||p||_p = 1/p.  Heights and proximity functions are
// finite sums  Sigma c_i log q_i  with rational c_i and positive rational
// q_i; LogVal stores such a sum exactly as (1/r) log q with q a positive
// rational and r >= 1 an integer root index.  Addition, rational scaling,
// sign and threshold comparison are all exact; numeric enclosures come out
// only at the very end through Interval.
//=============================================================================

struct Place {
    bool arch;  // true: archimedean; false: p-adic
    Int p;      // the prime when arch == false

    static Place infinite() { return {true, Int(0)}; }
    static Place prime(const Int& p);

    bool operator==(const Place& o) const { return arch == o.arch && p == o.p; }
    // canonical order: infinity first, then primes ascending
    bool operator<(const Place& o) const {
        if (arch != o.arch) return arch;
        return p < o.p;
    }
    std::string str() const { return arch ? "inf" : p.get_str(); }
};

enum class Cmp { Less, Equal, Greater };

class LogVal {
public:
    // the zero value (log 1)
    LogVal() : q_(1), r_(1) {}

    // log q for positive rational q
    static LogVal log_of(const Rat& q);
    // (1/r) log q
    static LogVal root_log(const Rat& q, unsigned long r);

    bool is_zero() const { return q_ == 1; }
    int sign() const;  // -1 / 0 / +1

    LogVal operator+(const LogVal& o) const;
    LogVal& operator+=(const LogVal& o) { return *this = *this + o; }
    LogVal operator-() const;
    LogVal operator-(const LogVal& o) const { return *this + (-o); }
    // scale by an exact rational c: value c * (1/r) log q
    LogVal scaled(const Rat& c) const;

    // sign of (*this) - t * o, decided exactly (integer power comparison)
    Cmp compare_scaled(const Rat& t, const LogVal& o) const;
    Cmp compare(const LogVal& o) const { return compare_scaled(Rat(1), o); }

    bool operator==(const LogVal& o) const { return compare(o) == Cmp::Equal; }

    // outward-rounded numeric enclosure
    Interval enclosure(mpfr_prec_t prec) const;
    double to_double() const { return enclosure(64).mid(); }

    const Rat& base() const { return q_; }
    unsigned long root_index() const { return r_; }

    // extract perfect j-th powers for divisors j of r (keeps operands small)
    void reduce();

private:
    Rat q_;            // positive rational
    unsigned long r_;  // root index >= 1; value is (1/r_) log q_
};

std::ostream& operator<<(std::ostream& os, const LogVal& v);

//----------------------------------------------------------- place-wise norms

// log ||x||_v for nonzero rational x: at infinity log |x|, at p the value
// -v_p(x) log p.  Throws ZeroInput on x = 0.
LogVal norm_at(const Rat& x, const Place& v);

// Sigma_v log ||x||_v over infinity and the support of x; identically zero.
LogVal product_formula_defect(const Rat& x);

} // namespace wirsing

#endif
