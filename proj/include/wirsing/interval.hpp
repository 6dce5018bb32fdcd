#ifndef WIRSING_INTERVAL_HPP
#define WIRSING_INTERVAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "wirsing/rational.hpp"

namespace wirsing {

//=============================================================================
// Directed-rounding floating layer.
//
// MpFloat is a minimal RAII wrapper over mpfr_t.  Interval is a closed real
// interval [lo, hi] with outward rounding on every operation; it is the sole
// bridge from exact data to numeric enclosures.  CInterval is the complex
// box used by the root isolator.
//=============================================================================

class MpFloat {
public:
    explicit MpFloat(mpfr_prec_t prec = 64) { mpfr_init2(f_, prec); mpfr_set_zero(f_, 1); }
    MpFloat(const MpFloat& o) { mpfr_init2(f_, mpfr_get_prec(o.f_)); mpfr_set(f_, o.f_, MPFR_RNDN); }
    MpFloat(MpFloat&& o) noexcept { mpfr_init2(f_, mpfr_get_prec(o.f_)); mpfr_swap(f_, o.f_); }
    MpFloat& operator=(MpFloat o) { mpfr_swap(f_, o.f_); return *this; }
    ~MpFloat() { mpfr_clear(f_); }

    mpfr_ptr get() { return f_; }
    mpfr_srcptr get() const { return f_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(f_); }
    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }

private:
    mpfr_t f_;
};

class Interval {
public:
    // [0, 0] at the given precision
    explicit Interval(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}

    static Interval from_rat(const Rat& x, mpfr_prec_t prec);
    static Interval from_int(const Int& x, mpfr_prec_t prec);
    // exact log of a positive rational, outward-rounded
    static Interval log_rat(const Rat& x, mpfr_prec_t prec);
    static Interval hull(const Interval& a, const Interval& b);

    mpfr_prec_t prec() const { return lo_.prec(); }

    double lo() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
    const MpFloat& lo_mp() const { return lo_; }
    const MpFloat& hi_mp() const { return hi_; }

    bool contains_zero() const;
    bool is_positive() const;  // lo > 0
    bool is_negative() const;  // hi < 0
    double width() const;

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // requires 0 not in o
    Interval scaled(const Rat& c) const;     // c * [lo, hi]
    Interval square() const;                 // tight [min x^2, max x^2], lo >= 0
    Interval sqrt() const;                   // requires lo >= 0
    Interval log() const;                    // requires lo > 0
    Interval log_abs() const;                // log |x|, requires 0 not in [lo,hi]
    Interval log_plus() const;               // log max(1, x) with x >= 0 allowed
    Interval max_with(const Interval& o) const;

    // exact point interval [x, x] from an MpFloat
    static Interval point(const MpFloat& x, mpfr_prec_t prec);

    // midpoint / radius as doubles (diagnostics only)
    double mid() const { return (lo() + hi()) / 2; }

private:
    MpFloat lo_, hi_;
    friend class CInterval;
};

// Complex box [re] + i[im].
class CInterval {
public:
    explicit CInterval(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
    CInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}

    const Interval& re() const { return re_; }
    const Interval& im() const { return im_; }

    CInterval operator+(const CInterval& o) const { return {re_ + o.re_, im_ + o.im_}; }
    CInterval operator-(const CInterval& o) const { return {re_ - o.re_, im_ - o.im_}; }
    CInterval operator*(const CInterval& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    Interval abs2() const { return re_.square() + im_.square(); }
    // log |z|; requires 0 outside the box (abs2().lo > 0)
    Interval log_abs() const;
    // log max(1, |z|)
    Interval log_plus_abs() const;
    bool disjoint(const CInterval& o) const;
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

private:
    Interval re_, im_;
};

} // namespace wirsing

#endif
