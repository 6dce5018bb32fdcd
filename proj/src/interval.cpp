#include "wirsing/interval.hpp"

#include <algorithm>

namespace wirsing {

Interval Interval::from_rat(const Rat& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), x.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_int(const Int& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_.get(), x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), x.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::log_rat(const Rat& x, mpfr_prec_t prec) {
    if (x <= 0) throw ZeroInput("Interval::log_rat: argument must be positive");
    // log(n/d) = log n - log d with directed rounding on each leg
    Interval r(prec);
    MpFloat t(prec);
    mpfr_set_z(t.get(), x.get_num().get_mpz_t(), MPFR_RNDD);
    mpfr_log(r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_set_z(t.get(), x.get_den().get_mpz_t(), MPFR_RNDU);
    mpfr_log(t.get(), t.get(), MPFR_RNDU);
    mpfr_sub(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);

    mpfr_set_z(t.get(), x.get_num().get_mpz_t(), MPFR_RNDU);
    mpfr_log(r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_set_z(t.get(), x.get_den().get_mpz_t(), MPFR_RNDD);
    mpfr_log(t.get(), t.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec(), b.prec()));
    mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

double Interval::width() const {
    MpFloat w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec(), o.prec()));
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec(), o.prec()));
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec(), o.prec()));
    // four corner products, outward
    MpFloat a(r.prec()), b(r.prec());
    bool first = true;
    for (const MpFloat* x : {&lo_, &hi_}) {
        for (const MpFloat* y : {&o.lo_, &o.hi_}) {
            mpfr_mul(a.get(), x->get(), y->get(), MPFR_RNDD);
            mpfr_mul(b.get(), x->get(), y->get(), MPFR_RNDU);
            if (first) {
                mpfr_set(r.lo_.get(), a.get(), MPFR_RNDD);
                mpfr_set(r.hi_.get(), b.get(), MPFR_RNDU);
                first = false;
            } else {
                mpfr_min(r.lo_.get(), r.lo_.get(), a.get(), MPFR_RNDD);
                mpfr_max(r.hi_.get(), r.hi_.get(), b.get(), MPFR_RNDU);
            }
        }
    }
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw ZeroInput("Interval::operator/: denominator contains zero");
    Interval r(std::max(prec(), o.prec()));
    MpFloat a(r.prec()), b(r.prec());
    bool first = true;
    for (const MpFloat* x : {&lo_, &hi_}) {
        for (const MpFloat* y : {&o.lo_, &o.hi_}) {
            mpfr_div(a.get(), x->get(), y->get(), MPFR_RNDD);
            mpfr_div(b.get(), x->get(), y->get(), MPFR_RNDU);
            if (first) {
                mpfr_set(r.lo_.get(), a.get(), MPFR_RNDD);
                mpfr_set(r.hi_.get(), b.get(), MPFR_RNDU);
                first = false;
            } else {
                mpfr_min(r.lo_.get(), r.lo_.get(), a.get(), MPFR_RNDD);
                mpfr_max(r.hi_.get(), r.hi_.get(), b.get(), MPFR_RNDU);
            }
        }
    }
    return r;
}

Interval Interval::scaled(const Rat& c) const {
    Interval cc = Interval::from_rat(c, prec());
    return *this * cc;
}

Interval Interval::square() const {
    Interval r(prec());
    MpFloat alo(prec()), ahi(prec());
    mpfr_abs(alo.get(), lo_.get(), MPFR_RNDU);
    mpfr_abs(ahi.get(), hi_.get(), MPFR_RNDU);
    mpfr_max(ahi.get(), alo.get(), ahi.get(), MPFR_RNDU);
    mpfr_sqr(r.hi_.get(), ahi.get(), MPFR_RNDU);
    if (contains_zero()) {
        mpfr_set_zero(r.lo_.get(), 1);
    } else {
        mpfr_abs(alo.get(), lo_.get(), MPFR_RNDD);
        mpfr_abs(ahi.get(), hi_.get(), MPFR_RNDD);
        mpfr_min(alo.get(), alo.get(), ahi.get(), MPFR_RNDD);
        mpfr_sqr(r.lo_.get(), alo.get(), MPFR_RNDD);
    }
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_.get()) < 0) throw ZeroInput("Interval::sqrt: negative input");
    Interval r(prec());
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::point(const MpFloat& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set(r.lo_.get(), x.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), x.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (!is_positive()) throw ZeroInput("Interval::log: interval must be positive");
    Interval r(prec());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log_abs() const {
    if (contains_zero()) throw ZeroInput("Interval::log_abs: interval contains zero");
    if (is_positive()) return log();
    return (-*this).log();
}

Interval Interval::log_plus() const {
    if (mpfr_sgn(lo_.get()) < 0) throw ZeroInput("Interval::log_plus: negative input");
    return max_with(Interval::from_rat(Rat(1), prec())).log();
}

Interval Interval::max_with(const Interval& o) const {
    Interval r(std::max(prec(), o.prec()));
    mpfr_max(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

Interval CInterval::log_abs() const {
    Interval a2 = abs2();
    if (!a2.is_positive()) throw ZeroInput("CInterval::log_abs: box may contain zero");
    return a2.log().scaled(Rat(1, 2));
}

Interval CInterval::log_plus_abs() const {
    Interval one = Interval::from_rat(Rat(1), abs2().prec());
    return abs2().max_with(one).log().scaled(Rat(1, 2));
}

bool CInterval::disjoint(const CInterval& o) const {
    auto sep = [](const Interval& a, const Interval& b) {
        return mpfr_cmp(a.hi_mp().get(), b.lo_mp().get()) < 0 ||
               mpfr_cmp(b.hi_mp().get(), a.lo_mp().get()) < 0;
    };
    return sep(re_, o.re_) || sep(im_, o.im_);
}

} // namespace wirsing
