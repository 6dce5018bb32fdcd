#include "wirsing/logval.hpp"

#include <numeric>
#include <ostream>

namespace wirsing {

Place Place::prime(const Int& p) {
    if (!is_prime(p)) throw NotPrime("Place::prime: " + p.get_str() + " is not prime");
    return {false, p};
}

LogVal LogVal::log_of(const Rat& q) { return root_log(q, 1); }

LogVal LogVal::root_log(const Rat& q, unsigned long r) {
    if (q <= 0) throw ZeroInput("LogVal: base must be positive");
    if (r == 0) throw ZeroInput("LogVal: root index must be >= 1");
    LogVal v;
    v.q_ = q;
    v.r_ = r;
    v.reduce();
    return v;
}

int LogVal::sign() const {
    if (q_ == 1) return 0;
    return q_ > 1 ? 1 : -1;
}

LogVal LogVal::operator+(const LogVal& o) const {
    // (1/r1) log q1 + (1/r2) log q2 = (1/L) log(q1^(L/r1) q2^(L/r2))
    unsigned long L = std::lcm(r_, o.r_);
    LogVal v;
    v.q_ = pow_rat(q_, static_cast<long>(L / r_)) * pow_rat(o.q_, static_cast<long>(L / o.r_));
    v.r_ = L;
    v.reduce();
    return v;
}

LogVal LogVal::operator-() const {
    LogVal v;
    v.q_ = Rat(1) / q_;
    v.r_ = r_;
    return v;
}

namespace {
long checked_si(const Int& n, const char* where) {
    if (!mpz_fits_slong_p(n.get_mpz_t()))
        throw UnsupportedRegime(std::string(where) + ": exponent out of range");
    return n.get_si();
}
} // namespace

LogVal LogVal::scaled(const Rat& c) const {
    // c * (1/r) log q = (1/(r*den(c))) log q^num(c)
    if (c == 0 || q_ == 1) return LogVal();
    LogVal v;
    v.q_ = pow_rat(q_, checked_si(c.get_num(), "LogVal::scaled"));
    v.r_ = r_ * c.get_den().get_ui();
    v.reduce();
    return v;
}

Cmp LogVal::compare_scaled(const Rat& t, const LogVal& o) const {
    // sign of (1/ra) log qa - (tn/td)(1/rb) log qb,   td > 0
    //   = sign of td*rb*log qa - tn*ra*log qb
    //   = sign of log( qa^(td*rb) / qb^(tn*ra) )
    const Int tn = t.get_num(), td = t.get_den();
    Rat lhs = pow_rat(q_, checked_si(td * Int(o.r_), "LogVal::compare_scaled"));
    Rat rhs = pow_rat(o.q_, checked_si(tn * Int(r_), "LogVal::compare_scaled"));
    if (lhs == rhs) return Cmp::Equal;
    return lhs < rhs ? Cmp::Less : Cmp::Greater;
}

Interval LogVal::enclosure(mpfr_prec_t prec) const {
    return Interval::log_rat(q_, prec).scaled(Rat(1, r_));
}

void LogVal::reduce() {
    if (q_ == 1) { r_ = 1; return; }
    // try to replace q = s^j by s for prime divisors j of r
    bool changed = true;
    while (changed && r_ > 1) {
        changed = false;
        for (unsigned long j = 2; j <= r_; ++j) {
            if (r_ % j != 0) continue;
            Int nr, dr;
            int nok = mpz_root(nr.get_mpz_t(), q_.get_num().get_mpz_t(), j);
            int dok = mpz_root(dr.get_mpz_t(), q_.get_den().get_mpz_t(), j);
            if (nok && dok) {
                q_ = make_rat(nr, dr);
                r_ /= j;
                changed = true;
                break;
            }
        }
    }
}

std::ostream& operator<<(std::ostream& os, const LogVal& v) {
    if (v.root_index() == 1) return os << "log(" << v.base() << ")";
    return os << "(1/" << v.root_index() << ")log(" << v.base() << ")";
}

LogVal norm_at(const Rat& x, const Place& v) {
    if (x == 0) throw ZeroInput("norm_at: x must be nonzero");
    if (v.arch) return LogVal::log_of(abs(x));
    long e = valuation(x, v.p);
    // ||x||_p = p^{-e};  log of that is -e log p
    return LogVal::log_of(pow_rat(Rat(v.p), -e));
}

LogVal product_formula_defect(const Rat& x) {
    if (x == 0) throw ZeroInput("product_formula_defect: x must be nonzero");
    LogVal acc = norm_at(x, Place::infinite());
    for (const Int& p : support(x)) acc += norm_at(x, Place::prime(p));
    return acc;
}

} // namespace wirsing
