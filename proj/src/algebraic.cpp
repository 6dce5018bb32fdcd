#include "wirsing/algebraic.hpp"

#include <algorithm>

#include "wirsing/errors.hpp"
#include "wirsing/factor.hpp"
#include "wirsing/roots.hpp"

namespace wirsing {

//=============================================================================
// AlgPoint
//=============================================================================

AlgPoint::AlgPoint(ProjPoint rational) : rat_(std::move(rational)) {
    if (rat_->size() != 2)
        throw UsageError("AlgPoint: rational points live on P^1");
}

AlgPoint::AlgPoint(const IntPoly& minpoly, unsigned root_index) {
    IntPoly f = minpoly.primitive();
    if (f.degree() < 1) throw UsageError("AlgPoint: constant minimal polynomial");
    if (f.leading() < 0) f = -f;
    if (root_index >= static_cast<unsigned>(f.degree()))
        throw BadIndex("AlgPoint: root index out of range");
    if (f.degree() == 1) {
        rat_ = ProjPoint(std::vector<Int>{-f[0], f[1]});
        return;
    }
    if (f.degree() <= 4) {
        if (!is_irreducible(f))
            throw UsageError("AlgPoint: reducible minimal polynomial " + f.str());
    } else if (!rational_roots(f).empty()) {
        throw UsageError("AlgPoint: minimal polynomial has a rational root");
    }
    poly_ = f;
    idx_ = root_index;
}

unsigned AlgPoint::degree() const {
    return is_rational() ? 1u : static_cast<unsigned>(poly_.degree());
}

const ProjPoint& AlgPoint::rational_point() const {
    if (!is_rational()) throw UsageError("AlgPoint: not a rational point");
    return *rat_;
}

const IntPoly& AlgPoint::minpoly() const {
    if (is_rational()) throw UsageError("AlgPoint: rational point has no stored minimal polynomial");
    return poly_;
}

BiForm AlgPoint::min_form() const {
    if (is_rational()) return BiForm::from_point((*rat_)[0], (*rat_)[1]);
    return BiForm::homogenize(poly_, static_cast<unsigned>(poly_.degree()));
}

CInterval AlgPoint::conjugate(mpfr_prec_t prec) const {
    if (is_rational())
        throw UsageError("AlgPoint: rational point has no conjugate boxes");
    return conjugate_boxes(poly_, prec)[idx_];
}

bool AlgPoint::operator==(const AlgPoint& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return *rat_ == *o.rat_;
    return poly_ == o.poly_ && idx_ == o.idx_;
}

bool AlgPoint::operator<(const AlgPoint& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    if (is_rational()) return *rat_ < *o.rat_;
    if (poly_ != o.poly_) return (poly_ <=> o.poly_) == std::strong_ordering::less;
    return idx_ < o.idx_;
}

std::string AlgPoint::str() const {
    if (is_rational()) return rat_->str();
    return "root#" + std::to_string(idx_) + " of " + poly_.str();
}

//=============================================================================
// AlgReal
//=============================================================================

namespace {

// exact value of Sigma_j log+ |root_j| when the polynomial is degree 1 or a
// binomial c_d x^d + c_0 (all roots share modulus |c_0/c_d|^(1/d)):
// log(max(|c_0|, |c_d|) / |c_d|)
std::optional<LogVal> exact_log_plus_sum(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) return LogVal();
    for (int i = 1; i < d; ++i)
        if (f[static_cast<size_t>(i)] != 0) return std::nullopt;
    Int c0 = abs(f[0]), cd = abs(f.leading());
    if (c0 == 0) return LogVal();  // binomial reduced to c_d x^d: roots at 0
    Int num = c0 > cd ? c0 : cd;
    return LogVal::log_of(make_rat(num, cd));
}

} // namespace

AlgReal AlgReal::log_plus_sum(const Rat& w, const IntPoly& f) {
    AlgReal r;
    if (auto exact = exact_log_plus_sum(f)) {
        r.exact_ = exact->scaled(w);
        return r;
    }
    r.plus_.push_back({w, f});
    return r;
}

void AlgReal::coalesce() {
    std::sort(plus_.begin(), plus_.end(), [](const PlusTerm& a, const PlusTerm& b) {
        return (a.poly <=> b.poly) == std::strong_ordering::less;
    });
    std::vector<PlusTerm> merged;
    for (auto& t : plus_) {
        if (!merged.empty() && merged.back().poly == t.poly)
            merged.back().weight += t.weight;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const PlusTerm& t) { return t.weight == 0; }),
                 merged.end());
    plus_ = std::move(merged);
}

AlgReal AlgReal::operator+(const AlgReal& o) const {
    AlgReal r;
    r.exact_ = exact_ + o.exact_;
    r.plus_ = plus_;
    r.plus_.insert(r.plus_.end(), o.plus_.begin(), o.plus_.end());
    r.coalesce();
    return r;
}

AlgReal AlgReal::operator-() const {
    AlgReal r;
    r.exact_ = -exact_;
    r.plus_ = plus_;
    for (auto& t : r.plus_) t.weight = -t.weight;
    return r;
}

AlgReal AlgReal::scaled(const Rat& c) const {
    if (c == 0) return AlgReal();
    AlgReal r;
    r.exact_ = exact_.scaled(c);
    r.plus_ = plus_;
    for (auto& t : r.plus_) t.weight *= c;
    return r;
}

Interval AlgReal::enclosure(mpfr_prec_t prec) const {
    Interval total = exact_.enclosure(prec);
    for (const auto& t : plus_) {
        auto boxes = conjugate_boxes(t.poly, prec);
        Interval sum = Interval::from_int(Int(0), prec);
        for (const auto& b : boxes) sum = sum + b.log_plus_abs();
        total = total + sum.scaled(t.weight);
    }
    return total;
}

Interval AlgReal::enclosure_within(double eps, mpfr_prec_t cap) const {
    mpfr_prec_t prec = 64;
    for (;;) {
        if (prec > cap) prec = cap;
        Interval e = enclosure(prec);
        if (e.width() <= eps) return e;
        if (prec >= cap)
            throw PrecisionExhausted("AlgReal: enclosure width " +
                                     std::to_string(e.width()) +
                                     " above target at precision cap");
        prec *= 2;
    }
}

Sign4 AlgReal::sign_vs(const Rat& t, const AlgReal& o, mpfr_prec_t cap) const {
    AlgReal d = *this - o.scaled(t);
    if (d.plus_.empty()) {
        switch (d.exact_.sign()) {
            case -1: return Sign4::Negative;
            case 0: return Sign4::Zero;
            default: return Sign4::Positive;
        }
    }
    mpfr_prec_t prec = 64;
    for (;;) {
        if (prec > cap) prec = cap;
        Interval e = d.enclosure(prec);
        if (e.is_negative()) return Sign4::Negative;
        if (e.is_positive()) return Sign4::Positive;
        if (prec >= cap) return Sign4::Undecided;
        prec *= 2;
    }
}

//=============================================================================
// heights and proximity
//=============================================================================

AlgReal alg_height(const AlgPoint& P) {
    if (P.is_rational()) return AlgReal(global_height(P.rational_point()));
    const IntPoly& f = P.minpoly();
    Rat inv_e(1, f.degree());
    AlgReal h(LogVal::log_of(Rat(f.leading())).scaled(inv_e));
    return h + AlgReal::log_plus_sum(inv_e, f);
}

AlgReal prox_alg(const AlgPoint& P, const Divisor1& D, const PlaceSet& S) {
    if (P.is_rational()) return AlgReal(prox(P.rational_point(), D, S));

    const IntPoly& f = P.minpoly();
    Int e(f.degree());
    AlgReal total;
    for (const auto& v : S) {
        for (const auto& [Q, w] : D.terms()) {
            Int FQ = f.eval_homog(Q[0], Q[1]);  // F~(a, b) != 0, irreducible
            Rat we = w / Rat(e);
            if (v.arch) {
                // (w/e) [ Sigma_j log+|alpha_j| + log|lead| - log|F~(a,b)| ]
                LogVal exact = LogVal::log_of(make_rat(f.leading(), abs(FQ)));
                total += AlgReal(exact.scaled(we));
                total += AlgReal::log_plus_sum(we, f);
            } else {
                auto k = static_cast<unsigned long>(valuation(FQ, v.p));
                total += AlgReal(LogVal::log_of(Rat(pow_int(v.p, k))).scaled(we));
            }
        }
    }
    return total;
}

//=============================================================================
// symmetric transport
//=============================================================================

ProjPoint sigma_point(const std::vector<ProjPoint>& tuple) {
    if (tuple.empty()) throw UsageError("sigma_point: empty tuple");
    BiForm prod(0, {Int(1)});
    for (const auto& p : tuple) {
        if (p.size() != 2) throw UsageError("sigma_point: points must lie on P^1");
        prod = prod * BiForm::from_point(p[0], p[1]);
    }
    return ProjPoint(prod.coeffs());
}

ProjPoint psi_point(const AlgPoint& P) {
    return ProjPoint(P.min_form().coeffs());
}

Form hyperplane_form(const ProjPoint& P, unsigned d) {
    if (P.size() != 2) throw UsageError("hyperplane_form: P must lie on P^1");
    std::vector<Int> coeffs(d + 1);
    for (unsigned i = 0; i <= d; ++i)
        coeffs[i] = pow_int(P[0], i) * pow_int(P[1], d - i);
    return Form::linear(coeffs);
}

LogVal prox_transported(const ProjPoint& Z, const Divisor1& D, const PlaceSet& S) {
    WeightedForms forms;
    for (const auto& [Q, w] : D.terms())
        forms.emplace_back(hyperplane_form(Q, static_cast<unsigned>(Z.dim())), w);
    return prox(Z, forms, S);
}

TransportDefect transport_defect(const AlgPoint& Q, const Divisor1& D,
                                 const PlaceSet& S, double eps,
                                 mpfr_prec_t cap) {
    ProjPoint Z = psi_point(Q);
    Rat e(Q.degree());
    AlgReal m_def = AlgReal(prox_transported(Z, D, S)) - prox_alg(Q, D, S).scaled(e);
    AlgReal h_def = AlgReal(global_height(Z)) - alg_height(Q).scaled(e);
    return {m_def.enclosure_within(eps, cap), h_def.enclosure_within(eps, cap)};
}

} // namespace wirsing
