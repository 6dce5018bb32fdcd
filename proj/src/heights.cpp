#include "wirsing/heights.hpp"

#include <algorithm>

#include "wirsing/errors.hpp"

namespace wirsing {

LogVal global_height(const ProjPoint& P) {
    return LogVal::log_of(Rat(P.max_abs()));
}

LogVal local_height(const ProjPoint& P, const Form& f, const Place& v) {
    Int fP = f.eval(P);
    if (fP == 0)
        throw OnSupport("local_height: " + P.str() + " lies on { " + f.str() +
                        " = 0 }");
    if (v.arch) {
        Int num = pow_int(P.max_abs(), f.degree());
        return LogVal::log_of(make_rat(num, abs(fP)));
    }
    auto k = static_cast<unsigned long>(valuation(fP, v.p));
    return LogVal::log_of(Rat(pow_int(v.p, k)));
}

LogVal prox(const ProjPoint& P, const WeightedForms& forms, const PlaceSet& S) {
    LogVal total;
    for (const auto& v : S)
        for (const auto& [f, w] : forms)
            total += local_height(P, f, v).scaled(w);
    return total;
}

LogVal height_degree_identity_defect(const ProjPoint& P, const Form& f) {
    Int fP = f.eval(P);
    if (fP == 0)
        throw OnSupport("height_degree_identity_defect: form vanishes at " +
                        P.str());
    LogVal total = local_height(P, f, Place::infinite());
    for (const auto& [p, e] : factorize(abs(fP))) {
        (void)e;
        total += local_height(P, f, Place::prime(p));
    }
    return total - global_height(P).scaled(Rat(f.degree()));
}

LogVal pair_height(const ProjPoint& P, const ProjPoint& Q, const Place& v) {
    if (P.size() != Q.size())
        throw UsageError("pair_height: points of different spaces");
    if (P == Q) throw EqualPoints("pair_height: " + P.str());
    std::vector<Int> cross;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j)
            cross.push_back(P[i] * Q[j] - P[j] * Q[i]);
    if (v.arch) {
        Int m(0);
        for (const auto& c : cross) {
            Int a = abs(c);
            if (a > m) m = a;
        }
        return LogVal::log_of(make_rat(P.max_abs() * Q.max_abs(), m));
    }
    // primitive coordinate vectors have unit p-adic norm, so only the
    // denominator contributes: min_{i<j} v_p(cross) = v_p(gcd)
    Int g = vector_gcd(cross);
    auto k = static_cast<unsigned long>(valuation(g, v.p));
    return LogVal::log_of(Rat(pow_int(v.p, k)));
}

LogVal prox_slack(const WeightedForms& forms, const PlaceSet& S) {
    if (contains_arch(S)) return LogVal();
    LogVal slack;
    for (const auto& [f, w] : forms) {
        Int bound = Int(static_cast<unsigned long>(f.num_monomials())) *
                    f.max_abs_coeff();
        slack += LogVal::log_of(Rat(bound)).scaled(w);
    }
    return slack;
}

//------------------------------------------------------------------ divisors

Divisor1::Divisor1(std::vector<std::pair<ProjPoint, Rat>> terms)
    : terms_(std::move(terms)) {
    for (const auto& [p, w] : terms_) {
        if (p.size() != 2) throw UsageError("Divisor1: points must lie on P^1");
        if (w <= 0) throw UsageError("Divisor1: weights must be positive");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].first == terms_[i - 1].first)
            throw UsageError("Divisor1: repeated point " + terms_[i].first.str());
}

namespace {
std::vector<std::pair<ProjPoint, Rat>> unit_weights(
    const std::vector<ProjPoint>& points) {
    std::vector<std::pair<ProjPoint, Rat>> terms;
    terms.reserve(points.size());
    for (const auto& p : points) terms.emplace_back(p, Rat(1));
    return terms;
}
} // namespace

Divisor1::Divisor1(const std::vector<ProjPoint>& points)
    : Divisor1(unit_weights(points)) {}

Rat Divisor1::deg() const {
    Rat d(0);
    for (const auto& [p, w] : terms_) {
        (void)p;
        d += w;
    }
    return d;
}

bool Divisor1::contains(const ProjPoint& P) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first == P; });
}

WeightedForms Divisor1::forms() const {
    WeightedForms fs;
    fs.reserve(terms_.size());
    for (const auto& [p, w] : terms_)
        fs.emplace_back(Form::vanishing_at(p), w);
    return fs;
}

std::vector<std::pair<ProjPoint, Rat>> Divisor1::by_weight_desc() const {
    auto view = terms_;
    std::stable_sort(view.begin(), view.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return view;
}

LogVal prox(const ProjPoint& P, const Divisor1& D, const PlaceSet& S) {
    if (D.contains(P))
        throw OnSupport("prox: " + P.str() + " lies in the divisor support");
    return prox(P, D.forms(), S);
}

PlaceSet normalize_places(PlaceSet S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    return S;
}

bool contains_arch(const PlaceSet& S) {
    return std::any_of(S.begin(), S.end(), [](const Place& v) { return v.arch; });
}

} // namespace wirsing
