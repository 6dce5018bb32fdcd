#ifndef WIRSING_HEIGHTS_HPP
#define WIRSING_HEIGHTS_HPP

#include <utility>
#include <vector>

#include "wirsing/logval.hpp"
#include "wirsing/projective.hpp"

namespace wirsing {

//=============================================================================
// Weil heights and proximity functions over the rationals, all exact.
//
// Coordinates are primitive and forms are primitive, so the local height of
// P against f at a place v is
//     log ( max_i ||x_i||_v^deg(f) / ||f(P)||_v ),
// a nonnegative multiple of log p at finite places and an exact log of a
// rational at infinity.  Summed over all places this telescopes, by the
// product formula applied to the integer f(P), to deg(f) * h(P) exactly.
//=============================================================================

using PlaceSet = std::vector<Place>;
using WeightedForms = std::vector<std::pair<Form, Rat>>;

// log max_i |x_i| on the primitive representative
LogVal global_height(const ProjPoint& P);

// local height of P against the form f at v; throws OnSupport if f(P) = 0
LogVal local_height(const ProjPoint& P, const Form& f, const Place& v);

// Sigma_{v in S} Sigma_i  w_i * local_height(P, f_i, v)
LogVal prox(const ProjPoint& P, const WeightedForms& forms, const PlaceSet& S);

// Sigma_v local_height(P, f, v) - deg(f) * global_height(P); identically zero
LogVal height_degree_identity_defect(const ProjPoint& P, const Form& f);

// local pair height  log( max||x||_v max||y||_v / max_{i<j} ||x_i y_j - x_j y_i||_v );
// throws EqualPoints on P = Q
LogVal pair_height(const ProjPoint& P, const ProjPoint& Q, const Place& v);

// an upper bound for prox(P, forms, S) - deg * h(P) that is zero when S
// contains the archimedean place: the monomial slack
// [inf not in S] * Sigma_i w_i log(N_i * max|c_i|)
LogVal prox_slack(const WeightedForms& forms, const PlaceSet& S);

//------------------------------------------------------------------ divisors

// effective divisor on P^1: distinct rational points with positive weights
class Divisor1 {
public:
    explicit Divisor1(std::vector<std::pair<ProjPoint, Rat>> terms);
    // all weights 1
    explicit Divisor1(const std::vector<ProjPoint>& points);

    std::size_t size() const { return terms_.size(); }
    Rat deg() const;
    const std::vector<std::pair<ProjPoint, Rat>>& terms() const { return terms_; }
    const ProjPoint& point(std::size_t i) const { return terms_[i].first; }
    const Rat& weight(std::size_t i) const { return terms_[i].second; }

    bool contains(const ProjPoint& P) const;
    // the weighted vanishing forms (b x - a y per point)
    WeightedForms forms() const;
    // view sorted by descending weight (ties by point order)
    std::vector<std::pair<ProjPoint, Rat>> by_weight_desc() const;

private:
    std::vector<std::pair<ProjPoint, Rat>> terms_;  // canonical point order
};

// prox against the divisor's forms; throws OnSupport if P lies in the support
LogVal prox(const ProjPoint& P, const Divisor1& D, const PlaceSet& S);

// deduplicate and sort a place set canonically
PlaceSet normalize_places(PlaceSet S);
bool contains_arch(const PlaceSet& S);

} // namespace wirsing

#endif
