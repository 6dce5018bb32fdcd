#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wirsing/algebraic.hpp"
#include "wirsing/factor.hpp"
#include "wirsing/roots.hpp"

using namespace wirsing;

namespace {

ProjPoint pt(long a, long b) { return ProjPoint(std::vector<Int>{Int(a), Int(b)}); }

IntPoly poly(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPoly(std::move(v));
}

CInterval cbox(const Int& v, mpfr_prec_t prec) {
    return CInterval(Interval::from_int(v, prec), Interval::from_int(Int(0), prec));
}

} // namespace

TEST_CASE("algebraic points: construction and canonical data") {
    IntPoly f = poly({-2, 0, 1});  // x^2 - 2
    AlgPoint a(f, 0), b(f, 1);
    CHECK(a.degree() == 2);
    CHECK(!a.is_rational());
    CHECK(a.minpoly() == f);
    CHECK(a != b);
    CHECK(a < b);

    // primitivization and sign normalization
    CHECK(AlgPoint(poly({4, 0, -2}), 0).minpoly() == f);
    // degree-1 input collapses to the rational case
    AlgPoint r(poly({-3, 2}), 0);
    CHECK(r.is_rational());
    CHECK(r.rational_point() == pt(3, 2));

    CHECK_THROWS_AS(AlgPoint(poly({-1, 0, 1}), 0), UsageError);   // (x-1)(x+1)
    CHECK_THROWS_AS(AlgPoint(poly({-2, 0, 1}), 2), BadIndex);
    CHECK_THROWS_AS(AlgPoint(poly({5}), 0), UsageError);

    AlgPoint inf{ProjPoint::p1_infinity()};
    CHECK(inf.degree() == 1);
    CHECK(inf.min_form() == BiForm(1, {Int(-1), Int(0)}));  // -y
    CHECK(a.min_form() == BiForm(2, {Int(-2), Int(0), Int(1)}));

    // conjugates of x^2 - 2 are +-sqrt(2); canonical order is stable
    CInterval c0 = a.conjugate(96);
    CHECK(c0.re().width() < 1e-25);
    CHECK(c0.im().contains_zero());
}

TEST_CASE("algebraic heights: pinned values") {
    LogVal half_log2 = LogVal::log_of(Rat(2)).scaled(Rat(1, 2));

    AlgReal h1 = alg_height(AlgPoint(poly({-2, 0, 1}), 0));  // x^2 - 2
    CHECK(h1.is_exact());  // binomial: fully exact
    CHECK(h1.exact_part() == half_log2);

    AlgReal h2 = alg_height(AlgPoint(poly({-1, 0, 2}), 0));  // 2x^2 - 1
    CHECK(h2.is_exact());
    CHECK(h2.exact_part() == half_log2);

    CHECK(alg_height(AlgPoint(ProjPoint::p1_infinity())).exact_part().is_zero());
    CHECK(alg_height(AlgPoint(pt(3, 4))).exact_part() == LogVal::log_of(Rat(4)));

    AlgReal h3 = alg_height(AlgPoint(poly({-2, 0, 0, 1}), 0));  // x^3 - 2
    CHECK(h3.is_exact());
    CHECK(h3.exact_part() == LogVal::log_of(Rat(2)).scaled(Rat(1, 3)));

    // golden ratio: h = (1/2) log((1 + sqrt 5)/2), genuinely an enclosure
    AlgReal hg = alg_height(AlgPoint(poly({-1, -1, 1}), 0));
    CHECK(!hg.is_exact());
    Interval e = hg.enclosure(128);
    CHECK(e.width() < 1e-30);
    CHECK(e.lo() <= 0.240605912529802);   // (1/2) log((1+sqrt 5)/2)
    CHECK(e.hi() >= 0.240605912529801);
}

TEST_CASE("AlgReal: arithmetic, cancellation, comparison ladder") {
    IntPoly g1 = poly({-1, -1, 1});  // x^2 - x - 1
    IntPoly g2 = poly({-1, 1, 1});   // x^2 + x - 1, mirrored roots
    AlgReal a = AlgReal::log_plus_sum(Rat(1), g1);
    AlgReal b = AlgReal::log_plus_sum(Rat(1), g2);

    CHECK((a - a).is_exact());  // identical terms coalesce away
    CHECK((a - a).sign(256) == Sign4::Zero);
    CHECK((a + a).scaled(Rat(1, 2)).sign_vs(Rat(1), a, 256) == Sign4::Zero);

    // log phi vs (1/2) log 2: decided numerically
    CHECK(a.sign_vs(Rat(1), AlgReal(LogVal::log_of(Rat(2)).scaled(Rat(1, 2))),
                    256) == Sign4::Positive);
    CHECK(a.sign(256) == Sign4::Positive);
    CHECK((-a).sign(256) == Sign4::Negative);

    // equal transcendental values through different polynomials: the ladder
    // cannot separate them and must admit it
    CHECK(a.sign_vs(Rat(1), b, 512) == Sign4::Undecided);

    // scaling by zero clears everything
    CHECK(a.scaled(Rat(0)).is_exact());
}

TEST_CASE("proximity of algebraic points: pinned values") {
    AlgPoint sqrt2(poly({-2, 0, 1}), 0);

    Divisor1 D2(std::vector<ProjPoint>{pt(2, 1)});
    AlgReal m = prox_alg(sqrt2, D2, {Place::prime(7)});
    CHECK(m.is_exact());
    CHECK(m.exact_part().is_zero());  // v_7(F~(2,1)) = v_7(2) = 0

    Divisor1 D0(std::vector<ProjPoint>{pt(0, 1)});
    AlgReal m0 = prox_alg(sqrt2, D0, {Place::prime(2)});
    CHECK(m0.is_exact());
    CHECK(m0.exact_part() == LogVal::log_of(Rat(2)).scaled(Rat(1, 2)));

    Divisor1 D1(std::vector<ProjPoint>{pt(1, 1)});
    AlgReal m1 = prox_alg(sqrt2, D1, {Place::infinite()});
    CHECK(m1.is_exact());  // binomial minimal polynomial
    CHECK(m1.exact_part() == LogVal::log_of(Rat(2)).scaled(Rat(1, 2)));

    // rational points delegate to the exact rational proximity
    Divisor1 Dpair(std::vector<ProjPoint>{pt(0, 1), ProjPoint::p1_infinity()});
    PlaceSet S{Place::infinite(), Place::prime(2)};
    AlgReal mr = prox_alg(AlgPoint(pt(8, 1)), Dpair, S);
    CHECK(mr.is_exact());
    CHECK(mr.exact_part() == LogVal::log_of(Rat(64)));
    CHECK_THROWS_AS(prox_alg(AlgPoint(pt(0, 1)), Dpair, S), OnSupport);
}

TEST_CASE("conjugate-sum collapse: Sigma log|b a_j - a| = log(|F~(a,b)|/lead)") {
    // the exactness hinge of the archimedean proximity decomposition,
    // cross-checked numerically against certified root boxes
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long> c(-9, 9);
    mpfr_prec_t prec = 160;
    int done = 0;
    while (done < 50) {
        std::vector<long> cs{c(rng), c(rng), c(rng), c(rng)};
        if (cs[3] == 0) continue;
        IntPoly f = poly(cs).primitive();
        if (f.degree() != 3 || !is_irreducible(f)) continue;
        if (f.leading() < 0) f = -f;
        long a = c(rng), b = c(rng);
        if (a == 0 && b == 0) continue;
        Int g = gcd(Int(a), Int(b));
        Int A = Int(a) / g, B = Int(b) / g;
        Int FQ = f.eval_homog(A, B);
        if (FQ == 0) continue;

        auto boxes = conjugate_boxes(f, prec);
        Interval sum = Interval::from_int(Int(0), prec);
        for (const auto& box : boxes) {
            CInterval lin = cbox(B, prec) * box - cbox(A, prec);
            sum = sum + lin.log_abs();
        }
        Interval exact = Interval::log_rat(make_rat(abs(FQ), f.leading()), prec);
        CHECK((sum - exact).contains_zero());
        ++done;
    }
}

TEST_CASE("sigma and psi: pinned values") {
    CHECK(sigma_point({pt(1, 1), pt(2, 1)}) ==
          ProjPoint(std::vector<Int>{Int(2), Int(-3), Int(1)}));
    CHECK(sigma_point({pt(0, 1), ProjPoint::p1_infinity()}) ==
          ProjPoint(std::vector<Int>{Int(0), Int(1), Int(0)}));

    CHECK(psi_point(AlgPoint(poly({-2, 0, 1}), 0)) ==
          ProjPoint(std::vector<Int>{Int(-2), Int(0), Int(1)}));
    CHECK(psi_point(AlgPoint(poly({-1, -1, 0, 1}), 0)) ==
          ProjPoint(std::vector<Int>{Int(-1), Int(-1), Int(0), Int(1)}));
    CHECK(psi_point(AlgPoint(pt(5, 3))) ==
          ProjPoint(std::vector<Int>{Int(-5), Int(3)}));
    CHECK(psi_point(AlgPoint(ProjPoint::p1_infinity())) ==
          ProjPoint(std::vector<Int>{Int(1), Int(0)}));
}

TEST_CASE("hyperplane forms: pinned values and vanishing identities") {
    CHECK(hyperplane_form(pt(2, 1), 2) == Form::linear({Int(1), Int(2), Int(4)}));
    CHECK(hyperplane_form(pt(0, 1), 3) ==
          Form::linear({Int(1), Int(0), Int(0), Int(0)}));
    CHECK(hyperplane_form(ProjPoint::p1_infinity(), 2) ==
          Form::linear({Int(0), Int(0), Int(1)}));

    // H_P(psi Q) = +- F~_Q(a, b) on the normalized representative
    AlgPoint q(poly({-1, -1, 0, 1}), 0);
    ProjPoint z = psi_point(q);
    for (long a : {0L, 1L, 2L, 5L}) {
        Int expect = q.minpoly().eval_homog(Int(a), Int(1));
        CHECK(abs(hyperplane_form(pt(a, 1), 3).eval(z)) == abs(expect));
    }

    // H_P kills sigma of any tuple containing P, exactly
    std::mt19937_64 rng(88);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<ProjPoint> tuple;
        std::size_t n = 2 + iter % 3;
        for (std::size_t i = 0; i < n; ++i) {
            long a = c(rng), b = c(rng);
            if (a == 0 && b == 0) a = 1;
            tuple.push_back(pt(a, b));
        }
        ProjPoint s = sigma_point(tuple);
        for (const auto& P : tuple)
            CHECK(hyperplane_form(P, static_cast<unsigned>(n)).eval(s) == 0);
        // permutation invariance of the symmetric map
        std::reverse(tuple.begin(), tuple.end());
        CHECK(sigma_point(tuple) == s);
    }
}

TEST_CASE("psi equals sigma of the conjugates: resultant oracle") {
    // Res_z(f(z), x - z y) = lead * prod_j (x - alpha_j y) computed by
    // Sylvester cofactor expansion over Z[x,y] must reproduce the
    // homogenized coefficient form
    using oracles::homog_form;
    using oracles::resultant_form;

    CHECK(resultant_form(poly({-2, 0, 1})) == homog_form(poly({-2, 0, 1})));

    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> c(-9, 9);
    int done = 0;
    while (done < 60) {
        std::vector<long> cs{c(rng), c(rng), c(rng), c(rng)};
        if (cs[3] == 0) continue;
        IntPoly f = poly(cs).primitive();
        if (f.degree() != 3 || !is_irreducible(f)) continue;
        if (f.leading() < 0) f = -f;
        oracles::BiPoly res = resultant_form(f);
        oracles::BiPoly hom = homog_form(f);
        CHECK((res == hom || res == -hom));
        // and the library's psi is that same coefficient vector projectively
        CHECK(psi_point(AlgPoint(f, 0)) == ProjPoint(f.coeffs()));
        ++done;
    }
}

TEST_CASE("transport: defects small, exact families exactly flat") {
    Divisor1 D(std::vector<ProjPoint>{pt(0, 1), pt(1, 1), ProjPoint::p1_infinity()});
    PlaceSet S{Place::infinite(), Place::prime(2)};
    double slack = 4 * std::log(3.0);  // (1 + deg D) log(d + 1), d = 2

    AlgPoint sqrt2(poly({-2, 0, 1}), 0);
    TransportDefect td = transport_defect(sqrt2, D, S, 1e-6, 1024);
    CHECK(td.m_defect.width() <= 1e-6);
    CHECK(td.h_defect.width() <= 1e-6);
    CHECK(std::abs(td.m_defect.mid()) <= slack);
    CHECK(std::abs(td.h_defect.mid()) <= slack);

    // x^3 - n: psi = (-n : 0 : 0 : 1), h(psi Q) = log n = 3 h(Q) exactly
    for (long n : {2L, 3L, 5L, 6L, 7L, 10L, 100L, 999L}) {
        IntPoly f = poly({-n, 0, 0, 1});
        if (!is_irreducible(f)) continue;
        AlgPoint q(f, 0);
        TransportDefect t = transport_defect(q, D, S, 1e-6, 1024);
        CHECK(t.h_defect.contains_zero());
        CHECK(std::abs(t.m_defect.mid()) <= slack);
    }

    // a nonzero height defect: x^3 - x - 1 has coefficient height 0 but
    // positive Mahler measure (the plastic number)
    AlgPoint plastic(poly({-1, -1, 0, 1}), 0);
    TransportDefect tp = transport_defect(plastic, D, S, 1e-6, 1024);
    CHECK(tp.h_defect.hi() < 0.0);
    CHECK(tp.h_defect.lo() > -slack);
}
