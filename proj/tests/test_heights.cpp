#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "wirsing/heights.hpp"

using namespace wirsing;

namespace {

ProjPoint pt(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return ProjPoint(std::move(v));
}

Form lin(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return Form::linear(v);
}

LogVal abs_val(const LogVal& v) { return v.sign() < 0 ? -v : v; }

bool leq(const LogVal& a, const LogVal& b) {
    return (b - a).sign() >= 0;
}

} // namespace

TEST_CASE("projective point normalization") {
    CHECK(pt({6, 10, 15}).coords() == std::vector<Int>{6, 10, 15});
    CHECK(pt({4, -8}).coords() == std::vector<Int>{1, -2});
    CHECK(pt({-3, -6}).coords() == std::vector<Int>{1, 2});
    CHECK(pt({0, -5, 10}).coords() == std::vector<Int>{0, 1, -2});
    CHECK_THROWS_AS(pt({0, 0}), ZeroInput);

    ProjPoint q(std::vector<Rat>{Rat(1, 2), Rat(1, 3)});
    CHECK(q.coords() == std::vector<Int>{3, 2});

    CHECK(ProjPoint::p1(Rat(-1, 2)).coords() == std::vector<Int>{1, -2});
    CHECK(ProjPoint::p1(Rat(-1, 2)).to_rat() == Rat(-1, 2));
    CHECK(ProjPoint::p1_infinity().is_p1_infinity());
    CHECK_THROWS_AS(ProjPoint::p1_infinity().to_rat(), UnsupportedRegime);
    CHECK(pt({2, 1}) == ProjPoint::p1(Rat(2)));

    CHECK(pt({1, 0}).max_abs() == 1);
    CHECK(pt({3, 4, 1}).max_abs() == 4);
    CHECK(pt({1, 2}) < pt({1, 3}));
    CHECK(pt({1, 2}).str() == "(1 : 2)");
}

TEST_CASE("forms: normalization, evaluation, products") {
    Form f = lin({2, 2});  // content divided out
    CHECK(f == lin({1, 1}));
    CHECK(f.degree() == 1);
    CHECK(f.num_monomials() == 2);

    Form xyz = lin({1, 1, 1});
    Form sq = xyz * xyz;
    CHECK(sq.degree() == 2);
    CHECK(sq.num_monomials() == 6);
    CHECK(sq.max_abs_coeff() == 2);  // cross terms; still primitive
    CHECK(sq.eval(pt({3, 4, 1})) == 64);

    CHECK(Form::vanishing_at(pt({2, 1})).eval(pt({2, 1})) == 0);
    // convention b x - a y: the form at infinity (1 : 0) is -y
    CHECK(Form::vanishing_at(ProjPoint::p1_infinity()).eval(pt({5, 1})) == -1);
    CHECK(Form::vanishing_at(pt({0, 1})) == lin({1, 0}));

    BiForm bf(2, {Int(2), Int(-3), Int(1)});  // (x - y)(x - 2y)
    Form fb = Form::from_biform(bf);
    CHECK(fb.eval(pt({3, 1})) == 2);
    CHECK(fb.degree() == 2);

    CHECK(lin({1, 0, -2}).str() == "x - 2z");
    CHECK_THROWS_AS(Form(2, {Monomial{Int(1), {1, 0}}, Monomial{Int(1), {1, 1}}}),
                    UsageError);
    CHECK_THROWS_AS(Form(2, {Monomial{Int(0), {1, 0}}}), ZeroInput);
}

TEST_CASE("local heights: pinned values") {
    ProjPoint P81 = pt({8, 1});
    Form fx = lin({1, 0});
    CHECK(local_height(P81, fx, Place::prime(2)) == LogVal::log_of(Rat(8)));
    CHECK(local_height(P81, fx, Place::infinite()).is_zero());

    ProjPoint P341 = pt({3, 4, 1});
    Form fsum = lin({1, 1, 1});
    CHECK(local_height(P341, fsum, Place::infinite()) ==
          LogVal::log_of(Rat(1, 2)));

    CHECK_THROWS_AS(local_height(pt({0, 1}), fx, Place::infinite()), OnSupport);
}

TEST_CASE("global height: pinned values") {
    CHECK(global_height(pt({3, 4})) == LogVal::log_of(Rat(4)));
    CHECK(global_height(pt({1, 0, 0, 0})).is_zero());
    CHECK(global_height(pt({6, 10, 15})) == LogVal::log_of(Rat(15)));
}

TEST_CASE("height-degree identity: exactly zero") {
    CHECK(height_degree_identity_defect(pt({8, 1}), lin({1, 0})).is_zero());
    Form xyz = lin({1, 1, 1});
    CHECK(height_degree_identity_defect(pt({3, 4, 1}), xyz * xyz).is_zero());

    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<long> c(-30, 30);
    auto draw3 = [&]() {
        std::vector<long> v;
        do {
            v = {c(rng), c(rng), c(rng)};
        } while (v[0] == 0 && v[1] == 0 && v[2] == 0);
        return v;
    };
    int done = 0;
    while (done < 1000) {
        ProjPoint P = pt(draw3());
        Form h = lin(draw3()) * lin(draw3());
        if (h.eval(P) == 0) continue;
        CHECK(height_degree_identity_defect(P, h).is_zero());
        ++done;
    }
}

TEST_CASE("proximity: pinned values and the corrected upper bound") {
    ProjPoint P = pt({8, 1});
    Divisor1 D(std::vector<ProjPoint>{pt({0, 1}), ProjPoint::p1_infinity()});
    PlaceSet S{Place::infinite(), Place::prime(2)};
    CHECK(prox(P, D, S) == LogVal::log_of(Rat(64)));
    CHECK(prox(P, D, PlaceSet{}).is_zero());
    CHECK_THROWS_AS(prox(pt({0, 1}), D, S), OnSupport);

    // divisor bookkeeping
    CHECK(D.deg() == Rat(2));
    Divisor1 W({{pt({0, 1}), Rat(1, 2)}, {pt({1, 1}), Rat(3)}});
    CHECK(W.deg() == Rat(7, 2));
    CHECK(W.by_weight_desc().front().second == Rat(3));
    CHECK_THROWS_AS(Divisor1({{pt({0, 1}), Rat(-1)}}), UsageError);
    CHECK_THROWS_AS(
        Divisor1(std::vector<ProjPoint>{pt({0, 1}), pt({0, 1})}), UsageError);

    // m_{D,S}(P) <= deg(D) h(P) + [inf not in S] * slack, exact comparison
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> c(-60, 60);
    Divisor1 D4(std::vector<ProjPoint>{pt({0, 1}), pt({1, 1}),
                                       ProjPoint::p1_infinity(), pt({2, 1})});
    std::vector<PlaceSet> sets{
        {Place::infinite(), Place::prime(2)},
        {Place::infinite(), Place::prime(2), Place::prime(3)},
        {Place::prime(2), Place::prime(3)},
        {Place::prime(5)},
    };
    int done = 0;
    while (done < 400) {
        long a = c(rng), b = c(rng);
        if (a == 0 && b == 0) continue;
        ProjPoint P2 = pt({a, b});
        if (D4.contains(P2)) continue;
        for (const auto& S2 : sets) {
            LogVal m = prox(P2, D4, S2);
            LogVal bound = global_height(P2).scaled(D4.deg()) +
                           prox_slack(D4.forms(), S2);
            CHECK(leq(m, bound));
        }
        ++done;
    }

    // the slack-free bound genuinely requires the archimedean place:
    // P = (1 : 1), D = (-1 : 1), S = {2} gives m = log 2 > 0 = deg h
    Divisor1 Dm(std::vector<ProjPoint>{pt({-1, 1})});
    LogVal m = prox(pt({1, 1}), Dm, PlaceSet{Place::prime(2)});
    CHECK(m == LogVal::log_of(Rat(2)));
    CHECK(global_height(pt({1, 1})).is_zero());
}

TEST_CASE("local height sign invariants") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> c(-40, 40);
    auto draw3 = [&]() {
        std::vector<long> v;
        do {
            v = {c(rng), c(rng), c(rng)};
        } while (v[0] == 0 && v[1] == 0 && v[2] == 0);
        return v;
    };
    int done = 0;
    while (done < 300) {
        ProjPoint P = pt(draw3());
        Form h = lin(draw3()) * lin(draw3());
        if (h.eval(P) == 0) continue;
        // finite places: nonnegative, exactly
        for (long p : {2L, 3L, 5L})
            CHECK(local_height(P, h, Place::prime(Int(p))).sign() >= 0);
        // infinity: >= -log(N * max|c|)
        Int cap = Int(static_cast<unsigned long>(h.num_monomials())) *
                  h.max_abs_coeff();
        LogVal arch = local_height(P, h, Place::infinite());
        CHECK((arch + LogVal::log_of(Rat(cap))).sign() >= 0);
        ++done;
    }
}

TEST_CASE("pair height: pinned values and symmetry") {
    CHECK(pair_height(pt({8, 1}), pt({0, 1}), Place::prime(2)) ==
          LogVal::log_of(Rat(8)));
    CHECK(pair_height(pt({1, 0}), pt({0, 1}), Place::infinite()).is_zero());
    CHECK(pair_height(pt({1, 0}), pt({0, 1}), Place::prime(7)).is_zero());
    CHECK_THROWS_AS(pair_height(pt({2, 1}), pt({2, 1}), Place::infinite()),
                    EqualPoints);
    CHECK_THROWS_AS(pair_height(pt({2, 1}), pt({2, 1, 1}), Place::infinite()),
                    UsageError);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-25, 25);
    auto draw2 = [&]() {
        std::vector<long> v;
        do {
            v = {c(rng), c(rng)};
        } while (v[0] == 0 && v[1] == 0);
        return v;
    };
    int done = 0;
    while (done < 200) {
        ProjPoint P = pt(draw2());
        ProjPoint Q = pt(draw2());
        if (P == Q) continue;
        for (const Place& v :
             {Place::infinite(), Place::prime(2), Place::prime(3)}) {
            CHECK(pair_height(P, Q, v) == pair_height(Q, P, v));
            // relation to the form-based local height: they differ exactly by
            // log max|q| at infinity and agree at finite places
            LogVal lh = local_height(P, Form::vanishing_at(Q), v);
            LogVal ph = pair_height(P, Q, v);
            LogVal shift =
                v.arch ? LogVal::log_of(Rat(Q.max_abs())) : LogVal();
            CHECK(lh == ph - shift);
        }
        ++done;
    }
}

TEST_CASE("concurrent lines: min of local heights tracks the pair height") {
    // three lines through Q = (0 : 0 : 1); the minimum of their local heights
    // equals the pair height to Q up to a bounded defect, uniformly in P
    Form L1 = lin({1, 0, 0});
    Form L2 = lin({0, 1, 0});
    Form L3 = lin({1, 1, 0});
    ProjPoint Q = pt({0, 0, 1});
    std::vector<Place> places{Place::infinite(), Place::prime(2),
                              Place::prime(3), Place::prime(5),
                              Place::prime(7)};

    auto max_defect = [&](long B) {
        LogVal worst;
        for (long a = -B; a <= B; ++a)
            for (long b = -B; b <= B; ++b)
                for (long cc : {1L, 2L, 3L}) {
                    ProjPoint P = pt({a, b, cc});
                    if (L1.eval(P) == 0 || L2.eval(P) == 0 || L3.eval(P) == 0)
                        continue;
                    for (const Place& v : places) {
                        LogVal m = local_height(P, L1, v);
                        for (const Form* f : {&L2, &L3}) {
                            LogVal l = local_height(P, *f, v);
                            if ((l - m).sign() < 0) m = l;
                        }
                        LogVal d = abs_val(m - pair_height(P, Q, v));
                        if ((d - worst).sign() > 0) worst = d;
                    }
                }
        return worst;
    };

    LogVal w1 = max_defect(8);
    LogVal w2 = max_defect(16);
    // bounded: doubling the height range does not grow the worst defect
    CHECK(w2 == w1);
    MESSAGE("max |min local - pair| defect: ", w2.to_double());
    CHECK(leq(w2, LogVal::log_of(Rat(2))));
}
