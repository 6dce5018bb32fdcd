#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wirsing/logval.hpp"

using namespace wirsing;

//=============================================================================
// Exact core: rationals, places, LogVal.
//
// Expected values below are frozen independently (hand computation /
// elementary identities), then asserted exactly — no tolerances anywhere in
// this file.
//=============================================================================

TEST_CASE("rational helpers") {
    CHECK(make_rat(4, 6) == Rat(2, 3));
    CHECK_THROWS_AS(make_rat(1, 0), ZeroInput);
    CHECK(parse_rat("-3/9") == Rat(-1, 3));
    CHECK(parse_rat("17") == Rat(17));
    CHECK_THROWS_AS(parse_rat("x"), UsageError);

    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(valuation(Rat(3, 8), Int(2)) == -3);
    CHECK_THROWS_AS(valuation(Int(0), Int(2)), ZeroInput);
    CHECK_THROWS_AS(valuation(Int(12), Int(4)), NotPrime);

    CHECK(pow_int(Int(3), 4) == 81);
    CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
    CHECK_THROWS_AS(pow_rat(Rat(0), -1), ZeroInput);

    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(1000003)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(1000001)));  // 101 * 9901

    auto f = factorize(Int(-360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, unsigned>{2, 3});
    CHECK(f[1] == std::pair<Int, unsigned>{3, 2});
    CHECK(f[2] == std::pair<Int, unsigned>{5, 1});

    // semiprime beyond the trial-division bound exercises the rho splitter
    Int big = Int(1000003) * Int(1000033);
    auto g = factorize(big);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(g[1].first == 1000033);

    auto s = support(Rat(60, 7));
    REQUIRE(s.size() == 4);
    CHECK(s[0] == 2);
    CHECK(s[1] == 3);
    CHECK(s[2] == 5);
    CHECK(s[3] == 7);

    CHECK(binomial(6, 3) == 20);
    CHECK(vector_gcd({Int(12), Int(-18), Int(30)}) == 6);
}

TEST_CASE("places") {
    Place v2 = Place::prime(2);
    Place vinf = Place::infinite();
    CHECK(vinf < v2);
    CHECK(Place::prime(2) < Place::prime(3));
    CHECK_THROWS_AS(Place::prime(6), NotPrime);
    CHECK(v2.str() == "2");
    CHECK(vinf.str() == "inf");
}

TEST_CASE("norm_at frozen values") {
    // ||8||_2 = 1/8: log norm = log(1/8)
    CHECK(norm_at(Rat(8), Place::prime(2)) == LogVal::log_of(Rat(1, 8)));
    // a unit at every finite place, modulus 1 at infinity
    CHECK(norm_at(Rat(1), Place::prime(5)).is_zero());
    CHECK(norm_at(Rat(1), Place::infinite()).is_zero());
    CHECK(norm_at(Rat(-1), Place::infinite()).is_zero());
    // |-3/4| = 3/4 at infinity
    CHECK(norm_at(Rat(-3, 4), Place::infinite()) == LogVal::log_of(Rat(3, 4)));
    // ||-3/4||_2 = 4
    CHECK(norm_at(Rat(-3, 4), Place::prime(2)) == LogVal::log_of(Rat(4)));
    CHECK_THROWS_AS(norm_at(Rat(0), Place::infinite()), ZeroInput);
}

TEST_CASE("product formula") {
    CHECK(product_formula_defect(Rat(60, 7)).is_zero());
    CHECK(product_formula_defect(Rat(-1)).is_zero());
    CHECK(product_formula_defect(Rat(1024)).is_zero());  // p^k
    CHECK(product_formula_defect(Rat(-85, 39)).is_zero());

    // randomized: defect identically zero, exact
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> d(-5000, 5000);
    for (int i = 0; i < 500; ++i) {
        long a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        CHECK(product_formula_defect(make_rat(Int(a), Int(b))).is_zero());
    }
}

TEST_CASE("LogVal arithmetic") {
    LogVal l2 = LogVal::log_of(Rat(2));
    LogVal l8 = LogVal::log_of(Rat(8));
    LogVal l9 = LogVal::log_of(Rat(9));

    CHECK((l2 + l2 + l2) == l8);
    CHECK((l8 - l2 - l2 - l2).is_zero());
    CHECK(l8.scaled(Rat(1, 3)) == l2);
    CHECK(l2.scaled(Rat(-2)) == LogVal::log_of(Rat(1, 4)));
    CHECK(LogVal::root_log(Rat(4), 2) == l2);  // (1/2) log 4 = log 2
    CHECK(l2.sign() == 1);
    CHECK(LogVal::log_of(Rat(1, 3)).sign() == -1);
    CHECK(LogVal().sign() == 0);

    // root-index lcm addition: (1/2)log 2 + (1/3)log 2 = (5/6)log 2
    LogVal mixed = LogVal::root_log(Rat(2), 2) + LogVal::root_log(Rat(2), 3);
    CHECK(mixed == l2.scaled(Rat(5, 6)));
}

TEST_CASE("compare_scaled frozen values") {
    LogVal l2 = LogVal::log_of(Rat(2));
    LogVal l8 = LogVal::log_of(Rat(8));
    LogVal l9 = LogVal::log_of(Rat(9));

    // log 8 = 3 log 2
    CHECK(l8.compare_scaled(Rat(3), l2) == Cmp::Equal);
    // log 9 < (9/2) log 2  <=>  9^2 < 2^9
    CHECK(l9.compare_scaled(Rat(9, 2), l2) == Cmp::Less);
    // any positive value beats threshold 0
    CHECK(l9.compare_scaled(Rat(0), l2) == Cmp::Greater);
    // negative thresholds flip through reciprocals exactly
    CHECK(LogVal::log_of(Rat(1, 8)).compare_scaled(Rat(-3), l2) == Cmp::Equal);
    // root indices: (1/2)log 2 vs (1/3) log 2
    CHECK(LogVal::root_log(Rat(2), 2).compare_scaled(Rat(1), LogVal::root_log(Rat(2), 3)) ==
          Cmp::Greater);
}

TEST_CASE("LogVal enclosures") {
    LogVal l8 = LogVal::log_of(Rat(8));
    Interval e = l8.enclosure(128);
    CHECK(e.lo() <= 2.0794415416798357);
    CHECK(e.hi() >= 2.0794415416798357);
    CHECK(e.width() < 1e-30);

    // negative values enclose correctly too
    Interval n = LogVal::log_of(Rat(1, 8)).enclosure(128);
    CHECK(n.hi() < 0);
    CHECK(n.lo() > -2.08);

    // zero encloses zero with zero width
    Interval z = LogVal().enclosure(64);
    CHECK(z.lo() == 0.0);
    CHECK(z.hi() == 0.0);
}

TEST_CASE("interval arithmetic basics") {
    Interval a = Interval::from_rat(Rat(1, 3), 64);
    CHECK(a.lo() <= 1.0 / 3.0);
    CHECK(a.hi() >= 1.0 / 3.0);
    CHECK(a.width() > 0);  // 1/3 is not dyadic
    CHECK(a.width() < 1e-18);

    Interval b = a - a;
    CHECK(b.contains_zero());
    CHECK((a * a).is_positive());
    CHECK((-a).is_negative());
    CHECK_THROWS_AS(b.log(), ZeroInput);

    Interval lg = Interval::log_rat(Rat(3, 2), 128);
    CHECK(lg.lo() <= 0.4054651081081644);
    CHECK(lg.hi() >= 0.4054651081081644);

    // log_plus clamps below 1
    Interval half = Interval::from_rat(Rat(1, 2), 64);
    Interval lp = half.log_plus();
    CHECK(lp.lo() == 0.0);
    CHECK(lp.hi() == 0.0);

    CInterval z(Interval::from_rat(Rat(3), 64), Interval::from_rat(Rat(4), 64));
    Interval la = z.log_abs();  // log 5
    CHECK(la.lo() <= 1.6094379124341003);
    CHECK(la.hi() >= 1.6094379124341003);
    CHECK(z.log_plus_abs().lo() > 1.6);

    CInterval w(Interval::from_rat(Rat(1, 9), 64), Interval::from_rat(Rat(0), 64));
    CHECK(w.log_plus_abs().hi() == 0.0);
    CHECK(z.disjoint(w));
}
