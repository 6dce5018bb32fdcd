// Acceptance gate: one pass/fail line per criterion, pinned tolerances and
// budgets, exit code = number of failures.
//
// Every tolerance, bound, count and time budget is a named constant below;
// nothing is read from the environment.  Randomized suites use a fixed seed
// and portable modular reduction, so reruns are identical.
//
// Criterion 4 asserts an empty complement for the flagged sets of two scans.
// The scans themselves are exact; the assertion is known to fail because the
// flagged sets genuinely contain points outside the map-pullback exceptional
// set (unit-equation solutions: already at coefficient bound 10 the d = 2
// scan certifies Out-flags such as x^2 - 10x + 1 with m = 4h - (1/2)log 5,
// ratio ~ 3.30 > 16/5, all six pullback values irrational).  The gate runs
// the criterion as written and reports the measured counts rather than
// weakening the assertion; the sub-assertions that do hold (zero Undecided
// at the pinned cap, the runtime budget, the ratio cap of criterion 8) are
// reported alongside.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wirsing/experiments.hpp"
#include "wirsing/factor.hpp"
#include "wirsing/io.hpp"
#include "wirsing/linalg.hpp"

using namespace wirsing;

namespace {

//----------------------------------------------------------- pinned constants

constexpr std::size_t kC1Instances = 10000;   // per identity family
constexpr double kC1Budget = 10.0;            // seconds

constexpr std::size_t kC2Configs = 200;       // random point configurations
constexpr std::size_t kC2Cubics = 500;        // random irreducible cubics
constexpr double kC2Budget = 30.0;

const Int kC3Bound1 = 50;                     // quadratic coefficient bound
const Int kC3Bound2 = 100;                    // doubled bound
constexpr double kC3Eps = 1e-6;               // enclosure width
const double kSlack = 4 * std::log(3.0);      // (1 + deg D) log(d + 1), d = 2
constexpr double kC3Budget = 300.0;

const Int kC4Bound1 = 40;                     // d = 2 scan bound
const Int kC4Bound2 = 8;                      // d = 3 scan bound (same wall
                                              // clock budget as the d = 2 run)
constexpr mpfr_prec_t kC4Cap = 256;
constexpr double kC4Budget = 600.0;           // per scan

constexpr std::size_t kC5Count = 50;          // S-unit pullbacks
constexpr std::size_t kC5Stable = 10;         // running max stable after this
constexpr double kC5Budget = 60.0;

constexpr std::size_t kC6Steps = 60;          // Type II family length
constexpr std::size_t kC6PencilSteps = 12;    // Type I / III family length
constexpr double kC6Margin = 0.15;            // ratio slop below the constant
constexpr unsigned kC6DegBound = 3;           // density-check degree
constexpr std::size_t kC6DensityPts = 15;
constexpr double kC6Budget = 300.0;

constexpr std::size_t kC7Count = 20;          // certified degree-3 points
constexpr double kC7Budget = 600.0;

constexpr double kC8Eps = 0.1;                // ratio cap 2d + eps

//------------------------------------------------------------------- helpers

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct Gate {
    int failures = 0;
    void line(int idx, bool ok, const std::string& what) {
        std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
        if (!ok) ++failures;
    }
};

// deterministic integer in [lo, hi] via portable modular reduction
long rnd(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

ProjPoint pt(long a, long b) { return ProjPoint(std::vector<Int>{Int(a), Int(b)}); }

// random P^1 point, never (0 : 0)
ProjPoint rnd_pt(std::mt19937_64& rng, long lo, long hi, long blo, long bhi) {
    const long a = rnd(rng, lo, hi);
    long b = rnd(rng, blo, bhi);
    if (a == 0 && b == 0) b = 1;
    return pt(a, b);
}

Divisor1 four_points() {
    return Divisor1(std::vector<ProjPoint>{pt(0, 1), pt(1, 1),
                                           ProjPoint::p1_infinity(), pt(2, 1)});
}

Divisor1 six_points() {
    return Divisor1(std::vector<ProjPoint>{pt(0, 1), pt(1, 1), pt(-1, 1), pt(2, 1),
                                           pt(-2, 1), ProjPoint::p1_infinity()});
}

PlaceSet places(std::initializer_list<long> primes) {
    PlaceSet S{Place::infinite()};
    for (long p : primes) S.push_back(Place::prime(Int(p)));
    return normalize_places(S);
}

std::string fmt(double x) { return io::fmt_double(x); }

//=============================================================================
// 1. exact identity suite: product formula and the height-degree identity
//=============================================================================

void criterion1(Gate& gate) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::size_t instances = 0;
    bool all_zero = true;

    // product formula on random nonzero rationals
    for (std::size_t i = 0; i < kC1Instances; ++i) {
        long num = rnd(rng, -1000000, 1000000);
        if (num == 0) num = 7;
        const Rat x(Int(num), Int(rnd(rng, 1, 1000000)));
        if (!product_formula_defect(x).is_zero()) all_zero = false;
        ++instances;
    }

    // sum of all local heights = deg(f) h(P) on random points and forms
    for (std::size_t i = 0; i < kC1Instances / 2; ++i) {
        const ProjPoint P = pt(rnd(rng, -10000, 10000), rnd(rng, 1, 10000));
        std::vector<Int> cs;
        const unsigned deg = static_cast<unsigned>(rnd(rng, 1, 3));
        for (unsigned j = 0; j <= deg; ++j) cs.push_back(Int(rnd(rng, -20, 20)));
        BiForm f(deg, cs);
        if (f.is_zero() || f.eval(P[0], P[1]) == 0) continue;
        if (!height_degree_identity_defect(P, Form::from_biform(f)).is_zero())
            all_zero = false;
        ++instances;
    }

    // h_D(P) = (deg D) h(P): recompute h_D from scratch as the full local sum
    std::size_t hd_checked = 0;
    while (hd_checked < kC1Instances / 2) {
        std::vector<std::pair<ProjPoint, Rat>> terms;
        for (int j = 0, n = static_cast<int>(rnd(rng, 2, 4)); j < n; ++j) {
            const ProjPoint q = rnd_pt(rng, -12, 12, 0, 6);
            bool dup = false;
            for (const auto& [r, w] : terms) dup = dup || r == q;
            if (!dup) terms.push_back({q, Rat(rnd(rng, 1, 3))});
        }
        const Divisor1 D(terms);
        const ProjPoint P = pt(rnd(rng, -5000, 5000), rnd(rng, 1, 5000));
        if (D.contains(P)) continue;
        LogVal hD;
        for (const auto& [f, w] : D.forms()) {
            LogVal local = local_height(P, f, Place::infinite());
            for (const auto& [p, e] : factorize(abs(f.eval(P)))) {
                (void)e;
                local += local_height(P, f, Place::prime(p));
            }
            hD += local.scaled(w);
        }
        if (!(hD == global_height(P).scaled(D.deg()))) all_zero = false;
        ++hd_checked;
        ++instances;
    }

    const double el = seconds_since(t0);
    gate.line(1, all_zero && instances >= 2 * kC1Instances && el < kC1Budget,
              "exact identities: " + std::to_string(instances) +
                  " instances, zero tolerance (" + fmt(el) + " s < " +
                  fmt(kC1Budget) + " s)");
}

//=============================================================================
// 2. structural suite: Vandermonde general position, sigma hyperplanes,
//    psi as the symmetric image of the conjugates
//=============================================================================

void criterion2(Gate& gate) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(202);
    bool ok = true;
    std::size_t ranks = 0, sigma_checks = 0;

    for (std::size_t cfg = 0; cfg < kC2Configs; ++cfg) {
        const unsigned d = 1 + static_cast<unsigned>(cfg % 4);
        // six distinct rational points, infinity included now and then
        std::vector<ProjPoint> pts;
        while (pts.size() < 6) {
            const ProjPoint q = (pts.empty() && cfg % 5 == 0)
                                    ? ProjPoint::p1_infinity()
                                    : rnd_pt(rng, -30, 30, 0, 30);
            bool dup = false;
            for (const ProjPoint& r : pts) dup = dup || r == q;
            if (!dup) pts.push_back(q);
        }

        // general position: every subset of size <= d + 1 of the degree-d
        // rational normal curve images has full rank (Vandermonde)
        for (unsigned mask = 1; mask < (1u << 6); ++mask) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) > d + 1) continue;
            Mat m;
            for (unsigned i = 0; i < 6; ++i) {
                if (!(mask & (1u << i))) continue;
                Vec row;
                for (unsigned j = 0; j <= d; ++j) {
                    Int v(1);
                    for (unsigned k = 0; k < j; ++k) v *= pts[i][0];
                    for (unsigned k = j; k < d; ++k) v *= pts[i][1];
                    row.push_back(v);
                }
                m.push_back(row);
            }
            ++ranks;
            if (bareiss_rank(m) != static_cast<int>(m.size())) ok = false;
        }

        // H_P(sigma(tuple)) = 0 exactly when P occurs in the tuple
        std::vector<ProjPoint> tuple(pts.begin(), pts.begin() + d);
        const ProjPoint sig = sigma_point(tuple);
        if (hyperplane_form(tuple[0], d).eval(sig) != 0) ok = false;
        if (hyperplane_form(pts[d], d).eval(sig) == 0) ok = false;
        sigma_checks += 2;
    }

    // psi equals the symmetric image of the full conjugate tuple, up to
    // scaling: H_P(psi Q) is proportional to the minimal form at P across
    // d + 1 rational probes (all values nonzero since the cubic has no
    // rational root), exact integer cross-products only
    std::size_t cubics = 0;
    while (cubics < kC2Cubics) {
        const IntPoly f(std::vector<Int>{Int(rnd(rng, -30, 30)), Int(rnd(rng, -30, 30)),
                                         Int(rnd(rng, -30, 30)), Int(rnd(rng, 1, 30))});
        if (f.degree() != 3 || !is_irreducible(f)) continue;
        ++cubics;
        const AlgPoint Q(f, 0);
        const ProjPoint psi = psi_point(Q);
        const BiForm F = Q.min_form();
        const ProjPoint probes[4] = {pt(0, 1), pt(1, 1), pt(-1, 1), pt(2, 1)};
        Int r0, s0;
        for (int j = 0; j < 4; ++j) {
            const Int r = hyperplane_form(probes[j], 3).eval(psi);
            const Int s = F.eval(probes[j][0], probes[j][1]);
            if (r == 0 || s == 0) ok = false;
            if (j == 0) {
                r0 = r;
                s0 = s;
            } else if (r0 * s != s0 * r) {
                ok = false;
            }
        }
    }

    const double el = seconds_since(t0);
    gate.line(2, ok && el < kC2Budget,
              "structural suite: " + std::to_string(ranks) + " exact ranks, " +
                  std::to_string(sigma_checks) + " sigma hyperplane checks, " +
                  std::to_string(cubics) + " cubic psi identities (" + fmt(el) +
                  " s < " + fmt(kC2Budget) + " s)");
}

//=============================================================================
// 3. transport suite: symmetric-square defects over all quadratic points
//=============================================================================

void criterion3(Gate& gate) {
    const auto t0 = std::chrono::steady_clock::now();
    const Divisor1 D(std::vector<ProjPoint>{pt(0, 1), pt(1, 1),
                                            ProjPoint::p1_infinity()});
    const PlaceSet S = places({2});

    bool widths_ok = true;
    auto run = [&](const Int& B, double& max_m, double& max_h, std::size_t& n) {
        max_m = 0;
        max_h = 0;
        n = 0;
        enumerate_points(2, B, [&](const AlgPoint& Q) {
            if (Q.degree() != 2) return;
            const TransportDefect td = transport_defect(Q, D, S, kC3Eps, 1024);
            if (td.m_defect.hi() - td.m_defect.lo() > kC3Eps) widths_ok = false;
            if (td.h_defect.hi() - td.h_defect.lo() > kC3Eps) widths_ok = false;
            max_m = std::max({max_m, std::abs(td.m_defect.lo()),
                              std::abs(td.m_defect.hi())});
            max_h = std::max({max_h, std::abs(td.h_defect.lo()),
                              std::abs(td.h_defect.hi())});
            ++n;
        });
    };

    double m50, h50, m100, h100;
    std::size_t n50, n100;
    run(kC3Bound1, m50, h50, n50);
    run(kC3Bound2, m100, h100, n100);

    const bool bounded = m50 <= kSlack && h50 <= kSlack;
    const bool growth_ok = m100 <= m50 + kSlack && h100 <= h50 + kSlack;
    const double el = seconds_since(t0);
    gate.line(3, bounded && growth_ok && widths_ok && el < kC3Budget,
              "transport defects: " + std::to_string(n50) + " -> " +
                  std::to_string(n100) + " quadratics, max |m-defect| " + fmt(m50) +
                  " -> " + fmt(m100) + ", max |h-defect| " + fmt(h50) + " -> " +
                  fmt(h100) + ", slack " + fmt(kSlack) + ", widths <= " +
                  fmt(kC3Eps) + " (" + fmt(el) + " s < " + fmt(kC3Budget) + " s)");
}

//=============================================================================
// 4. the two desk scans; their flag data is shared with criterion 8
//=============================================================================

struct ScanOutcome {
    std::size_t flagged = 0, in = 0, out = 0, undecided_flags = 0;
    double max_ratio_lo = 0;
    std::string example_out;
    std::size_t summary_undecided = 0;
    double elapsed = 0;
};

ScanOutcome run_scan(const Divisor1& D, const PlaceSet& S, unsigned d, const Int& B,
                     const Rat& t) {
    const auto t0 = std::chrono::steady_clock::now();
    ScanOptions opt;
    opt.precision_cap = kC4Cap;
    ScanOutcome oc;
    const ScanSummary sum = ratio_scan(D, S, d, B, t, opt, [&](const ScanRecord& r) {
        if (!r.flagged) return;
        ++oc.flagged;
        if (r.z == ZStatus::In) ++oc.in;
        if (r.z == ZStatus::Out) {
            ++oc.out;
            if (oc.example_out.empty()) oc.example_out = io::minpoly_str(r.point);
        }
        if (r.z == ZStatus::Undecided) ++oc.undecided_flags;
        oc.max_ratio_lo = std::max(oc.max_ratio_lo, r.ratio_lo());
    });
    oc.summary_undecided = sum.undecided;
    oc.elapsed = seconds_since(t0);
    return oc;
}

void criterion4(Gate& gate, ScanOutcome& oc2, ScanOutcome& oc3) {
    oc2 = run_scan(four_points(), places({2, 3}), 2, kC4Bound1, Rat(16, 5));
    oc3 = run_scan(six_points(), places({2, 3}), 3, kC4Bound2, Rat(21, 4));

    auto part = [](const std::string& label, const ScanOutcome& oc, double budget) {
        std::string s = label + ": " + std::to_string(oc.flagged) +
                        " flags, In " + std::to_string(oc.in) + ", Out " +
                        std::to_string(oc.out) + ", Undecided " +
                        std::to_string(oc.undecided_flags) + " (" + fmt(oc.elapsed) +
                        " s < " + fmt(budget) + " s)";
        if (!oc.example_out.empty()) s += ", e.g. Out: " + oc.example_out;
        return s;
    };
    const bool ok2 = oc2.out == 0 && oc2.undecided_flags == 0 &&
                     oc2.summary_undecided == 0 && oc2.elapsed < kC4Budget;
    const bool ok3 = oc3.out == 0 && oc3.undecided_flags == 0 &&
                     oc3.summary_undecided == 0 && oc3.elapsed < kC4Budget;
    gate.line(4, ok2 && ok3,
              "empty flag complement: " +
                  part("d=2 B=" + std::string(kC4Bound1.get_str()), oc2, kC4Budget) +
                  "; " +
                  part("d=3 B=" + std::string(kC4Bound2.get_str()), oc3, kC4Budget));
}

//=============================================================================
// 5. S-unit pullback family of the squaring map
//=============================================================================

void criterion5(Gate& gate) {
    const auto t0 = std::chrono::steady_clock::now();
    const Divisor1 D(std::vector<ProjPoint>{pt(0, 1), ProjPoint::p1_infinity(),
                                            pt(1, 1), pt(-1, 1)});
    const FamilySummary fam =
        tbor_family(io::parse_map("x^2"), D, places({2}), kC5Count);

    bool ok = fam.records.size() == kC5Count;
    double max_defect = 0;
    std::size_t last_raise = 0;
    for (std::size_t i = 0; i < fam.records.size(); ++i) {
        if (!fam.records[i].defect) {
            ok = false;
            continue;
        }
        const double d = std::max(std::abs(fam.records[i].defect->lo()),
                                  std::abs(fam.records[i].defect->hi()));
        if (d > max_defect) {
            max_defect = d;
            last_raise = i;
        }
    }
    if (max_defect > kSlack) ok = false;
    if (last_raise >= kC5Stable) ok = false;

    const double el = seconds_since(t0);
    gate.line(5, ok && el < kC5Budget,
              "unit pullbacks: " + std::to_string(fam.records.size()) + "/" +
                  std::to_string(kC5Count) + " records, max |(n1+n2)h - m| " +
                  fmt(max_defect) + " <= " + fmt(kSlack) +
                  ", running max last raised at record " +
                  std::to_string(last_raise) + " < " + std::to_string(kC5Stable) +
                  " (" + fmt(el) + " s < " + fmt(kC5Budget) + " s)");
}

//=============================================================================
// 6. sharpness families and the density check
//=============================================================================

void criterion6(Gate& gate) {
    const auto t0 = std::chrono::steady_clock::now();

    const LineConfig quadrilateral(std::vector<Vec>{
        {Int(0), Int(0), Int(1)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(0), Int(0)},
        {Int(0), Int(1), Int(-1)}, {Int(1), Int(0), Int(-1)},
        {Int(1), Int(-1), Int(0)}});
    const LineConfig pencil5(std::vector<Vec>{{Int(1), Int(0), Int(0)},
                                              {Int(0), Int(1), Int(0)},
                                              {Int(1), Int(1), Int(0)},
                                              {Int(0), Int(0), Int(1)},
                                              {Int(0), Int(0), Int(1)}});
    const LineConfig pencil4(std::vector<Vec>{{Int(1), Int(0), Int(0)},
                                              {Int(0), Int(1), Int(0)},
                                              {Int(1), Int(1), Int(0)},
                                              {Int(0), Int(0), Int(1)}});

    const SharpSummary s2 =
        sharp_family(ConfigTag::II, quadrilateral, places({2, 3}), kC6Steps);
    const SharpSummary s1 =
        sharp_family(ConfigTag::I, pencil5, places({2}), kC6PencilSteps);
    const SharpSummary s3 =
        sharp_family(ConfigTag::III, pencil4, places({2}), kC6PencilSteps);

    bool ok = s2.records.size() == kC6Steps && s1.records.size() == kC6PencilSteps &&
              s3.records.size() == kC6PencilSteps;
    const double r2 = ok ? s2.records.back().ratio_lo() : 0;
    const double r1 = ok ? s1.records.back().ratio_lo() : 0;
    const double r3 = ok ? s3.records.back().ratio_lo() : 0;
    if (!(r2 > 4.5 - kC6Margin && r1 > 5.0 - kC6Margin && r3 > 4.0 - kC6Margin))
        ok = false;

    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < std::min(kC6DensityPts, s2.records.size()); ++i)
        pts.push_back(s2.records[i].point);
    const bool dense = zariski_density_check(pts, kC6DegBound);
    if (!dense) ok = false;

    const double el = seconds_since(t0);
    gate.line(6, ok && el < kC6Budget,
              "sharpness: certified ratios II " + fmt(r2) + " > " +
                  fmt(4.5 - kC6Margin) + ", I " + fmt(r1) + " > " +
                  fmt(5.0 - kC6Margin) + ", III " + fmt(r3) + " > " +
                  fmt(4.0 - kC6Margin) + ", density at degree " +
                  std::to_string(kC6DegBound) + " " + (dense ? "holds" : "FAILS") +
                  " (" + fmt(el) + " s < " + fmt(kC6Budget) + " s)");
}

//=============================================================================
// 7. certified degree-3 points beyond t h outside the whole map family
//=============================================================================

void criterion7(Gate& gate) {
    const auto t0 = std::chrono::steady_clock::now();
    const Divisor1 D = six_points();
    const FamilySummary fam = td3b_family(D, places({2, 3}), Rat(17, 4), kC7Count);

    bool ok = fam.records.size() >= kC7Count;
    for (const ScanRecord& r : fam.records)
        if (r.point.degree() != 3 || !r.flagged || r.z != ZStatus::Out) ok = false;
    const std::size_t family_size = enumerate_phi(D, 3).size();
    if (family_size != 20) ok = false;

    const double el = seconds_since(t0);
    gate.line(7, ok && el < kC7Budget,
              "degree-3 exceedance: " + std::to_string(fam.records.size()) +
                  " points certified m > (17/4) h and Out against all " +
                  std::to_string(family_size) + " maps (" + fmt(el) + " s < " +
                  fmt(kC7Budget) + " s)");
}

//=============================================================================
// 8. ratio cap over every flag of the criterion-4 scans
//=============================================================================

void criterion8(Gate& gate, const ScanOutcome& oc2, const ScanOutcome& oc3) {
    const double cap2 = 2 * 2 + kC8Eps, cap3 = 2 * 3 + kC8Eps;
    const bool ok = oc2.max_ratio_lo <= cap2 && oc3.max_ratio_lo <= cap3;
    gate.line(8, ok,
              "finiteness cap (property form): max certified flag ratio " +
                  fmt(oc2.max_ratio_lo) + " <= " + fmt(cap2) + " at d=2, " +
                  fmt(oc3.max_ratio_lo) + " <= " + fmt(cap3) + " at d=3");
}

}  // namespace

int main() {
    Gate gate;
    criterion1(gate);
    criterion2(gate);
    criterion3(gate);
    ScanOutcome oc2, oc3;
    criterion4(gate, oc2, oc3);
    criterion5(gate);
    criterion6(gate);
    criterion7(gate);
    criterion8(gate, oc2, oc3);
    std::printf("%d of 8 criteria failed\n", gate.failures);
    return gate.failures;
}
