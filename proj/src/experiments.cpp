#include "wirsing/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "wirsing/errors.hpp"
#include "wirsing/factor.hpp"
#include "wirsing/linalg.hpp"
#include "wirsing/roots.hpp"

namespace wirsing {

namespace {

constexpr mpfr_prec_t kReportPrec = 96;

// minimal polynomials of the height-zero points of degree 2..4 (cyclotomic,
// by Kronecker's theorem); degree 3 has none
const std::vector<IntPoly>& height_zero_minpolys() {
    static const std::vector<IntPoly> polys = {
        IntPoly({Int(1), Int(1), Int(1)}),
        IntPoly({Int(1), Int(0), Int(1)}),
        IntPoly({Int(1), Int(-1), Int(1)}),
        IntPoly({Int(1), Int(1), Int(1), Int(1), Int(1)}),
        IntPoly({Int(1), Int(0), Int(0), Int(0), Int(1)}),
        IntPoly({Int(1), Int(-1), Int(1), Int(-1), Int(1)}),
        IntPoly({Int(1), Int(0), Int(-1), Int(0), Int(1)}),
    };
    return polys;
}

bool height_is_zero(const AlgPoint& P) {
    if (P.is_rational()) return global_height(P.rational_point()).is_zero();
    const IntPoly& f = P.minpoly();
    for (const auto& g : height_zero_minpolys())
        if (f == g) return true;
    return false;
}

Interval report_enclosure(const AlgReal& x, mpfr_prec_t cap) {
    try {
        return x.enclosure_within(1e-9, cap);
    } catch (const PrecisionExhausted&) {
        return x.enclosure(cap);
    }
}

ScanRecord make_record(const AlgPoint& P, Interval m, Interval h) {
    return ScanRecord{P,       std::move(m),  std::move(h), false,
                      ZStatus::None, std::nullopt, std::nullopt};
}

void attach_z_status(ScanRecord& rec, const Divisor1& D, unsigned d, const Rat& t) {
    try {
        ZResult zr = z_member(rec.point, D, d, t);
        rec.z = zr.status == Membership::In ? ZStatus::In : ZStatus::Out;
        if (zr.status == Membership::In) rec.witness = zr.witness;
    } catch (const UnsupportedRegime&) {
        rec.z = ZStatus::Unsupported;
    }
}

enum class SkipKind { None, Support, HeightZero };

struct ChunkItem {
    SkipKind skip;
    std::optional<ScanRecord> rec;
};

ChunkItem scan_one(const AlgPoint& P, const Divisor1& D, const PlaceSet& S,
                   unsigned d, const Rat& t, mpfr_prec_t cap) {
    if (P.is_rational()) {
        const ProjPoint& rp = P.rational_point();
        if (D.contains(rp)) return {SkipKind::Support, std::nullopt};
        LogVal h = global_height(rp);
        if (h.is_zero()) return {SkipKind::HeightZero, std::nullopt};
        LogVal m = prox(rp, D, S);
        ScanRecord rec = make_record(P, m.enclosure(kReportPrec), h.enclosure(kReportPrec));
        rec.flagged = m.compare_scaled(t, h) != Cmp::Less;
        if (rec.flagged) attach_z_status(rec, D, d, t);
        return {SkipKind::None, std::move(rec)};
    }
    if (height_is_zero(P)) return {SkipKind::HeightZero, std::nullopt};
    AlgReal m = prox_alg(P, D, S);
    AlgReal h = alg_height(P);
    ScanRecord rec = make_record(P, report_enclosure(m, cap), report_enclosure(h, cap));
    switch (m.sign_vs(t, h, cap)) {
        case Sign4::Negative:
            break;
        case Sign4::Undecided:
            rec.flagged = true;
            rec.z = ZStatus::Undecided;
            break;
        default:
            rec.flagged = true;
            attach_z_status(rec, D, d, t);
            break;
    }
    return {SkipKind::None, std::move(rec)};
}

Int dot(const Vec& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool on_some_line(const LineConfig& cfg, const ProjPoint& P) {
    for (const auto& l : cfg.lines())
        if (dot(l, P.coords()) == 0) return true;
    return false;
}

// the two smallest finite primes of S, which must also contain infinity
std::pair<Int, Int> two_finite_primes(const PlaceSet& S) {
    std::vector<Int> ps;
    for (const auto& v : S)
        if (!v.arch) ps.push_back(v.p);
    if (!contains_arch(S) || ps.size() < 2)
        throw BadHypothesis("place set needs infinity and two finite primes");
    std::sort(ps.begin(), ps.end());
    return {ps[0], ps[1]};
}

UnitProfile unit_profile(const Rat& u, const PlaceSet& S,
                         const std::vector<double>& target) {
    UnitProfile pr{u, S, target, {}};
    pr.realized.reserve(S.size());
    for (const auto& v : S) pr.realized.push_back(norm_at(u, v).enclosure(kReportPrec));
    return pr;
}

} // namespace

std::string zstatus_str(ZStatus z) {
    switch (z) {
        case ZStatus::In: return "In";
        case ZStatus::Out: return "Out";
        case ZStatus::Unsupported: return "Unsupported";
        case ZStatus::Undecided: return "Undecided";
        default: return "None";
    }
}

double ScanRecord::ratio_lo() const {
    if (h.lo() <= 0) throw UsageError("ratio bracket needs h > 0");
    return m.lo() / h.hi();
}

double ScanRecord::ratio_hi() const {
    if (h.lo() <= 0) throw UsageError("ratio bracket needs h > 0");
    return m.hi() / h.lo();
}

double PlaneRecord::ratio_lo() const {
    if (h.lo() <= 0) throw UsageError("ratio bracket needs h > 0");
    return m.lo() / h.hi();
}

double PlaneRecord::ratio_hi() const {
    if (h.lo() <= 0) throw UsageError("ratio bracket needs h > 0");
    return m.hi() / h.lo();
}

//--------------------------------------------------------------- enumeration

void enumerate_points(unsigned d, const Int& B,
                      const std::function<void(const AlgPoint&)>& sink) {
    if (d < 1 || d > 4)
        throw UnsupportedRegime("enumerate_points: degree must be between 1 and 4");
    if (B < 1) throw UsageError("enumerate_points: coefficient bound must be >= 1");

    // degree 1: infinity and all fractions with numerator and denominator
    // bounded by B, in canonical projective order
    std::set<ProjPoint> rats;
    rats.insert(ProjPoint::p1_infinity());
    for (Int b = 1; b <= B; ++b)
        for (Int a = -B; a <= B; ++a) {
            if (gcd(a, b) != 1) continue;
            rats.insert(ProjPoint(std::vector<Int>{a, b}));
        }
    for (const auto& P : rats) sink(AlgPoint(P));

    // degrees 2..d: primitive irreducible polynomials with positive leading
    // coefficient, coefficients in lexicographic order, one point per orbit
    for (unsigned e = 2; e <= d; ++e) {
        std::vector<Int> c(e + 1);
        for (Int lead = 1; lead <= B; ++lead) {
            c[e] = lead;
            // odometer over c[e-1], ..., c[0], each in [-B, B]
            for (std::size_t i = 0; i < e; ++i) c[i] = -B;
            for (;;) {
                IntPoly f(std::vector<Int>(c.begin(), c.end()));
                if (f.content() == 1 && is_irreducible(f)) sink(AlgPoint(f, 0));
                std::size_t j = 0;
                while (j < e && c[j] == B) ++j;
                if (j == e) break;
                ++c[j];
                for (std::size_t i = 0; i < j; ++i) c[i] = -B;
            }
        }
    }
}

std::vector<AlgPoint> enumerate_points(unsigned d, const Int& B) {
    std::vector<AlgPoint> out;
    enumerate_points(d, B, [&](const AlgPoint& P) { out.push_back(P); });
    return out;
}

//----------------------------------------------------------------- the scan

ScanSummary ratio_scan(const Divisor1& D, const PlaceSet& S0, unsigned d,
                       const Int& B, const Rat& t, const ScanOptions& opt,
                       const std::function<void(const ScanRecord&)>& sink) {
    if (d < 1 || d > 3)
        throw UnsupportedRegime("ratio_scan: degrees above 3 are not scanned");
    if (t <= 0) throw UsageError("ratio_scan: threshold must be positive");
    PlaceSet S = normalize_places(S0);

    std::vector<AlgPoint> pts = enumerate_points(d, B);
    ScanSummary sum;

    const std::size_t chunk = 512;
    const unsigned jobs = std::max(1u, opt.jobs);
    std::size_t pos = 0;
    while (pos < pts.size()) {
        std::vector<std::pair<std::size_t, std::size_t>> ranges;
        while (ranges.size() < jobs && pos < pts.size()) {
            std::size_t end = std::min(pos + chunk, pts.size());
            ranges.emplace_back(pos, end);
            pos = end;
        }
        std::vector<std::vector<ChunkItem>> results(ranges.size());
        auto work = [&](std::size_t r) {
            results[r].reserve(ranges[r].second - ranges[r].first);
            for (std::size_t i = ranges[r].first; i < ranges[r].second; ++i)
                results[r].push_back(
                    scan_one(pts[i], D, S, d, t, opt.precision_cap));
        };
        if (ranges.size() == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(ranges.size());
            for (std::size_t r = 0; r < ranges.size(); ++r)
                threads.emplace_back(work, r);
            for (auto& th : threads) th.join();
        }
        for (auto& block : results)
            for (auto& item : block) {
                if (item.skip == SkipKind::Support) {
                    ++sum.skipped_support;
                    continue;
                }
                if (item.skip == SkipKind::HeightZero) {
                    ++sum.skipped_height_zero;
                    continue;
                }
                ++sum.scanned;
                const ScanRecord& rec = *item.rec;
                if (rec.flagged) {
                    if (rec.z == ZStatus::Undecided) ++sum.undecided;
                    sum.flagged.push_back(rec);
                }
                if (sink) sink(rec);
            }
        clear_root_cache();  // keep the isolation cache from growing unboundedly
    }
    return sum;
}

//-------------------------------------------------------------- tbor family

FamilySummary tbor_family(const Rat1Map& phi, const Divisor1& D, const PlaceSet& S0,
                          std::size_t count, const ScanOptions& opt) {
    PlaceSet S = normalize_places(S0);
    if (!contains_arch(S) || S.size() < 2)
        throw BadHypothesis("tbor_family: S must contain infinity and a finite prime");
    if (phi.degree() > 4)
        throw UnsupportedRegime("tbor_family: map degree above 4");
    {
        // the map must be a morphism: no common projective root
        IntPoly rn = phi.num().dehomogenize(), rd = phi.den().dehomogenize();
        bool common_inf = phi.num().infinity_multiplicity() > 0 &&
                          phi.den().infinity_multiplicity() > 0;
        bool common_affine = rn.degree() >= 1 && rd.degree() >= 1 &&
                             resultant(rn, rd) == 0;
        if (common_inf || common_affine || rn.degree() < 0 || rd.degree() < 0)
            throw UsageError("tbor_family: numerator and denominator share a root");
    }
    Int r = S[1].p;  // canonical order puts infinity first, then primes

    auto profile = pullback_profile(phi, D);
    if (profile.size() < 2)
        throw BadHypothesis("tbor_family: need two distinct divisor images");
    const unsigned n1 = profile[0].second, n2 = profile[1].second;
    const ProjPoint &Q1 = profile[0].first, &Q2 = profile[1].first;

    // normalize: send the most-covered image to 0 and the runner-up to infinity
    Rat1Map A(BiForm::from_point(Q1[0], Q1[1]), BiForm::from_point(Q2[0], Q2[1]));
    Rat1Map psi = A.substitute(phi);

    std::set<ProjPoint> degenerate;
    for (std::size_t i = 0; i < D.terms().size(); ++i)
        degenerate.insert(psi.eval(D.point(i)));

    FamilySummary sum;
    const std::size_t attempt_cap = count * 4 + 64;
    for (std::size_t k = 1; k <= attempt_cap && sum.records.size() < count; ++k) {
        Int uk = pow_int(r, static_cast<unsigned long>(k));
        ProjPoint up(std::vector<Int>{uk, Int(1)});
        if (degenerate.count(up)) {
            ++sum.degenerate_skipped;
            continue;
        }
        // preimages: roots of num - u den as a binary form
        BiForm G = psi.num() + psi.den() * (-uk);
        std::vector<AlgPoint> pre;
        if (G.infinity_multiplicity() > 0) pre.push_back(AlgPoint(ProjPoint::p1_infinity()));
        IntPoly g = G.dehomogenize();
        if (g.degree() >= 1)
            for (const auto& [f, mult] : factor_poly(g)) {
                (void)mult;
                if (f.degree() == 1)
                    pre.push_back(AlgPoint(ProjPoint(std::vector<Int>{-f[0], f[1]})));
                else
                    pre.push_back(AlgPoint(f, 0));
            }
        double mt = static_cast<double>(k) * std::log(r.get_d());
        std::vector<double> target;
        for (const auto& v : S)
            target.push_back(v.arch ? mt : (v.p == r ? -mt : 0.0));
        sum.profiles.push_back(unit_profile(Rat(uk), S, target));
        for (const auto& P : pre) {
            if (P.is_rational() && D.contains(P.rational_point())) {
                ++sum.on_divisor_skipped;
                continue;
            }
            if (height_is_zero(P)) {
                ++sum.height_zero_skipped;
                continue;
            }
            AlgReal m = prox_alg(P, D, S);
            AlgReal h = alg_height(P);
            AlgReal defect = h.scaled(Rat(n1 + n2)) - m;
            ScanRecord rec =
                make_record(P, report_enclosure(m, opt.precision_cap),
                            report_enclosure(h, opt.precision_cap));
            rec.defect = report_enclosure(defect, opt.precision_cap);
            sum.records.push_back(std::move(rec));
            if (sum.records.size() >= count) break;
        }
    }
    return sum;
}

//------------------------------------------------------------- sharp family

std::vector<std::pair<Int, Int>> log_ratio_pairs(const Int& p, const Int& q,
                                                 const Int& den_cap,
                                                 std::size_t steps,
                                                 mpfr_prec_t cap) {
    if (p < 2 || q < 2 || p == q)
        throw UsageError("log_ratio_pairs: need two distinct bases >= 2");
    if (den_cap < 1 || steps < 1) throw UsageError("log_ratio_pairs: empty request");

    for (mpfr_prec_t prec = 128; prec <= std::max<mpfr_prec_t>(cap, 128); prec *= 2) {
        // continued fraction of log q / log p with certified partial quotients
        std::vector<std::pair<Int, Int>> conv;  // (a, b): a/b ~ log q / log p
        Int pa = 1, pb = 0;                     // previous convergent
        Int ca, cb;                             // current convergent
        bool first = true, failed = false;
        Interval x = Interval::log_rat(Rat(q), prec) / Interval::log_rat(Rat(p), prec);
        while (true) {
            double flo = std::floor(x.lo()), fhi = std::floor(x.hi());
            if (flo != fhi || !std::isfinite(flo)) {
                failed = conv.empty();
                break;  // quotient no longer certified; stop with what we have
            }
            Int a0(static_cast<long>(flo));
            if (first) {
                ca = a0;
                cb = 1;
                first = false;
            } else {
                Int na = a0 * ca + pa, nb = a0 * cb + pb;
                pa = ca;
                pb = cb;
                ca = na;
                cb = nb;
            }
            if (cb > den_cap) break;
            if (ca >= 1 && cb >= 1) conv.emplace_back(ca, cb);
            Interval frac = x - Interval::from_int(Int(static_cast<long>(flo)), prec);
            if (frac.contains_zero()) break;  // cannot certify the reciprocal
            x = Interval::from_int(Int(1), prec) / frac;
        }
        if (failed || conv.empty()) continue;  // retry at higher precision

        std::vector<std::pair<Int, Int>> pairs;
        for (const auto& c : conv) {
            if (pairs.size() == steps) break;
            pairs.push_back(c);
        }
        const auto& last = conv.back();
        for (Int j = 2; pairs.size() < steps; ++j)
            pairs.emplace_back(j * last.first, j * last.second);
        return pairs;
    }
    throw PrecisionExhausted("log_ratio_pairs: continued fraction not certified");
}

namespace {

// a point on the line l4, off all the lines through Q, giving a connecting
// line that is not in the configuration
ProjPoint auxiliary_point(const LineConfig& cfg, const ProjPoint& Q, const Vec& l4) {
    auto basis = kernel_basis(Mat{l4});
    if (basis.size() != 2)
        throw BadHypothesis("sharp_family: degenerate line");
    for (long s = 0; s <= 40; ++s)
        for (long sign : {1, -1}) {
            if (s == 0 && sign < 0) continue;
            for (int ori = 0; ori < 2; ++ori) {
                Vec cand(3);
                const Vec& w1 = basis[ori];
                const Vec& w2 = basis[1 - ori];
                for (int i = 0; i < 3; ++i) cand[i] = w1[i] + Int(sign * s) * w2[i];
                if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
                ProjPoint C(cand);
                if (C == Q) continue;
                bool ok = true;
                for (const auto& l : cfg.lines())
                    if (dot(l, Q.coords()) == 0 && dot(l, C.coords()) == 0) ok = false;
                if (!ok) continue;
                Vec L = cross3(Q.coords(), C.coords());
                Vec Lp = primitive_vector(L);
                for (const auto& l : cfg.lines())
                    if (l == Lp) ok = false;
                if (ok) return C;
            }
        }
    throw BadHypothesis("sharp_family: no admissible auxiliary point found");
}

} // namespace

SharpSummary sharp_family(ConfigTag kind, const LineConfig& cfg, const PlaceSet& S0,
                          std::size_t steps, const ScanOptions& opt) {
    PlaceSet S = normalize_places(S0);
    TypeTag tag = classify_type(cfg);
    if (tag.tag != kind)
        throw BadHypothesis("sharp_family: configuration is not of the requested type");

    WeightedForms wf;
    for (std::size_t i = 0; i < cfg.size(); ++i) wf.emplace_back(cfg.form(i), Rat(1));

    SharpSummary sum;
    auto emit = [&](const ProjPoint& P) {
        if (on_some_line(cfg, P)) {
            ++sum.skipped_on_lines;
            return;
        }
        LogVal m = prox(P, wf, S);
        LogVal h = global_height(P);
        sum.records.push_back(PlaneRecord{P, m, h, m.enclosure(kReportPrec),
                                          h.enclosure(kReportPrec)});
    };

    if (kind == ConfigTag::II) {
        auto [p, q] = two_finite_primes(S);
        auto tp = triple_points(cfg);
        const ProjPoint e1(std::vector<Int>{Int(1), Int(0), Int(0)});
        const ProjPoint e2(std::vector<Int>{Int(0), Int(1), Int(0)});
        const ProjPoint e3(std::vector<Int>{Int(0), Int(0), Int(1)});
        for (const auto& e : {e1, e2, e3})
            if (std::find(tp.begin(), tp.end(), e) == tp.end())
                throw BadHypothesis(
                    "sharp_family: Type II needs the coordinate vertices as "
                    "triple points");
        auto pairs = log_ratio_pairs(p, q, Int(400), steps, opt.precision_cap);
        for (const auto& [a, b] : pairs) {
            unsigned long au = a.get_ui(), bu = b.get_ui();
            Int pa = pow_int(p, au), qb = pow_int(q, bu);
            emit(ProjPoint(std::vector<Int>{pa * qb, qb, pa}));
            double mt = static_cast<double>(bu) * std::log(q.get_d());
            Rat u1(qb), u2 = Rat(qb) / Rat(pa);
            std::vector<double> t1, t2;
            for (const auto& v : S) {
                t1.push_back(v.arch ? mt : (v.p == q ? -mt : 0.0));
                t2.push_back(v.arch ? 0.0 : (v.p == q ? -mt : (v.p == p ? mt : 0.0)));
            }
            sum.profiles.push_back(unit_profile(u1, S, t1));
            sum.profiles.push_back(unit_profile(u2, S, t2));
        }
        return sum;
    }

    // Types I and III: integral points on a line through a triple point
    if (!contains_arch(S) || S.size() < 2)
        throw BadHypothesis("sharp_family: S must contain infinity and a finite prime");
    Int r = S[1].p;
    auto tp = triple_points(cfg);
    if (tp.empty())
        throw BadHypothesis("sharp_family: no triple point to anchor the line");
    ProjPoint Q = kind == ConfigTag::I ? tag.triples.front() : tp.front();
    std::optional<Vec> l4;
    if (kind == ConfigTag::I) {
        l4 = cfg.line(tag.repeated->first);
    } else {
        for (const auto& l : cfg.lines())
            if (dot(l, Q.coords()) != 0) {
                l4 = l;
                break;
            }
    }
    if (!l4) throw BadHypothesis("sharp_family: every line passes through the anchor");
    ProjPoint Qp = auxiliary_point(cfg, Q, *l4);
    for (std::size_t k = 1; k <= steps; ++k) {
        Int u = pow_int(r, static_cast<unsigned long>(k));
        Vec coords(3);
        for (int i = 0; i < 3; ++i) coords[i] = u * Q[i] + Qp[i];
        emit(ProjPoint(coords));
        double mt = static_cast<double>(k) * std::log(r.get_d());
        std::vector<double> target;
        for (const auto& v : S)
            target.push_back(v.arch ? mt : (v.p == r ? -mt : 0.0));
        sum.profiles.push_back(unit_profile(Rat(u), S, target));
    }
    return sum;
}

//--------------------------------------------------------------- td3b family

FamilySummary td3b_family(const Divisor1& D, const PlaceSet& S0, const Rat& t,
                          std::size_t count, const ScanOptions& opt) {
    PlaceSet S = normalize_places(S0);
    if (D.terms().size() != 6 || D.deg() != 6)
        throw BadHypothesis("td3b_family: divisor must be six rational points");
    for (std::size_t i = 0; i < 6; ++i)
        if (D.weight(i) != 1)
            throw BadHypothesis("td3b_family: divisor weights must all be one");
    if (t <= 4 || t >= Rat(9, 2))
        throw BadHypothesis("td3b_family: threshold must lie in (4, 9/2)");
    auto [p, q] = two_finite_primes(S);

    std::vector<Form> hp;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < 6; ++i) {
        hp.push_back(hyperplane_form(D.point(i), 3));
        rows.push_back(linear_coeffs(hp.back()));
    }
    if (!subgeneral_position(rows, 3))
        throw BadHypothesis("td3b_family: hyperplanes not in general position");

    auto meet3 = [&](int i, int j, int k) {
        auto basis = kernel_basis(Mat{rows[i], rows[j], rows[k]});
        if (basis.size() != 1)
            throw BadHypothesis("td3b_family: degenerate triple intersection");
        return ProjPoint(basis[0]);
    };
    ProjPoint Q1 = meet3(0, 1, 2), Q2 = meet3(0, 3, 4), Q3 = meet3(1, 3, 5);
    auto hker = kernel_basis(Mat{Q1.coords(), Q2.coords(), Q3.coords()});
    if (hker.size() != 1)
        throw BadHypothesis("td3b_family: special points do not span a plane");
    Form H = Form::linear(hker[0]);

    LineConfig lc = restrict_to_plane(hp, H, std::array<ProjPoint, 3>{Q1, Q2, Q3});
    if (classify_type(lc).tag != ConfigTag::II)
        throw BadHypothesis("td3b_family: restricted configuration is not Type II");

    std::vector<Rat1Map> maps = enumerate_phi(D, 3);
    FamilySummary sum;
    auto pairs =
        log_ratio_pairs(p, q, Int(400), count * 4 + 32, opt.precision_cap);
    for (const auto& [a, b] : pairs) {
        if (sum.records.size() >= count) break;
        Int pa = pow_int(p, a.get_ui()), qb = pow_int(q, b.get_ui());
        ProjPoint W2(std::vector<Int>{pa * qb, qb, pa});
        if (on_some_line(lc, W2)) {
            ++sum.on_divisor_skipped;
            continue;
        }
        std::vector<Int> w(4, Int(0));
        for (int i = 0; i < 4; ++i)
            w[i] = W2[0] * Q1[i] + W2[1] * Q2[i] + W2[2] * Q3[i];
        ProjPoint W3(w);
        IntPoly F(std::vector<Int>(W3.coords().begin(), W3.coords().end()));
        if (F.degree() != 3 || !is_irreducible(F)) {
            ++sum.reducible_discarded;
            continue;
        }
        AlgPoint P(F, 0);
        // the construction runs through the symmetric-power identification:
        // the minimal-polynomial image must land back on the plane
        if (psi_point(P) != W3 || H.eval(W3) != 0)
            throw BadHypothesis("td3b_family: symmetric-power image off the plane");
        AlgReal m = prox_alg(P, D, S);
        AlgReal h = alg_height(P);
        if (m.sign_vs(t, h, opt.precision_cap) != Sign4::Positive) {
            ++sum.uncertified_discarded;
            continue;
        }
        if (z_member_against(P, maps)) {
            ++sum.member_discarded;
            continue;
        }
        ScanRecord rec = make_record(P, report_enclosure(m, opt.precision_cap),
                                     report_enclosure(h, opt.precision_cap));
        rec.flagged = true;
        rec.z = ZStatus::Out;
        sum.records.push_back(std::move(rec));
    }
    return sum;
}

//------------------------------------------------------------ density check

bool zariski_density_check(const std::vector<ProjPoint>& points, unsigned e) {
    if (e < 1) throw UsageError("zariski_density_check: degree bound must be >= 1");
    std::vector<std::array<unsigned, 3>> exps;
    for (unsigned i = 0; i <= e; ++i)
        for (unsigned j = 0; i + j <= e; ++j) exps.push_back({i, j, e - i - j});
    Mat m;
    for (const auto& P : points) {
        if (P.size() != 3)
            throw UsageError("zariski_density_check: points must lie in the plane");
        Vec row;
        row.reserve(exps.size());
        for (const auto& ex : exps) {
            Int v = pow_int(P[0], ex[0]) * pow_int(P[1], ex[1]) * pow_int(P[2], ex[2]);
            row.push_back(std::move(v));
        }
        m.push_back(std::move(row));
    }
    if (m.size() < exps.size()) return false;
    return bareiss_rank(std::move(m)) == static_cast<int>(exps.size());
}

} // namespace wirsing
