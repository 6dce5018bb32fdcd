#include "wirsing/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>

namespace wirsing {

namespace {

constexpr mpfr_prec_t kLadderStart = 64;
constexpr mpfr_prec_t kHardCeiling = 1 << 15;

//------------------------------------------------- approximate complex numbers

struct MpC {
    MpFloat re, im;
    explicit MpC(mpfr_prec_t p) : re(p), im(p) {}
};

void c_set(MpC& r, const MpC& a) {
    mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
}

void c_add(MpC& r, const MpC& a, const MpC& b) {
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void c_sub(MpC& r, const MpC& a, const MpC& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void c_mul(MpC& r, const MpC& a, const MpC& b) {
    MpFloat t1(r.re.prec()), t2(r.re.prec()), nre(r.re.prec());
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(nre.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_set(r.re.get(), nre.get(), MPFR_RNDN);
}

void c_div(MpC& r, const MpC& a, const MpC& b) {
    MpFloat n(r.re.prec()), t1(r.re.prec()), t2(r.re.prec()), nre(r.re.prec());
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(n.get(), t1.get(), t2.get(), MPFR_RNDN);  // |b|^2
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(nre.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(nre.get(), nre.get(), n.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
    mpfr_set(r.re.get(), nre.get(), MPFR_RNDN);
}

// Horner evaluation of f and f' at z, approximate
void horner2(const IntPoly& f, const MpC& z, MpC& pf, MpC& pd) {
    const int d = f.degree();
    mpfr_set_z(pf.re.get(), f[static_cast<size_t>(d)].get_mpz_t(), MPFR_RNDN);
    mpfr_set_zero(pf.im.get(), 1);
    mpfr_set_zero(pd.re.get(), 1);
    mpfr_set_zero(pd.im.get(), 1);
    MpC t(z.re.prec());
    for (int i = d - 1; i >= 0; --i) {
        c_mul(t, pd, z);
        c_add(pd, t, pf);
        c_mul(t, pf, z);
        mpfr_add_z(t.re.get(), t.re.get(), f[static_cast<size_t>(i)].get_mpz_t(), MPFR_RNDN);
        c_set(pf, t);
    }
}

//----------------------------------------------------------- interval helpers

CInterval point_box(const MpC& z, mpfr_prec_t prec) {
    return CInterval(Interval::point(z.re, prec), Interval::point(z.im, prec));
}

// interval Horner of f over a complex box
CInterval ieval(const IntPoly& f, const CInterval& z, mpfr_prec_t prec) {
    Interval zero(prec);
    CInterval acc(Interval::from_int(f[static_cast<size_t>(f.degree())], prec), zero);
    for (int i = f.degree() - 1; i >= 0; --i) {
        acc = acc * z;
        acc = acc + CInterval(Interval::from_int(f[static_cast<size_t>(i)], prec), zero);
    }
    return acc;
}

//------------------------------------------------------- Aberth root finding

struct Attempt {
    std::vector<CInterval> boxes;  // certified, unsorted
    bool ok = false;
};

Attempt isolate_at(const IntPoly& f, mpfr_prec_t prec) {
    Attempt out;
    const int d = f.degree();
    const mpfr_prec_t w = prec + 96;  // working precision for the iteration

    // start points from the Newton polygon of the coefficients: each edge of
    // the upper convex hull of (i, log2 |c_i|) contributes its width many
    // points on the circle whose log-radius is the edge slope.  The radii are
    // assembled in mpfr, so coefficient magnitudes far beyond double range
    // are handled; a trailing zero coefficient seeds the origin exactly.
    std::vector<MpC> z;
    z.reserve(static_cast<size_t>(d));
    {
        std::vector<std::pair<int, double>> pts;
        for (int i = 0; i <= d; ++i) {
            const Int& ci = f[static_cast<size_t>(i)];
            if (ci == 0) continue;
            MpFloat t(64);
            mpfr_set_z(t.get(), ci.get_mpz_t(), MPFR_RNDN);
            mpfr_abs(t.get(), t.get(), MPFR_RNDN);
            mpfr_log2(t.get(), t.get(), MPFR_RNDN);
            pts.emplace_back(i, mpfr_get_d(t.get(), MPFR_RNDN));
        }
        for (int i = 0; i < pts.front().first; ++i) {
            MpC p(w);
            mpfr_set_ui(p.re.get(), 0, MPFR_RNDN);
            mpfr_set_ui(p.im.get(), 0, MPFR_RNDN);
            z.push_back(std::move(p));
        }
        std::vector<std::pair<int, double>> hull;
        for (const auto& p : pts) {
            while (hull.size() >= 2) {
                const auto& p1 = hull[hull.size() - 2];
                const auto& p2 = hull.back();
                if ((p2.second - p1.second) * (p.first - p1.first) <=
                    (p.second - p1.second) * (p2.first - p1.first))
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(p);
        }
        for (size_t eidx = 0; eidx + 1 < hull.size(); ++eidx) {
            const int i1 = hull[eidx].first, i2 = hull[eidx + 1].first;
            const int n = i2 - i1;
            double rho = (hull[eidx].second - hull[eidx + 1].second) / n;
            double ip;
            double fp = std::modf(rho, &ip);
            MpFloat rad(w);
            mpfr_set_d(rad.get(), std::exp2(fp), MPFR_RNDN);
            mpfr_mul_2si(rad.get(), rad.get(), static_cast<long>(ip), MPFR_RNDN);
            for (int k = 0; k < n; ++k) {
                MpC p(w);
                MpFloat ang(w);
                // angle offsets break symmetry traps and circle collisions
                mpfr_const_pi(ang.get(), MPFR_RNDN);
                mpfr_mul_d(ang.get(), ang.get(),
                           2.0 * (k + 0.3) / n + 0.5 * static_cast<double>(eidx),
                           MPFR_RNDN);
                MpFloat c(w), s(w);
                mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
                mpfr_mul(p.re.get(), c.get(), rad.get(), MPFR_RNDN);
                mpfr_mul(p.im.get(), s.get(), rad.get(), MPFR_RNDN);
                z.push_back(std::move(p));
            }
        }
    }

    // Aberth-Ehrlich iteration; convergence measured in exponents so the
    // criterion survives arbitrary precision
    const int max_iter = 400 + 10 * d;
    for (int it = 0; it < max_iter; ++it) {
        long worst_exp = mpfr_get_emin();
        bool moved = false;
        for (int k = 0; k < d; ++k) {
            MpC pf(w), pd(w), nk(w);
            horner2(f, z[static_cast<size_t>(k)], pf, pd);
            if (mpfr_zero_p(pf.re.get()) && mpfr_zero_p(pf.im.get())) continue;
            if (mpfr_zero_p(pd.re.get()) && mpfr_zero_p(pd.im.get())) {
                // relative nudge off a critical point (scale-invariant)
                mpfr_mul_d(z[static_cast<size_t>(k)].re.get(),
                           z[static_cast<size_t>(k)].re.get(), 1.001, MPFR_RNDN);
                mpfr_mul_d(z[static_cast<size_t>(k)].im.get(),
                           z[static_cast<size_t>(k)].im.get(), 1.0009, MPFR_RNDN);
                worst_exp = 0;
                moved = true;
                continue;
            }
            c_div(nk, pf, pd);
            // s = sum_{j != k} 1/(z_k - z_j)
            MpC s(w), t(w), diff(w), one(w);
            mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                c_sub(diff, z[static_cast<size_t>(k)], z[static_cast<size_t>(j)]);
                if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get())) {
                    mpfr_mul_d(z[static_cast<size_t>(k)].re.get(),
                               z[static_cast<size_t>(k)].re.get(),
                               1.0 + 1e-3 * (j + 1), MPFR_RNDN);
                    mpfr_mul_d(z[static_cast<size_t>(k)].im.get(),
                               z[static_cast<size_t>(k)].im.get(),
                               1.0 + 1.1e-3 * (j + 1), MPFR_RNDN);
                    c_sub(diff, z[static_cast<size_t>(k)], z[static_cast<size_t>(j)]);
                }
                c_div(t, one, diff);
                c_add(s, s, t);
            }
            MpC denom(w), corr(w);
            c_mul(denom, nk, s);
            mpfr_ui_sub(denom.re.get(), 1, denom.re.get(), MPFR_RNDN);
            mpfr_neg(denom.im.get(), denom.im.get(), MPFR_RNDN);
            if (mpfr_zero_p(denom.re.get()) && mpfr_zero_p(denom.im.get())) {
                c_set(corr, nk);
            } else {
                c_div(corr, nk, denom);
            }
            c_sub(z[static_cast<size_t>(k)], z[static_cast<size_t>(k)], corr);
            moved = true;
            MpFloat ac(w), az(w);
            mpfr_hypot(ac.get(), corr.re.get(), corr.im.get(), MPFR_RNDN);
            mpfr_hypot(az.get(), z[static_cast<size_t>(k)].re.get(),
                       z[static_cast<size_t>(k)].im.get(), MPFR_RNDN);
            if (!mpfr_zero_p(ac.get())) {
                long ze = mpfr_zero_p(az.get()) ? 0 : mpfr_get_exp(az.get());
                worst_exp = std::max(worst_exp, mpfr_get_exp(ac.get()) - std::max(0L, ze));
            }
        }
        if (!moved || worst_exp < -static_cast<long>(prec + 16)) break;
    }

    // rigorous certification of each approximation
    IntPoly fd = f.derivative();
    std::vector<CInterval> boxes;
    for (int k = 0; k < d; ++k) {
        CInterval zb = point_box(z[static_cast<size_t>(k)], w);
        Interval fv2 = ieval(f, zb, w).abs2();
        Interval dv2 = ieval(fd, zb, w).abs2();
        if (!dv2.is_positive()) return out;
        // min_j |z - zeta_j| <= d * |f(z)| / |f'(z)|
        Interval rad = (fv2 / dv2).sqrt().scaled(Rat(d));
        MpFloat rho(w);
        mpfr_set(rho.get(), rad.hi_mp().get(), MPFR_RNDU);
        // width requirement: rho <= 2^(-prec) * max(1, |z|)
        MpFloat lim(w);
        mpfr_hypot(lim.get(), z[static_cast<size_t>(k)].re.get(),
                   z[static_cast<size_t>(k)].im.get(), MPFR_RNDD);
        if (mpfr_cmp_ui(lim.get(), 1) < 0) mpfr_set_ui(lim.get(), 1, MPFR_RNDD);
        mpfr_mul_2si(lim.get(), lim.get(), -static_cast<long>(prec), MPFR_RNDD);
        if (mpfr_cmp(rho.get(), lim.get()) > 0) return out;

        Interval rad_sym = Interval::point(rho, w);
        Interval re = Interval::point(z[static_cast<size_t>(k)].re, w);
        Interval im = Interval::point(z[static_cast<size_t>(k)].im, w);
        boxes.emplace_back(re + Interval::hull(rad_sym, -rad_sym),
                           im + Interval::hull(rad_sym, -rad_sym));
    }

    // pairwise disjoint => exactly one root per box (pigeonhole)
    for (size_t i = 0; i < boxes.size(); ++i)
        for (size_t j = i + 1; j < boxes.size(); ++j)
            if (!boxes[i].disjoint(boxes[j])) return out;

    out.boxes = std::move(boxes);
    out.ok = true;
    return out;
}

//------------------------------------------------------------- canonical sort

// strict comparison of disjoint boxes by (re, im); nullopt when undecidable
std::optional<bool> box_less(const CInterval& a, const CInterval& b) {
    if (mpfr_cmp(a.re().hi_mp().get(), b.re().lo_mp().get()) < 0) return true;
    if (mpfr_cmp(b.re().hi_mp().get(), a.re().lo_mp().get()) < 0) return false;
    if (mpfr_cmp(a.im().hi_mp().get(), b.im().lo_mp().get()) < 0) return true;
    if (mpfr_cmp(b.im().hi_mp().get(), a.im().lo_mp().get()) < 0) return false;
    return std::nullopt;
}

bool sort_canonical(std::vector<CInterval>& boxes) {
    // selection sort with the partial comparator, then consistency check
    const size_t n = boxes.size();
    for (size_t i = 0; i < n; ++i) {
        size_t best = i;
        for (size_t j = i + 1; j < n; ++j) {
            auto lt = box_less(boxes[j], boxes[best]);
            if (!lt.has_value()) return false;
            if (*lt) best = j;
        }
        std::swap(boxes[i], boxes[best]);
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        auto lt = box_less(boxes[i], boxes[i + 1]);
        if (!lt.has_value() || !*lt) return false;
    }
    return true;
}

//-------------------------------------------------------------------- closed forms

// degree 1: exact rational root
std::vector<CInterval> linear_boxes(const IntPoly& f, mpfr_prec_t prec) {
    Rat root = make_rat(-f[0], f[1]);
    return {CInterval(Interval::from_rat(root, prec), Interval(prec))};
}

// degree 2: exact closed form with directed square roots; precision escalates
// until the two boxes are provably separated
std::vector<CInterval> quadratic_boxes(const IntPoly& f, mpfr_prec_t prec) {
    const Int &a = f[2], &b = f[1], &c = f[0];
    Int disc = b * b - 4 * a * c;
    if (disc == 0) throw UsageError("quadratic_boxes: not squarefree");
    for (mpfr_prec_t w = prec + 8; w <= kHardCeiling; w *= 2) {
        std::vector<CInterval> out;
        if (disc > 0) {
            Interval s = Interval::from_int(disc, w).sqrt();
            Interval mb = Interval::from_int(-b, w);
            out.emplace_back((mb - s).scaled(make_rat(1, 2 * a)), Interval(w));
            out.emplace_back((mb + s).scaled(make_rat(1, 2 * a)), Interval(w));
        } else {
            Interval s = Interval::from_int(-disc, w).sqrt();
            Interval re = Interval::from_rat(make_rat(-b, 2 * a), w);
            Interval im = s.scaled(make_rat(1, 2 * a));
            out.emplace_back(re, -im);
            out.emplace_back(re, im);
        }
        auto lt = box_less(out[1], out[0]);
        if (!lt.has_value()) continue;  // not yet separated at this precision
        if (*lt) std::swap(out[0], out[1]);
        return out;
    }
    throw PrecisionExhausted("quadratic_boxes: separation failed below hard ceiling");
}

//-------------------------------------------------------------------- caching

struct CacheEntry {
    std::vector<CInterval> ref;    // boxes fixing the canonical order
    mpfr_prec_t ref_prec = 0;
    std::vector<CInterval> best;   // finest certified refinement so far
    mpfr_prec_t best_prec = 0;
};

std::map<IntPoly, CacheEntry> g_cache;
std::mutex g_mutex;

std::vector<CInterval> isolate_sorted(const IntPoly& f, mpfr_prec_t prec) {
    for (mpfr_prec_t p = prec; p <= kHardCeiling; p *= 2) {
        Attempt a = isolate_at(f, p);
        if (!a.ok) continue;
        if (sort_canonical(a.boxes)) return a.boxes;
    }
    throw PrecisionExhausted("conjugate_boxes: certification failed below hard ceiling");
}

// match refined boxes to the reference ordering (bijection by intersection)
bool match_to_ref(const std::vector<CInterval>& ref, std::vector<CInterval>& fine) {
    const size_t n = ref.size();
    std::vector<int> pos(n, -1);
    std::vector<bool> used(n, false);
    for (size_t i = 0; i < n; ++i) {
        int hit = -1;
        for (size_t j = 0; j < n; ++j) {
            if (!fine[i].disjoint(ref[j])) {
                if (hit >= 0) return false;  // ambiguous
                hit = static_cast<int>(j);
            }
        }
        if (hit < 0 || used[static_cast<size_t>(hit)]) return false;
        used[static_cast<size_t>(hit)] = true;
        pos[i] = hit;
    }
    std::vector<CInterval> out(n, CInterval(64));
    for (size_t i = 0; i < n; ++i) out[static_cast<size_t>(pos[i])] = fine[i];
    fine = std::move(out);
    return true;
}

} // namespace

std::vector<CInterval> conjugate_boxes(const IntPoly& f_in, mpfr_prec_t prec) {
    IntPoly f = f_in.primitive();
    if (f.degree() < 1) throw ZeroInput("conjugate_boxes: degree must be >= 1");
    if (IntPoly::gcd(f, f.derivative()).degree() > 0)
        throw UsageError("conjugate_boxes: polynomial must be squarefree");
    prec = std::max(prec, kLadderStart);

    if (f.degree() == 1) return linear_boxes(f, prec);
    if (f.degree() == 2) return quadratic_boxes(f, prec);

    std::lock_guard<std::mutex> lock(g_mutex);
    CacheEntry& e = g_cache[f];
    if (e.ref.empty()) {
        e.ref = isolate_sorted(f, kLadderStart);
        e.ref_prec = kLadderStart;
        e.best = e.ref;
        e.best_prec = kLadderStart;
    }
    if (e.best_prec >= prec) return e.best;

    for (mpfr_prec_t p = prec; p <= kHardCeiling; p *= 2) {
        Attempt a = isolate_at(f, p);
        if (!a.ok) continue;
        if (match_to_ref(e.ref, a.boxes)) {
            e.best = a.boxes;
            e.best_prec = p;
            return e.best;
        }
    }
    throw PrecisionExhausted("conjugate_boxes: refinement failed below hard ceiling");
}

void clear_root_cache() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache.clear();
}

} // namespace wirsing
