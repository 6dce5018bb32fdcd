#include "wirsing/factor.hpp"

#include <algorithm>
#include <map>

#include "wirsing/roots.hpp"

namespace wirsing {

Rat mpf_to_rat(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rat(0);
    if (!mpfr_number_p(x)) throw ZeroInput("mpf_to_rat: non-finite value");
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rat r(m);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

Rat simplest_rational(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw UsageError("simplest_rational: empty interval");
    if (lo <= 0 && hi >= 0) return Rat(0);
    if (hi < 0) return -simplest_rational(-hi, -lo);
    // now 0 < lo <= hi
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    Int cl;
    mpz_cdiv_q(cl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (Rat(cl) <= hi) return Rat(cl);
    // same integer part; recurse on the fractional parts
    Rat fr = Rat(fl);
    return fr + Rat(1) / simplest_rational(Rat(1) / (hi - fr), Rat(1) / (lo - fr));
}

namespace {

// squarefree part f / gcd(f, f')
IntPoly squarefree_part(const IntPoly& f) {
    IntPoly g = IntPoly::gcd(f, f.derivative());
    if (g.degree() < 1) return f.primitive();
    return f.primitive().divide_exact(g).primitive();
}

} // namespace

std::vector<std::pair<Rat, unsigned>> rational_roots(const IntPoly& f_in) {
    if (f_in.degree() < 1) throw ZeroInput("rational_roots: degree must be >= 1");
    IntPoly f = f_in.primitive();
    IntPoly s = squarefree_part(f);
    if (s.degree() < 1) throw ZeroInput("rational_roots: squarefree part degenerate");

    const Int lead = abs(s.leading());
    // box width < 1/(2 lead^2) guarantees uniqueness of the candidate
    mpfr_prec_t prec = 64 + 2 * static_cast<mpfr_prec_t>(mpz_sizeinbase(lead.get_mpz_t(), 2));
    {
        Int big(1);
        for (const auto& c : s.coeffs()) big = std::max(big, Int(abs(c)));
        prec += static_cast<mpfr_prec_t>(mpz_sizeinbase(big.get_mpz_t(), 2));
    }

    std::vector<std::pair<Rat, unsigned>> out;
    if (s.degree() == 1) {
        out.emplace_back(make_rat(-s[0], s[1]), 0u);
    } else {
        std::vector<Rat> seen;
        for (const CInterval& box : conjugate_boxes(s, prec)) {
            if (!box.im().contains_zero()) continue;
            Rat lo = mpf_to_rat(box.re().lo_mp().get());
            Rat hi = mpf_to_rat(box.re().hi_mp().get());
            Rat cand = simplest_rational(lo, hi);
            if (cand.get_den() > lead) continue;
            if (f.eval(cand) != 0) continue;
            if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
            seen.push_back(cand);
            out.emplace_back(cand, 0u);
        }
    }

    // multiplicities by exact division
    for (auto& [root, mult] : out) {
        IntPoly lin({-root.get_num(), root.get_den()});
        IntPoly w = f;
        while (true) {
            QPoly q(w);
            auto [quot, rem] = q.divmod(QPoly(lin));
            if (!rem.is_zero()) break;
            ++mult;
            IntPoly next;
            std::vector<Int> v(quot.coeffs().size());
            for (size_t i = 0; i < v.size(); ++i) v[i] = Int(quot[i]);
            w = IntPoly(std::move(v));
            if (w.degree() < 1) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

// try to split a primitive quartic with no rational roots into two primitive
// integer quadratics; nullopt if irreducible
std::optional<std::pair<IntPoly, IntPoly>> quartic_split(const IntPoly& f) {
    const Int L = f[4];
    // monic transform g(y) = L^3 f(y/L) = y^4 + B y^3 + C y^2 + D y + E
    const Int B = f[3];
    const Int C = f[2] * L;
    const Int D = f[1] * L * L;
    const Int E = f[0] * L * L * L;

    IntPoly resolvent(
        {-(B * B * E - 4 * C * E + D * D), B * D - 4 * E, -C, Int(1)});

    auto build = [&](const Int& p, const Int& q, const Int& r,
                     const Int& s) -> std::optional<std::pair<IntPoly, IntPoly>> {
        // g = (y^2 + p y + q)(y^2 + r y + s); back-substitute y = L x
        if (q * s != E || p * s + q * r != D) return std::nullopt;
        IntPoly F1 = IntPoly({q, p * L, L * L}).primitive();
        IntPoly F2 = IntPoly({s, r * L, L * L}).primitive();
        IntPoly prod = F1 * F2;
        if (prod == f) return std::make_pair(F1, F2);
        if (prod == -f) return std::make_pair(-F1, F2);
        return std::nullopt;
    };

    for (const auto& [z_rat, mult] : rational_roots(resolvent)) {
        (void)mult;
        if (z_rat.get_den() != 1) continue;  // monic cubic: integer roots only
        const Int z0 = z_rat.get_num();
        Int d1 = B * B - 4 * (C - z0);
        if (d1 < 0) continue;
        if (mpz_perfect_square_p(d1.get_mpz_t()) == 0) continue;
        Int s1;
        mpz_sqrt(s1.get_mpz_t(), d1.get_mpz_t());
        if ((B - s1) % 2 != 0) continue;  // p, r must be integers
        if (s1 != 0) {
            Int p = (B + s1) / 2, r = (B - s1) / 2;
            // q (r - p) = D - p z0
            Int num = D - p * z0, den = r - p;
            if (num % den != 0) continue;
            Int q = num / den, s = z0 - q;
            if (auto split = build(p, q, r, s)) return split;
        } else {
            Int p = B / 2;
            if (D != p * z0) continue;
            Int d2 = z0 * z0 - 4 * E;
            if (d2 < 0 || mpz_perfect_square_p(d2.get_mpz_t()) == 0) continue;
            Int s2;
            mpz_sqrt(s2.get_mpz_t(), d2.get_mpz_t());
            if ((z0 - s2) % 2 != 0) continue;
            Int q = (z0 + s2) / 2, s = (z0 - s2) / 2;
            if (auto split = build(p, q, p, s)) return split;
        }
    }
    return std::nullopt;
}

IntPoly positive_lead(IntPoly f) {
    if (!f.is_zero() && f.leading() < 0) return -f;
    return f;
}

} // namespace

bool is_irreducible(const IntPoly& f_in) {
    IntPoly f = f_in.primitive();
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (d > 4) throw UnsupportedRegime("is_irreducible: degree > 4 not supported");
    if (d == 2) {
        Int disc = f[1] * f[1] - 4 * f[2] * f[0];
        if (disc < 0) return true;
        return mpz_perfect_square_p(disc.get_mpz_t()) == 0;
    }
    if (!rational_roots(f).empty()) return false;
    if (d == 3) return true;
    // quartic: no rational roots; check quadratic splits
    if (IntPoly::gcd(f, f.derivative()).degree() > 0) return false;  // square of a quadratic
    return !quartic_split(f).has_value();
}

std::vector<std::pair<IntPoly, unsigned>> factor_poly(const IntPoly& f_in) {
    IntPoly work = f_in.primitive();
    if (work.degree() < 1) return {};
    if (work.degree() > 4) throw UnsupportedRegime("factor_poly: degree > 4 not supported");

    std::map<IntPoly, unsigned> acc;
    // linear factors
    for (const auto& [root, mult] : rational_roots(work)) {
        IntPoly lin = positive_lead(IntPoly({-root.get_num(), root.get_den()}));
        acc[lin] += mult;
        for (unsigned i = 0; i < mult; ++i) work = work.divide_exact(lin);
    }
    work = work.primitive();

    if (work.degree() >= 1) {
        if (work.degree() <= 3) {
            // no rational roots left: quadratics and cubics are irreducible
            acc[positive_lead(work)] += 1;
        } else {
            IntPoly g = IntPoly::gcd(work, work.derivative());
            if (g.degree() == 2) {
                acc[positive_lead(g)] += 2;  // square of an irreducible quadratic
            } else if (auto split = quartic_split(work)) {
                acc[positive_lead(split->first)] += 1;
                acc[positive_lead(split->second)] += 1;
            } else {
                acc[positive_lead(work)] += 1;
            }
        }
    }
    return {acc.begin(), acc.end()};
}

} // namespace wirsing
