#include "wirsing/exceptional.hpp"

#include <algorithm>

#include "wirsing/errors.hpp"

namespace wirsing {

//=============================================================================
// Rat1Map
//=============================================================================

namespace {

BiForm divide_content(const BiForm& f, const Int& g) {
    if (g <= 1) return f;
    std::vector<Int> c = f.coeffs();
    for (auto& v : c) v /= g;
    return BiForm(f.degree(), std::move(c));
}

} // namespace

Rat1Map::Rat1Map(BiForm num, BiForm den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.degree() != den_.degree())
        throw UsageError("Rat1Map: numerator and denominator degrees differ");
    if (num_.is_zero() || den_.is_zero())
        throw ZeroInput("Rat1Map: zero component");
    Int g = gcd(num_.content(), den_.content());
    num_ = divide_content(num_, g);
    den_ = divide_content(den_, g);
}

ProjPoint Rat1Map::eval(const ProjPoint& P) const {
    if (P.size() != 2) throw UsageError("Rat1Map: points must lie on P^1");
    Int n = num_.eval(P[0], P[1]);
    Int d = den_.eval(P[0], P[1]);
    if (n == 0 && d == 0)
        throw DegenerateMap("Rat1Map: both forms vanish at " + P.str());
    return ProjPoint(std::vector<Int>{n, d});
}

std::optional<ProjPoint> Rat1Map::rational_value(const AlgPoint& P) const {
    if (P.is_rational()) return eval(P.rational_point());

    const IntPoly& F = P.minpoly();
    QPoly n = nf_reduce(QPoly(num_.dehomogenize()), F);
    QPoly d = nf_reduce(QPoly(den_.dehomogenize()), F);
    if (n.is_zero() && d.is_zero())
        throw DegenerateMap("Rat1Map: degenerate at " + P.str());
    if (d.is_zero()) return ProjPoint::p1_infinity();
    if (n.is_zero()) return ProjPoint::p1(Rat(0));
    // phi(alpha) is rational iff the power-basis representatives are parallel
    std::size_t j = 0;
    while (d[j] == 0) ++j;
    Rat c = n[j] / d[j];
    if (n == d * c) return ProjPoint::p1(c);
    return std::nullopt;
}

Rat1Map Rat1Map::substitute(const Rat1Map& inner) const {
    unsigned d = degree();
    // power tables of the inner components up to degree d
    std::vector<BiForm> pn{BiForm(0, {Int(1)})}, pd{BiForm(0, {Int(1)})};
    for (unsigned i = 1; i <= d; ++i) {
        pn.push_back(pn.back() * inner.num_);
        pd.push_back(pd.back() * inner.den_);
    }
    auto subst = [&](const BiForm& outer) {
        BiForm total(d * inner.degree(), std::vector<Int>(d * inner.degree() + 1, Int(0)));
        for (unsigned i = 0; i <= d; ++i) {
            if (outer[i] == 0) continue;
            total = total + (pn[i] * pd[d - i]) * outer[i];
        }
        return total;
    };
    return Rat1Map(subst(num_), subst(den_));
}

Rat1Map Rat1Map::shift_den(const Int& u) const {
    return Rat1Map(num_.compose(Int(1), Int(0), u, Int(1)),
                   den_.compose(Int(1), Int(0), u, Int(1)));
}

std::string Rat1Map::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

//=============================================================================
// the phi family
//=============================================================================

namespace {

bool next_subset(std::vector<std::size_t>& idx, std::size_t q) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < q - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

} // namespace

std::vector<PhiIndex> enumerate_phi_indices(std::size_t q, unsigned d) {
    if (d == 0) throw UsageError("enumerate_phi_indices: degree must be positive");
    std::vector<PhiIndex> all;
    if (q < 2 * static_cast<std::size_t>(d)) return all;
    std::vector<std::size_t> i1 = first_subset(d);
    do {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < q; ++i)
            if (std::find(i1.begin(), i1.end(), i) == i1.end()) rest.push_back(i);
        std::vector<std::size_t> pos = first_subset(d);
        do {
            PhiIndex I;
            I.I1 = i1;
            for (std::size_t p : pos) I.I2.push_back(rest[p]);
            all.push_back(std::move(I));
        } while (next_subset(pos, rest.size()));
    } while (next_subset(i1, q));
    return all;
}

Rat1Map phi_from_index(const Divisor1& D, const PhiIndex& I) {
    auto prod = [&](const std::vector<std::size_t>& idx) {
        BiForm f(0, {Int(1)});
        for (std::size_t i : idx) {
            const ProjPoint& p = D.point(i);
            f = f * BiForm::from_point(p[0], p[1]);
        }
        return f;
    };
    return Rat1Map(prod(I.I1), prod(I.I2));
}

std::vector<Rat1Map> enumerate_phi(const Divisor1& D, unsigned d) {
    std::vector<Rat1Map> maps;
    for (const auto& I : enumerate_phi_indices(D.size(), d))
        maps.push_back(phi_from_index(D, I));
    return maps;
}

//=============================================================================
// membership
//=============================================================================

std::optional<std::pair<std::size_t, ProjPoint>> z_member_against(
    const AlgPoint& P, const std::vector<Rat1Map>& maps) {
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (auto v = maps[i].rational_value(P)) return std::make_pair(i, *v);
    return std::nullopt;
}

ZResult z_member(const AlgPoint& P, const Divisor1& D, unsigned d, const Rat& t) {
    if (t <= 0) throw UsageError("z_member: t must be positive");
    if (d == 0) throw UsageError("z_member: d must be positive");
    if (P.degree() > d)
        throw WrongDegree("z_member: point degree " + std::to_string(P.degree()) +
                          " exceeds d = " + std::to_string(d));
    if (P.is_rational() && D.contains(P.rational_point()))
        throw OnSupport("z_member: " + P.str() + " lies in the divisor support");

    Rat degD = D.deg();
    if (t > degD) return {Membership::Out, {}};

    Rat trivial_cap = std::min(Rat(d + 1), degD);
    if (t <= trivial_cap) {
        ZResult r{Membership::In, {}};
        r.witness.map = rem_witness(P, D, d, t);
        r.witness.value = ProjPoint::p1(Rat(1));
        return r;
    }

    bool gate = t > Rat(2 * d - 1) || (d == 3 && t > Rat(9, 2));
    if (!gate)
        throw UnsupportedRegime("z_member: t in the undecidable window for d = " +
                                std::to_string(d));
    if (t > Rat(2 * d)) return {Membership::Out, {}};
    if (D.size() < 2 * static_cast<std::size_t>(d)) return {Membership::Out, {}};

    auto indices = enumerate_phi_indices(D.size(), d);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        Rat1Map phi = phi_from_index(D, indices[i]);
        if (auto v = phi.rational_value(P)) {
            ZResult r{Membership::In, {}};
            r.witness.index = indices[i];
            r.witness.map = std::move(phi);
            r.witness.value = *v;
            return r;
        }
    }
    return {Membership::Out, {}};
}

//=============================================================================
// remainder witness
//=============================================================================

namespace {

struct FiniteData {
    IntPoly F;                // minimal polynomial of P (linear if rational)
    std::vector<Rat> pts;     // chosen divisor points, all finite
};

// QPoly for (x - b)
QPoly linear_shift(const Rat& b) { return QPoly({-b, Rat(1)}); }

} // namespace

Rat1Map rem_witness(const AlgPoint& P, const Divisor1& D, unsigned d, const Rat& t) {
    if (t <= 0) throw UsageError("rem_witness: t must be positive");
    Rat degD = D.deg();
    if (t > Rat(d + 1) || t > degD)
        throw UsageError("rem_witness: requires t <= min(d + 1, deg D)");
    if (P.is_rational() && D.contains(P.rational_point()))
        throw OnSupport("rem_witness: " + P.str() + " lies in the divisor support");

    Int tcz;
    mpz_cdiv_q(tcz.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    auto tc = std::max(tcz.get_ui(), 2ul);  // ceil(t); at least one point per side
    std::size_t q = D.size();
    unsigned e = P.degree();

    if (tc > q) throw DegreeTooSmall("rem_witness: ceil(t) exceeds the support size");

    std::vector<std::size_t> subset = first_subset(tc);
    do {
        // ---- transform to finite coordinates if infinity is involved
        bool has_inf = (P.is_rational() && P.rational_point().is_p1_infinity());
        for (std::size_t i : subset)
            if (D.point(i).is_p1_infinity()) has_inf = true;

        Int u(0);
        if (has_inf) {
            for (u = 1;; ++u) {
                bool ok = true;
                for (std::size_t i : subset) {
                    const ProjPoint& a = D.point(i);
                    if (u * a[0] + a[1] == 0) ok = false;
                }
                if (P.is_rational()) {
                    const ProjPoint& p = P.rational_point();
                    if (u * p[0] + p[1] == 0) ok = false;
                }
                if (ok) break;
            }
        }

        FiniteData fd;
        for (std::size_t i : subset) {
            const ProjPoint& a = D.point(i);
            fd.pts.push_back(make_rat(a[0], u * a[0] + a[1]));
        }
        if (P.is_rational()) {
            const ProjPoint& p = P.rational_point();
            fd.F = IntPoly({-p[0], u * p[0] + p[1]}).primitive();
        } else if (u == 0) {
            fd.F = P.minpoly();
        } else {
            BiForm G = P.min_form().compose(Int(1), Int(0), -u, Int(1));
            fd.F = G.dehomogenize().primitive();
        }
        if (fd.F.leading() < 0) fd.F = -fd.F;

        // ---- phi_0 = prod_{i < tc-1}(x - b_i) / (x - b_last) in Q[x]/(F)
        QPoly numer({Rat(1)});
        for (std::size_t i = 0; i + 1 < tc; ++i)
            numer = nf_mul(numer, linear_shift(fd.pts[i]), fd.F);
        QPoly c = nf_mul(numer, nf_inv(linear_shift(fd.pts[tc - 1]), fd.F), fd.F);

        // ---- split c = mu * g with g integral primitive
        IntPoly g = c.primitive_int();
        std::size_t j = 0;
        while (g[j] == 0) ++j;
        Rat mu = c[j] / Rat(g[j]);

        // ---- forbidden values: the denominator may not vanish at chosen
        //      points; perturb by multiples of F (value at P unchanged)
        bool ok = true;
        for (int k = 0;; ++k) {
            bool clean = true;
            for (const Rat& b : fd.pts)
                if (g.eval(b) == 0) clean = false;
            if (clean) break;
            if (e >= d || k > static_cast<int>(q) + 2) {
                ok = false;  // perturbation would push the degree past d
                break;
            }
            g = g + fd.F;
        }
        if (!ok) continue;

        // ---- assemble integer forms of a common degree <= d
        QPoly numQ({Rat(1)});
        for (std::size_t i = 0; i + 1 < tc; ++i)
            numQ = numQ * linear_shift(fd.pts[i]);
        QPoly denQ = linear_shift(fd.pts[tc - 1]) * QPoly(g) * mu;

        Int lcm(1);
        for (const Rat& v : numQ.coeffs()) {
            Int den = v.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (const Rat& v : denQ.coeffs()) {
            Int den = v.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        auto to_int = [&](const QPoly& f) {
            std::vector<Int> cs;
            for (const Rat& v : f.coeffs()) {
                Rat s = v * Rat(lcm);
                s.canonicalize();
                cs.push_back(s.get_num());
            }
            return IntPoly(std::move(cs));
        };
        IntPoly N = to_int(numQ), Dn = to_int(denQ);
        unsigned deg =
            static_cast<unsigned>(std::max(N.degree(), Dn.degree()));
        if (deg > d) continue;

        BiForm Nf = BiForm::homogenize(N, deg);
        BiForm Df = BiForm::homogenize(Dn, deg);
        if (u != 0) {
            Nf = Nf.compose(Int(1), Int(0), u, Int(1));
            Df = Df.compose(Int(1), Int(0), u, Int(1));
        }
        Rat1Map phi(std::move(Nf), std::move(Df));

        // ---- verify the postconditions exactly
        auto value = phi.rational_value(P);
        if (!value || *value != ProjPoint::p1(Rat(1))) continue;
        bool vanishing_ok = true;
        for (std::size_t i = 0; i + 1 < tc; ++i) {
            const ProjPoint& a = D.point(subset[i]);
            if (phi.num().eval(a[0], a[1]) != 0) vanishing_ok = false;
        }
        const ProjPoint& last = D.point(subset[tc - 1]);
        if (phi.den().eval(last[0], last[1]) != 0) vanishing_ok = false;
        if (!vanishing_ok) continue;

        return phi;
    } while (next_subset(subset, q));

    throw DegreeTooSmall("rem_witness: no admissible choice of divisor points");
}

//=============================================================================
// pullback profile
//=============================================================================

std::vector<std::pair<ProjPoint, unsigned>> pullback_profile(const Rat1Map& phi,
                                                             const Divisor1& D) {
    std::vector<std::pair<ProjPoint, unsigned>> profile;
    for (const auto& [p, w] : D.terms()) {
        (void)w;
        ProjPoint img = phi.eval(p);
        auto it = std::find_if(profile.begin(), profile.end(),
                               [&](const auto& e) { return e.first == img; });
        if (it == profile.end())
            profile.emplace_back(img, 1u);
        else
            ++it->second;
    }
    std::sort(profile.begin(), profile.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return profile;
}

} // namespace wirsing
