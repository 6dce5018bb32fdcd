#include "wirsing/projective.hpp"

#include <algorithm>
#include <sstream>

#include "wirsing/errors.hpp"

namespace wirsing {

//=============================================================================
// ProjPoint
//=============================================================================

namespace {

std::vector<Int> normalize_coords(std::vector<Int> v) {
    if (v.empty()) throw ZeroInput("ProjPoint: no coordinates");
    Int g = vector_gcd(v);
    if (g == 0) throw ZeroInput("ProjPoint: all coordinates zero");
    for (auto& c : v) c /= g;
    for (const auto& c : v) {
        if (c != 0) {
            if (c < 0)
                for (auto& d : v) d = -d;
            break;
        }
    }
    return v;
}

} // namespace

ProjPoint::ProjPoint(std::vector<Int> coords)
    : coords_(normalize_coords(std::move(coords))) {}

ProjPoint::ProjPoint(std::vector<Rat> coords) {
    if (coords.empty()) throw ZeroInput("ProjPoint: no coordinates");
    Int lcm(1);
    for (const auto& c : coords) {
        Int den = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Int> scaled;
    scaled.reserve(coords.size());
    for (const auto& c : coords) {
        Rat s = c * Rat(lcm);
        s.canonicalize();
        scaled.push_back(s.get_num());
    }
    coords_ = normalize_coords(std::move(scaled));
}

ProjPoint ProjPoint::p1(const Rat& x) {
    return ProjPoint(std::vector<Int>{x.get_num(), x.get_den()});
}

ProjPoint ProjPoint::p1_infinity() {
    return ProjPoint(std::vector<Int>{Int(1), Int(0)});
}

bool ProjPoint::is_p1_infinity() const {
    return coords_.size() == 2 && coords_[1] == 0;
}

Rat ProjPoint::to_rat() const {
    if (coords_.size() != 2)
        throw UnsupportedRegime("ProjPoint::to_rat: not a point of P^1");
    if (coords_[1] == 0)
        throw UnsupportedRegime("ProjPoint::to_rat: point at infinity");
    return make_rat(coords_[0], coords_[1]);
}

Int ProjPoint::max_abs() const {
    Int m(0);
    for (const auto& c : coords_) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    if (coords_.size() != o.coords_.size())
        return coords_.size() < o.coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != o.coords_[i]) return coords_[i] < o.coords_[i];
    return false;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << " : ";
        os << coords_[i].get_str();
    }
    os << ")";
    return os.str();
}

//=============================================================================
// Form
//=============================================================================

namespace {

bool exps_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string var_name(std::size_t i) {
    static const char* names[] = {"x", "y", "z", "w"};
    if (i < 4) return names[i];
    return "x" + std::to_string(i);
}

} // namespace

Form::Form(std::size_t nvars, std::vector<Monomial> monomials) : nvars_(nvars) {
    if (nvars_ == 0) throw UsageError("Form: need at least one variable");
    for (auto& m : monomials) {
        if (m.exps.size() != nvars_)
            throw UsageError("Form: exponent vector length mismatch");
    }
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) {
                  return exps_less(a.exps, b.exps);
              });
    // merge duplicates, drop zeros
    monomials_.clear();
    for (auto& m : monomials) {
        if (!monomials_.empty() && monomials_.back().exps == m.exps)
            monomials_.back().coeff += m.coeff;
        else
            monomials_.push_back(std::move(m));
    }
    monomials_.erase(std::remove_if(monomials_.begin(), monomials_.end(),
                                    [](const Monomial& m) { return m.coeff == 0; }),
                     monomials_.end());
    if (monomials_.empty()) throw ZeroInput("Form: zero form");

    unsigned deg = 0;
    for (unsigned e : monomials_.front().exps) deg += e;
    degree_ = deg;
    for (const auto& m : monomials_) {
        unsigned d = 0;
        for (unsigned e : m.exps) d += e;
        if (d != degree_) throw UsageError("Form: inhomogeneous monomials");
    }

    std::vector<Int> cs;
    cs.reserve(monomials_.size());
    for (const auto& m : monomials_) cs.push_back(m.coeff);
    Int g = vector_gcd(cs);
    if (g > 1)
        for (auto& m : monomials_) m.coeff /= g;
}

Form Form::linear(const std::vector<Int>& coeffs) {
    std::vector<Monomial> ms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::vector<unsigned> e(coeffs.size(), 0);
        e[i] = 1;
        ms.push_back({coeffs[i], std::move(e)});
    }
    return Form(coeffs.size(), std::move(ms));
}

Form Form::vanishing_at(const ProjPoint& p) {
    if (p.size() != 2)
        throw UsageError("Form::vanishing_at: divisor points live on P^1");
    return linear({p[1], -p[0]});
}

Form Form::from_biform(const BiForm& f) {
    std::vector<Monomial> ms;
    unsigned d = f.degree();
    for (unsigned i = 0; i <= d; ++i) {
        if (f[i] == 0) continue;
        ms.push_back({f[i], {i, d - i}});
    }
    return Form(2, std::move(ms));
}

Int Form::max_abs_coeff() const {
    Int m(0);
    for (const auto& t : monomials_) {
        Int a = abs(t.coeff);
        if (a > m) m = a;
    }
    return m;
}

Int Form::eval(const std::vector<Int>& x) const {
    if (x.size() != nvars_) throw UsageError("Form::eval: dimension mismatch");
    Int total(0);
    for (const auto& m : monomials_) {
        Int term = m.coeff;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < m.exps[i]; ++k) term *= x[i];
        total += term;
    }
    return total;
}

Form Form::operator*(const Form& o) const {
    if (nvars_ != o.nvars_) throw UsageError("Form::operator*: dimension mismatch");
    std::vector<Monomial> ms;
    ms.reserve(monomials_.size() * o.monomials_.size());
    for (const auto& a : monomials_)
        for (const auto& b : o.monomials_) {
            std::vector<unsigned> e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = a.exps[i] + b.exps[i];
            ms.push_back({a.coeff * b.coeff, std::move(e)});
        }
    return Form(nvars_, std::move(ms));
}

bool Form::operator==(const Form& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_ ||
        monomials_.size() != o.monomials_.size())
        return false;
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        if (monomials_[i].coeff != o.monomials_[i].coeff ||
            monomials_[i].exps != o.monomials_[i].exps)
            return false;
    return true;
}

std::string Form::str() const {
    std::ostringstream os;
    bool first = true;
    // display in reverse lexicographic order so x-leading terms come first
    for (auto it = monomials_.rbegin(); it != monomials_.rend(); ++it) {
        const Monomial& m = *it;
        Int a = abs(m.coeff);
        if (first) {
            if (m.coeff < 0) os << "-";
            first = false;
        } else {
            os << (m.coeff < 0 ? " - " : " + ");
        }
        bool coeff_shown = false;
        if (a != 1) {
            os << a.get_str();
            coeff_shown = true;
        }
        bool any_var = false;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m.exps[i] == 0) continue;
            any_var = true;
            os << var_name(i);
            if (m.exps[i] > 1) os << "^" << m.exps[i];
        }
        if (!any_var && !coeff_shown) os << "1";
    }
    return os.str();
}

} // namespace wirsing
