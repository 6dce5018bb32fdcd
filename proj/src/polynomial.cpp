#include "wirsing/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "wirsing/linalg.hpp"

namespace wirsing {

//------------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Int& c, unsigned i) {
    std::vector<Int> v(i + 1, Int(0));
    v[i] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::operator[](size_t i) const {
    static const Int zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw ZeroInput("IntPoly::leading: zero polynomial");
    return c_.back();
}

Int IntPoly::content() const {
    return vector_gcd(c_);
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return *this;
    Int g = content();
    std::vector<Int> v = c_;
    for (auto& x : v) x /= g;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

Int IntPoly::eval_homog(const Int& a, const Int& b) const {
    if (is_zero()) return 0;
    const int d = degree();
    Int acc(0);
    for (int i = 0; i <= d; ++i)
        acc += c_[i] * pow_int(a, i) * pow_int(b, static_cast<unsigned>(d - i));
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (o * Int(-1)); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& c) const {
    std::vector<Int> v = c_;
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const IntPoly& o) const {
    if (o.is_zero()) throw ZeroInput("IntPoly::divide_exact: division by zero");
    QPoly q(*this), d(o);
    auto [quot, rem] = q.divmod(d);
    if (!rem.is_zero()) throw ZeroInput("IntPoly::divide_exact: not divisible");
    // quotient must be integral here
    std::vector<Int> v(quot.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        const Rat& c = quot[i];
        if (c.get_den() != 1) throw ZeroInput("IntPoly::divide_exact: non-integral quotient");
        v[i] = c.get_num();
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    QPoly x(a.primitive()), y(b.primitive());
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return IntPoly();
    IntPoly g = x.primitive_int();
    if (g.leading() < 0) g = -g;
    return g;
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& o) const {
    if (c_.size() != o.c_.size())
        return c_.size() <=> o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << f.str(); }

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroInput("resultant: zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0) return pow_int(f.leading(), n);
    if (n == 0) return pow_int(g.leading(), m);
    Mat S(m + n, Vec(m + n, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S[r][r + (m - i)] = f[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S[n + r][r + (n - i)] = g[i];
    return bareiss_det(S);
}

//--------------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(const IntPoly& f) {
    c_.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c_.emplace_back(x);
}

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::operator[](size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (o * Rat(-1)); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& c) const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= c;
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& o) const {
    if (o.is_zero()) throw ZeroInput("QPoly::divmod: division by zero");
    std::vector<Rat> rem = c_;
    const int dn = o.degree();
    const Rat& lead = o.c_.back();
    if (static_cast<int>(rem.size()) - 1 < dn) return {QPoly(), *this};
    std::vector<Rat> quot(rem.size() - dn, Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dn; --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] / lead;
        quot[i - dn] = q;
        for (int j = 0; j <= dn; ++j) rem[i - dn + j] -= q * o[j];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

IntPoly QPoly::primitive_int() const {
    if (is_zero()) return IntPoly();
    Int den_lcm(1);
    for (const auto& x : c_) den_lcm = lcm(den_lcm, x.get_den());
    std::vector<Int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = Int(c_[i] * Rat(den_lcm));
    IntPoly f{std::move(v)};
    f = f.primitive();
    if (f.leading() < 0) f = -f;
    return f;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

//------------------------------------------------ number-field arithmetic

QPoly nf_reduce(const QPoly& a, const IntPoly& f) {
    return a.divmod(QPoly(f)).second;
}

QPoly nf_mul(const QPoly& a, const QPoly& b, const IntPoly& f) {
    return nf_reduce(a * b, f);
}

QPoly nf_inv(const QPoly& a, const IntPoly& f) {
    QPoly r = nf_reduce(a, f);
    if (r.is_zero()) throw ZeroInput("nf_inv: zero element");
    // extended Euclid: maintain s with s * a = r (mod f)
    QPoly r0(f), r1 = r;
    QPoly s0, s1({Rat(1)});
    while (!r1.is_zero()) {
        auto [q, rem] = r0.divmod(r1);
        QPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd = nonzero constant (f irreducible, a nonzero mod f)
    if (r0.degree() != 0)
        throw ZeroInput("nf_inv: modulus not irreducible or element not invertible");
    return nf_reduce(s0 * (Rat(1) / r0[0]), f);
}

//-------------------------------------------------------------------- BiForm

BiForm::BiForm(unsigned d, std::vector<Int> coeffs) : d_(d), c_(std::move(coeffs)) {
    if (c_.size() != d_ + 1) throw UsageError("BiForm: coefficient count must be degree + 1");
}

BiForm BiForm::from_point(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw ZeroInput("BiForm::from_point: (0,0) is not a point");
    return BiForm(1, {-a, b});  // b x - a y
}

BiForm BiForm::homogenize(const IntPoly& f, unsigned d) {
    if (f.degree() > static_cast<int>(d)) throw UsageError("BiForm::homogenize: degree too small");
    std::vector<Int> v(d + 1, Int(0));
    for (int i = 0; i <= f.degree(); ++i) v[i] = f[i];
    return BiForm(d, std::move(v));
}

bool BiForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

Int BiForm::eval(const Int& a, const Int& b) const {
    Int acc(0);
    for (unsigned i = 0; i <= d_; ++i) acc += c_[i] * pow_int(a, i) * pow_int(b, d_ - i);
    return acc;
}

BiForm BiForm::operator*(const BiForm& o) const {
    std::vector<Int> v(d_ + o.d_ + 1, Int(0));
    for (unsigned i = 0; i <= d_; ++i)
        for (unsigned j = 0; j <= o.d_; ++j) v[i + j] += c_[i] * o.c_[j];
    return BiForm(d_ + o.d_, std::move(v));
}

BiForm BiForm::operator*(const Int& c) const {
    std::vector<Int> v = c_;
    for (auto& x : v) x *= c;
    return BiForm(d_, std::move(v));
}

BiForm BiForm::operator+(const BiForm& o) const {
    if (d_ != o.d_) throw UsageError("BiForm::operator+: degree mismatch");
    std::vector<Int> v = c_;
    for (unsigned i = 0; i <= d_; ++i) v[i] += o.c_[i];
    return BiForm(d_, std::move(v));
}

BiForm BiForm::compose(const Int& m00, const Int& m01, const Int& m10, const Int& m11) const {
    // F(m00 x + m01 y, m10 x + m11 y), expanded by binomials
    std::vector<Int> acc(d_ + 1, Int(0));
    // powers of (m00 x + m01 y) and (m10 x + m11 y)
    auto powers = [&](const Int& u, const Int& v) {
        std::vector<std::vector<Int>> pw(d_ + 1);
        pw[0] = {Int(1)};
        for (unsigned k = 1; k <= d_; ++k) {
            pw[k].assign(k + 1, Int(0));
            for (unsigned j = 0; j < k; ++j) {
                pw[k][j + 1] += pw[k - 1][j] * u;  // times u*x
                pw[k][j] += pw[k - 1][j] * v;      // times v*y
            }
        }
        return pw;
    };
    auto px = powers(m00, m01);
    auto py = powers(m10, m11);
    for (unsigned i = 0; i <= d_; ++i) {
        if (c_[i] == 0) continue;
        const auto& A = px[i];       // degree-i form in (x, y)
        const auto& B = py[d_ - i];  // degree-(d-i) form
        for (size_t a = 0; a < A.size(); ++a)
            for (size_t b = 0; b < B.size(); ++b) acc[a + b] += c_[i] * A[a] * B[b];
    }
    return BiForm(d_, std::move(acc));
}

Int BiForm::content() const { return vector_gcd(c_); }

BiForm BiForm::primitive() const {
    if (is_zero()) return *this;
    Int g = content();
    std::vector<Int> v = c_;
    for (auto& x : v) x /= g;
    return BiForm(d_, std::move(v));
}

IntPoly BiForm::dehomogenize() const { return IntPoly(c_); }

unsigned BiForm::infinity_multiplicity() const {
    if (is_zero()) throw ZeroInput("BiForm::infinity_multiplicity: zero form");
    return d_ - static_cast<unsigned>(dehomogenize().degree());
}

std::string BiForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        unsigned ey = d_ - static_cast<unsigned>(i);
        if (mag != 1 || (i == 0 && ey == 0)) os << mag.get_str();
        if (i >= 1) {
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        if (ey >= 1) {
            os << "y";
            if (ey >= 2) os << "^" << ey;
        }
        first = false;
    }
    return os.str();
}

} // namespace wirsing
