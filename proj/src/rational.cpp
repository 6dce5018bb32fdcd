#include "wirsing/rational.hpp"

#include <algorithm>
#include <map>

namespace wirsing {

Rat make_rat(const Int& a, const Int& b) {
    if (b == 0) throw ZeroInput("make_rat: zero denominator");
    Rat r(a, b);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw UsageError("parse_rat: cannot parse '" + s + "'");
    }
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw ZeroInput("valuation: v_p(0) undefined");
    if (!is_prime(p)) throw NotPrime("valuation: modulus " + p.get_str() + " not prime");
    mpz_class rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& x, const Int& p) {
    if (x == 0) throw ZeroInput("valuation: v_p(0) undefined");
    return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

Int pow_int(const Int& x, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& x, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (x == 0) throw ZeroInput("pow_rat: 0^negative");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
    r.canonicalize();
    return r;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n_in) {
    if (n_in == 0) throw ZeroInput("factorize: 0 has no factorization");
    Int n = abs(n_in);
    std::map<Int, unsigned> acc;

    // trial division by 2, then odd numbers (covers all primes < 10^4)
    for (Int p = 2; p * p <= n && p < 10000; p = (p == 2 ? Int(3) : Int(p + 2))) {
        while (n % p == 0) { acc[p]++; n /= p; }
    }

    // recursive rho splitting for the remainder
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(20260815ul);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) { acc[m]++; continue; }
        // Brent's variant of Pollard rho
        Int d = m;
        while (d == m) {
            Int y = rng.get_z_range(m - 3) + 2;
            Int c = rng.get_z_range(m - 1) + 1;
            Int x = y, q = 1;
            long r = 1;
            d = 1;
            Int ys = y;
            while (d == 1) {
                x = y;
                for (long i = 0; i < r; ++i) y = (y * y + c) % m;
                long k = 0;
                while (k < r && d == 1) {
                    ys = y;
                    long lim = std::min<long>(128, r - k);
                    for (long i = 0; i < lim; ++i) {
                        y = (y * y + c) % m;
                        q = q * abs(Int(x - y)) % m;
                    }
                    d = gcd(q, m);
                    k += lim;
                }
                r *= 2;
            }
            if (d == m) {
                d = 1;
                while (d == 1) {
                    ys = (ys * ys + c) % m;
                    d = gcd(abs(Int(x - ys)), m);
                }
            }
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }

    return {acc.begin(), acc.end()};
}

std::vector<Int> support(const Rat& x) {
    if (x == 0) throw ZeroInput("support: 0 has no support");
    std::map<Int, unsigned> acc;
    for (const auto& [p, e] : factorize(Int(x.get_num()))) acc[p] += e;
    for (const auto& [p, e] : factorize(Int(x.get_den()))) acc[p] += e;
    std::vector<Int> out;
    for (const auto& [p, e] : acc) out.push_back(p);
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int vector_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

} // namespace wirsing
