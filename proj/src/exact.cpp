#include "lahlab/exact.hpp"

#include <stdexcept>

namespace lahlab {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Rational gen_binomial(const Rational& x, unsigned long n) {
    return falling(x, n) / Rational(factorial(n));
}

Rational rising(const Rational& x, unsigned long n) {
    Rational r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= x + Rational(static_cast<long>(i));
    return r;
}

Rational falling(const Rational& x, unsigned long n) {
    Rational r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= x - Rational(static_cast<long>(i));
    return r;
}

Rational pow_int(const Rational& x, long e) {
    if (e == 0) return 1;
    if (x == 0) {
        if (e < 0) throw std::domain_error("pow_int: 0 to negative power");
        return 0;
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), a);
    return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

namespace {

// Exact q-th root of z, or nullopt.
std::optional<Int> exact_root(const Int& z, unsigned long q) {
    if (q == 1) return z;
    if (z < 0 && q % 2 == 0) return std::nullopt;
    Int r;
    const int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), q);
    if (!exact) return std::nullopt;
    return r;
}

}  // namespace

std::optional<Rational> pow_exact(const Rational& x, const Rational& p) {
    if (p.get_den() == 1) {
        if (!p.get_num().fits_slong_p())
            throw std::invalid_argument("pow_exact: exponent too large");
        if (x == 0 && p < 0) return std::nullopt;
        return pow_int(x, p.get_num().get_si());
    }
    if (x == 0) return p > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    const unsigned long q = p.get_den().get_ui();
    auto rn = exact_root(x.get_num(), q);
    auto rd = exact_root(x.get_den(), q);
    if (!rn || !rd) return std::nullopt;
    if (!p.get_num().fits_slong_p())
        throw std::invalid_argument("pow_exact: exponent too large");
    return pow_int(make_rational(*rn, *rd), p.get_num().get_si());
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rational(n);
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos)
            return std::nullopt;
        Int n(num), d(den);
        if (d == 0) return std::nullopt;
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace lahlab
