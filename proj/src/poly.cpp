#include "lahlab/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "lahlab/triangles.hpp"

namespace lahlab {

Poly::Poly(const Rational& v) {
    if (v != 0) c_.push_back(v);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(std::size_t k, const Rational& a) {
    if (a == 0) return Poly();
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = a;
    return Poly(std::move(c));
}

Rational Poly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Rational& s) {
    if (s == 0) return Poly();
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x0) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x0 + *it;
    return r;
}

Poly Poly::scaled_arg(const Rational& s) const {
    std::vector<Rational> c = c_;
    Rational sk = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
        sk *= s;
        c[i] *= sk;
    }
    return Poly(std::move(c));
}

std::string Poly::coeff_list() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(c_[i]);
    }
    return os.str();
}

std::string Poly::pretty() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j] == 0) continue;
        Rational a = c_[j];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (j == 0 || a != 1) {
            os << to_string(a);
            if (j > 0) os << "*";
        }
        if (j >= 1) {
            os << "x";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

Poly laguerre(const Rational& alpha, unsigned n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) {
        Rational prod = 1;
        for (unsigned i = k + 1; i <= n; ++i)
            prod *= alpha + Rational(static_cast<long>(i));
        Rational coeff = prod / Rational(factorial(k) * factorial(n - k));
        if (k % 2 == 1) coeff = -coeff;
        c[k] = coeff;
    }
    return Poly(std::move(c));
}

Poly laguerre_m1_lah(unsigned n) {
    std::vector<Rational> c(n + 1, Rational(0));
    const Rational inv_nf = make_rational(1, factorial(n));
    for (unsigned k = 0; k <= n; ++k) {
        Rational coeff = Rational(lah(n, k)) * inv_nf;
        if (k % 2 == 1) coeff = -coeff;
        c[k] = coeff;
    }
    return Poly(std::move(c));
}

Poly laguerre_rodriguez(long alpha, unsigned n) {
    if (alpha != -1 && alpha != 0)
        throw std::domain_error("laguerre_rodriguez: alpha must be -1 or 0");
    if (n == 0) return Poly(1);
    const long m = static_cast<long>(n) + alpha;
    Poly q = Poly::monomial(static_cast<std::size_t>(m));
    for (unsigned i = 0; i < n; ++i) q = q.derivative() - q;
    if (alpha == -1) q = q * Poly::monomial(1);
    return q * make_rational(1, factorial(n));
}

Poly bell_poly(unsigned n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) c[k] = Rational(stirling_second(n, k));
    return Poly(std::move(c));
}

Poly xd_power(unsigned n) {
    Poly p(1);
    const Poly x = Poly::monomial(1);
    for (unsigned i = 0; i < n; ++i) p = x * (p.derivative() + p);
    return p;
}

Poly rising_poly(unsigned n) {
    Poly p(1);
    for (unsigned i = 0; i < n; ++i)
        p = p * Poly(std::vector<Rational>{Rational(static_cast<long>(i)), 1});
    return p;
}

Poly falling_poly(unsigned n) {
    Poly p(1);
    for (unsigned i = 0; i < n; ++i)
        p = p * Poly(std::vector<Rational>{Rational(-static_cast<long>(i)), 1});
    return p;
}

BasisConversion rising_to_falling(unsigned n) {
    BasisConversion r;
    Poly sum;
    for (unsigned k = 1; k <= n; ++k) {
        Int c = lah(n, k);
        r.coeffs.push_back(c);
        sum += Rational(c) * falling_poly(k);
    }
    r.check = (sum == rising_poly(n));
    return r;
}

BasisConversion falling_to_rising(unsigned n) {
    BasisConversion r;
    Poly sum;
    for (unsigned k = 1; k <= n; ++k) {
        Int c = lah(n, k);
        if ((n - k) % 2 == 1) c = -c;
        r.coeffs.push_back(c);
        sum += Rational(c) * rising_poly(k);
    }
    r.check = (sum == falling_poly(n));
    return r;
}

}  // namespace lahlab
