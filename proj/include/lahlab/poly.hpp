#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lahlab/exact.hpp"

namespace lahlab {

// Dense univariate polynomial over Rational, ascending coefficients,
// trailing zeros trimmed (zero polynomial stores nothing).
class Poly {
public:
    Poly() = default;
    Poly(int v) : Poly(Rational(v)) {}  // NOLINT: ring element from scalar
    Poly(const Rational& v);            // NOLINT
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(std::size_t k, const Rational& a = Rational(1));

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Rational eval(const Rational& x0) const;
    // p(s*x): substitute a scaled argument.
    Poly scaled_arg(const Rational& s) const;

    // Ascending coefficient list, e.g. "0, -1, 1, -1/6".
    std::string coeff_list() const;
    // Human-readable form, e.g. "-1/6*x^3 + x^2 - x".
    std::string pretty() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Generalized Laguerre polynomial L_n^(alpha), Gamma-free product form:
// coefficient of (-x)^k is prod_{i=k+1}^{n}(alpha+i) / (k! (n-k)!).
Poly laguerre(const Rational& alpha, unsigned n);

// L_n^(-1) from the Lah triangle: (1/n!) sum_k L(n,k) (-x)^k.
Poly laguerre_m1_lah(unsigned n);

// Operator form x^(-alpha)/n! (D-1)^n x^(n+alpha); alpha in {-1, 0}.
Poly laguerre_rodriguez(long alpha, unsigned n);

// Exponential (Bell) polynomial sum_k S(n,k) x^k.
Poly bell_poly(unsigned n);

// Applies P -> x(P' + P) n times starting from 1; equals bell_poly(n).
Poly xd_power(unsigned n);

Poly rising_poly(unsigned n);
Poly falling_poly(unsigned n);

struct BasisConversion {
    std::vector<Int> coeffs;  // index 0 holds the k=1 coefficient
    bool check;               // expanded-monomial consistency
};

// rising(n) = sum_k L(n,k) falling(k): returns [L(n,1)..L(n,n)].
BasisConversion rising_to_falling(unsigned n);
// falling(n) = sum_k (-1)^(n-k) L(n,k) rising(k).
BasisConversion falling_to_rising(unsigned n);

}  // namespace lahlab
