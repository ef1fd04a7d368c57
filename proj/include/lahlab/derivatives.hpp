#pragma once

#include <vector>

#include "lahlab/exact.hpp"

namespace lahlab {

struct DerivSpec {
    unsigned n = 0;          // derivative order
    Rational c = 1;          // exponential coefficient
    Rational p = -1;         // power inside the exponential (p != 0)
    Rational lambda = 0;     // prefactor power

    friend bool operator==(const DerivSpec& a, const DerivSpec& b) {
        return a.n == b.n && a.c == b.c && a.p == b.p && a.lambda == b.lambda;
    }
};

// Canonical shape D^n[x^lambda e^{c x^p}] = e^{c x^p} x^{lambda-n}
// sum_{k=0}^{n} a_k x^{pk}. coeffs has exactly n+1 entries, zeros kept.
struct DerivClosedForm {
    DerivSpec spec;
    std::vector<Rational> coeffs;

    friend bool operator==(const DerivClosedForm& a, const DerivClosedForm& b) {
        return a.spec == b.spec && a.coeffs == b.coeffs;
    }
};

// D^n e^{1/x} from the Lah triangle: a_k = (-1)^n L(n,k).
DerivClosedForm derive_via_lah(unsigned n);

// D^n e^{1/x} via (-1)^n n! L_n^{(-1)}(-1/x).
DerivClosedForm derive_via_laguerre(unsigned n);

// Schwatt's double sum for D^n e^{c x^p}; p = 0 is rejected as degenerate.
DerivClosedForm derive_via_schwatt(unsigned n, const Rational& c, const Rational& p);

// Exponential-polynomial form: a_k = sum_j s(n,j) p^j S(j,k) c^k.
DerivClosedForm derive_via_exppoly(unsigned n, const Rational& c, const Rational& p);

// D^n[x^lambda e^{-a/x}] = (-1)^n n! e^{-a/x} x^{lambda-n} L_n^{(-lambda-1)}(a/x).
DerivClosedForm derive_brychkov(unsigned n, const Rational& lambda, const Rational& a);

// Exact value of D^n[x^lambda e^{c x^p}](x0) / e^{c x0^p}, computed as
// n! [h^n] of the truncated expansion of (x0+h)^lambda e^{c((x0+h)^p - x0^p)}.
// Independent of the closed forms above. Throws std::domain_error when
// x0^p or x0^lambda is not an exact rational.
Rational taylor_oracle(const DerivSpec& spec, const Rational& x0);

// x0^{lambda-n} sum_k a_k x0^{pk}; same stripping convention as the oracle.
Rational evaluate_form(const DerivClosedForm& form, const Rational& x0);

}  // namespace lahlab
