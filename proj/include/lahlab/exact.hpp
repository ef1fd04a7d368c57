#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lahlab {

// Exact scalars. mpq_class is kept canonical (den > 0, lowest terms) by
// construction through make_rational; raw num/den constructors must not
// escape this header un-canonicalized.
using Int = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Int& num, const Int& den);

Int factorial(unsigned long n);

// C(n,k) with the summation convention: 0 for k < 0 or k > n. n must be >= 0.
Int binomial(long n, long k);

// Generalized binomial coefficient C(x,n) = x(x-1)...(x-n+1)/n!,
// exact for any rational upper argument (no Gamma evaluation).
Rational gen_binomial(const Rational& x, unsigned long n);

// x(x+1)...(x+n-1) and x(x-1)...(x-n+1); both 1 for n = 0.
Rational rising(const Rational& x, unsigned long n);
Rational falling(const Rational& x, unsigned long n);

// x^e for integer e (x != 0 when e < 0).
Rational pow_int(const Rational& x, long e);

// x^p for rational p = s/q: defined only when x has an exact rational
// q-th root. nullopt otherwise.
std::optional<Rational> pow_exact(const Rational& x, const Rational& p);

// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& q);
std::string to_string(const Int& z);

// Accepts integer literals and "p/q" with optional leading minus.
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace lahlab
