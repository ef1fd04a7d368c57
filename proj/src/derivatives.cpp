#include "lahlab/derivatives.hpp"

#include <stdexcept>

#include "lahlab/poly.hpp"
#include "lahlab/series.hpp"
#include "lahlab/triangles.hpp"

namespace lahlab {

namespace {

Rational pow_or_throw(const Rational& x, const Rational& e, const char* what) {
    auto v = pow_exact(x, e);
    if (!v) throw std::domain_error(std::string("not exactly representable: ") + what);
    return *v;
}

// Truncated expansion of (x0+h)^e in h to order N, via the generalized
// binomial series x0^e sum_k C(e,k) (h/x0)^k. Requires x0^e rational.
TruncSeries<Rational> binomial_series(const Rational& x0, const Rational& e,
                                      std::size_t N, const char* what) {
    const Rational x0e = pow_or_throw(x0, e, what);
    TruncSeries<Rational> s(N);
    const Rational inv_x0 = Rational(1) / x0;
    Rational scale = x0e;
    for (std::size_t k = 0; k <= N; ++k) {
        s.set_coeff(k, gen_binomial(e, k) * scale);
        scale *= inv_x0;
    }
    return s;
}

}  // namespace

DerivClosedForm derive_via_lah(unsigned n) {
    DerivClosedForm f{{n, 1, -1, 0}, std::vector<Rational>(n + 1, Rational(0))};
    for (unsigned k = 0; k <= n; ++k) {
        Rational v = Rational(lah(n, k));
        if (n % 2 == 1) v = -v;
        f.coeffs[k] = v;
    }
    return f;
}

DerivClosedForm derive_via_laguerre(unsigned n) {
    const Poly L = laguerre(-1, n);
    DerivClosedForm f{{n, 1, -1, 0}, std::vector<Rational>(n + 1, Rational(0))};
    const Rational nf = Rational(factorial(n));
    for (unsigned k = 0; k <= n; ++k) {
        // L_n^{(-1)}(-1/x): the x^k polynomial coefficient lands in the
        // x^{-k} slot with sign (-1)^k.
        Rational v = nf * L.coeff(k);
        if ((n + k) % 2 == 1) v = -v;
        f.coeffs[k] = v;
    }
    return f;
}

DerivClosedForm derive_via_schwatt(unsigned n, const Rational& c, const Rational& p) {
    if (p == 0) throw std::domain_error("derive_via_schwatt: degenerate p = 0");
    DerivClosedForm f{{n, c, p, 0}, std::vector<Rational>(n + 1, Rational(0))};
    if (n == 0) {
        f.coeffs[0] = 1;
        return f;
    }
    const Rational nf = Rational(factorial(n));
    Rational ck = 1;
    for (unsigned k = 1; k <= n; ++k) {
        ck *= c;
        Rational inner = 0;
        for (unsigned j = 1; j <= k; ++j) {
            Rational term = Rational(binomial(k, j)) *
                            gen_binomial(p * Rational(static_cast<long>(j)), n);
            if (j % 2 == 1) term = -term;
            inner += term;
        }
        Rational v = nf * ck * inner / Rational(factorial(k));
        if (k % 2 == 1) v = -v;
        f.coeffs[k] = v;
    }
    return f;
}

DerivClosedForm derive_via_exppoly(unsigned n, const Rational& c, const Rational& p) {
    if (p == 0) throw std::domain_error("derive_via_exppoly: degenerate p = 0");
    DerivClosedForm f{{n, c, p, 0}, std::vector<Rational>(n + 1, Rational(0))};
    if (n == 0) {
        f.coeffs[0] = 1;
        return f;
    }
    std::vector<Rational> cpow(n + 1);
    cpow[0] = 1;
    for (unsigned k = 1; k <= n; ++k) cpow[k] = cpow[k - 1] * c;
    Rational pj = 1;
    for (unsigned j = 0; j <= n; ++j) {
        const Rational sj = Rational(stirling_first(n, j)) * pj;
        if (sj != 0)
            for (unsigned k = 0; k <= j; ++k)
                f.coeffs[k] += sj * Rational(stirling_second(j, k)) * cpow[k];
        pj *= p;
    }
    return f;
}

DerivClosedForm derive_brychkov(unsigned n, const Rational& lambda, const Rational& a) {
    const Poly L = laguerre(-lambda - 1, n);
    DerivClosedForm f{{n, -a, -1, lambda}, std::vector<Rational>(n + 1, Rational(0))};
    const Rational nf = Rational(factorial(n));
    Rational ak = 1;
    for (unsigned k = 0; k <= n; ++k) {
        Rational v = nf * L.coeff(k) * ak;
        if (n % 2 == 1) v = -v;
        f.coeffs[k] = v;
        ak *= a;
    }
    return f;
}

Rational taylor_oracle(const DerivSpec& spec, const Rational& x0) {
    if (x0 == 0) throw std::domain_error("taylor_oracle: x0 = 0");
    if (spec.p == 0) throw std::domain_error("taylor_oracle: degenerate p = 0");
    const std::size_t N = spec.n;

    // u = c((x0+h)^p - x0^p) has zero constant term.
    TruncSeries<Rational> xp = binomial_series(x0, spec.p, N, "x0^p");
    TruncSeries<Rational> u(N);
    for (std::size_t k = 1; k <= N; ++k) u.set_coeff(k, spec.c * xp.coeff(k));
    TruncSeries<Rational> result = series_exp(u);

    if (spec.lambda != 0)
        result = result * binomial_series(x0, spec.lambda, N, "x0^lambda");

    return result.coeff(N) * Rational(factorial(N));
}

Rational evaluate_form(const DerivClosedForm& form, const Rational& x0) {
    if (x0 == 0) throw std::domain_error("evaluate_form: x0 = 0");
    auto xp = pow_exact(x0, form.spec.p);
    auto pre = pow_exact(x0, form.spec.lambda - Rational(static_cast<long>(form.spec.n)));
    if (!xp || !pre)
        throw std::domain_error("evaluate_form: power not exactly representable");
    Rational sum = 0;
    Rational xpk = 1;
    for (const auto& a : form.coeffs) {
        sum += a * xpk;
        xpk *= *xp;
    }
    return *pre * sum;
}

}  // namespace lahlab
