#include "lahlab/gf_checks.hpp"

#include "lahlab/triangles.hpp"

namespace lahlab {

TruncSeries<Rational> geometric(std::size_t N) {
    TruncSeries<Rational> s(N);
    for (std::size_t i = 0; i <= N; ++i) s.set_coeff(i, 1);
    return s;
}

LahGfResult lah_column_gf_check(std::size_t k, std::size_t N) {
    // t/(1-t) = t + t^2 + ... + t^N
    TruncSeries<Rational> base(N);
    for (std::size_t i = 1; i <= N; ++i) base.set_coeff(i, 1);
    TruncSeries<Rational> pow(N);
    pow.set_coeff(0, 1);
    for (std::size_t i = 0; i < k; ++i) pow = pow * base;
    const Rational inv_kf = make_rational(1, factorial(k));

    LahGfResult r{true, {}, {}};
    for (std::size_t n = 0; n <= N; ++n) {
        Rational v = pow.coeff(n) * inv_kf * Rational(factorial(n));
        r.extracted.push_back(v.get_num());
        r.expected.push_back(lah(n, k));
        if (v.get_den() != 1 || v.get_num() != r.expected.back()) r.pass = false;
    }
    return r;
}

PolyGfResult laguerre_m1_gf_check(std::size_t N) {
    // u = -x (t + t^2 + ... + t^N)
    TruncSeries<Poly> u(N);
    const Poly minus_x = Poly::monomial(1, Rational(-1));
    for (std::size_t i = 1; i <= N; ++i) u.set_coeff(i, minus_x);
    const auto e = series_exp(u);

    PolyGfResult r{true, {}, {}};
    for (std::size_t n = 0; n <= N; ++n) {
        r.extracted.push_back(e.coeff(n));
        r.expected.push_back(laguerre(-1, static_cast<unsigned>(n)));
        if (!(r.extracted.back() == r.expected.back())) r.pass = false;
    }
    return r;
}

PolyGfResult bell_gf_check(std::size_t N) {
    // u = x (e^t - 1): coefficient of t^i is x/i!
    TruncSeries<Poly> u(N);
    for (std::size_t i = 1; i <= N; ++i)
        u.set_coeff(i, Poly::monomial(1, make_rational(1, factorial(i))));
    const auto e = series_exp(u);

    PolyGfResult r{true, {}, {}};
    for (std::size_t n = 0; n <= N; ++n) {
        r.extracted.push_back(e.coeff(n) * Rational(factorial(n)));
        r.expected.push_back(bell_poly(static_cast<unsigned>(n)));
        if (!(r.extracted.back() == r.expected.back())) r.pass = false;
    }
    return r;
}

}  // namespace lahlab
