#include <doctest.h>

#include "lahlab/derivatives.hpp"
#include "lahlab/triangles.hpp"

using namespace lahlab;

namespace {
std::vector<Rational> rvec(std::initializer_list<Rational> v) { return v; }
}  // namespace

TEST_CASE("lah form small orders") {
    CHECK(derive_via_lah(0).coeffs == rvec({1}));
    CHECK(derive_via_lah(1).coeffs == rvec({0, -1}));
    CHECK(derive_via_lah(2).coeffs == rvec({0, 2, 1}));
}

TEST_CASE("laguerre form small orders") {
    CHECK(derive_via_laguerre(0).coeffs == rvec({1}));
    CHECK(derive_via_laguerre(1).coeffs == rvec({0, -1}));
    CHECK(derive_via_laguerre(2).coeffs == rvec({0, 2, 1}));
}

TEST_CASE("schwatt form") {
    CHECK(derive_via_schwatt(1, 1, -1).coeffs == rvec({0, -1}));
    CHECK(derive_via_schwatt(2, 1, -1).coeffs == rvec({0, 2, 1}));
    // D^2 e^{x^2} = e^{x^2}(2 + 4x^2) = e^{x^2} x^{-2}(2x^2 + 4x^4)
    CHECK(derive_via_schwatt(2, 1, 2).coeffs == rvec({0, 2, 4}));
    CHECK_THROWS_AS(derive_via_schwatt(2, 1, 0), std::domain_error);
}

TEST_CASE("exponential polynomial form") {
    CHECK(derive_via_exppoly(1, 1, -1).coeffs == rvec({0, -1}));
    CHECK(derive_via_exppoly(2, 1, -1).coeffs == rvec({0, 2, 1}));
    CHECK(derive_via_exppoly(2, 1, make_rational(1, 2)).coeffs ==
          derive_via_schwatt(2, 1, make_rational(1, 2)).coeffs);
    CHECK_THROWS_AS(derive_via_exppoly(1, 1, 0), std::domain_error);
}

TEST_CASE("four-way agreement for D^n e^{1/x}") {
    for (unsigned n = 0; n <= 15; ++n) {
        const auto a = derive_via_lah(n);
        CHECK(a.coeffs == derive_via_laguerre(n).coeffs);
        CHECK(a.coeffs == derive_via_schwatt(n, 1, -1).coeffs);
        CHECK(a.coeffs == derive_via_exppoly(n, 1, -1).coeffs);
    }
}

TEST_CASE("schwatt vs exppoly over the parameter grid") {
    const Rational cs[] = {Rational(1), Rational(-1), Rational(2),
                           make_rational(1, 2), make_rational(-3, 2)};
    const Rational ps[] = {Rational(-1), Rational(1), Rational(2), Rational(-2),
                           make_rational(1, 2)};
    for (const auto& c : cs)
        for (const auto& p : ps)
            for (unsigned n = 0; n <= 10; ++n)
                CHECK(derive_via_schwatt(n, c, p).coeffs ==
                      derive_via_exppoly(n, c, p).coeffs);
}

TEST_CASE("zero low coefficient when lambda = 0") {
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(derive_via_lah(n).coeffs[0] == 0);
        CHECK(derive_via_laguerre(n).coeffs[0] == 0);
        CHECK(derive_via_schwatt(n, 2, 3).coeffs[0] == 0);
        CHECK(derive_via_exppoly(n, make_rational(1, 2), -2).coeffs[0] == 0);
        CHECK(derive_brychkov(n, 0, 5).coeffs[0] == 0);
    }
}

TEST_CASE("taylor oracle spot values") {
    DerivSpec s1{1, 1, -1, 0};
    CHECK(taylor_oracle(s1, 1) == -1);
    DerivSpec s2{2, 1, -1, 0};
    CHECK(taylor_oracle(s2, 1) == 3);
    CHECK_THROWS_AS(taylor_oracle(DerivSpec{2, 1, make_rational(1, 2), 0}, 2),
                    std::domain_error);
}

TEST_CASE("evaluate_form spot values") {
    CHECK(evaluate_form(derive_via_lah(1), 2) == make_rational(-1, 4));
    CHECK(evaluate_form(derive_via_lah(0), make_rational(7, 5)) == 1);
    CHECK(evaluate_form(derive_via_lah(2), 1) == 3);
}

TEST_CASE("oracle agrees with evaluated closed forms") {
    const Rational cs[] = {Rational(1), Rational(-1), make_rational(1, 2)};
    const Rational ps[] = {Rational(-2), Rational(-1), Rational(1), Rational(2),
                           Rational(3)};
    const Rational x0s[] = {Rational(1), make_rational(1, 2), Rational(2),
                            make_rational(3, 4)};
    for (const auto& c : cs)
        for (const auto& p : ps)
            for (const auto& x0 : x0s)
                for (unsigned n = 0; n <= 12; ++n) {
                    const auto form = derive_via_schwatt(n, c, p);
                    CHECK(evaluate_form(form, x0) == taylor_oracle(form.spec, x0));
                }
    // p = 1/2 at exact squares
    const Rational sq[] = {Rational(1), Rational(4), make_rational(9, 4)};
    for (const auto& c : cs)
        for (const auto& x0 : sq)
            for (unsigned n = 0; n <= 12; ++n) {
                const auto form = derive_via_schwatt(n, c, make_rational(1, 2));
                CHECK(evaluate_form(form, x0) == taylor_oracle(form.spec, x0));
            }
}

TEST_CASE("brychkov reduces to the lah form at lambda=0, a=-1") {
    CHECK(derive_brychkov(2, 0, -1).coeffs == rvec({0, 2, 1}));
    CHECK(derive_brychkov(0, 0, -1).coeffs == rvec({1}));
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(derive_brychkov(n, 0, -1).coeffs == derive_via_lah(n).coeffs);
}

TEST_CASE("brychkov general case by hand: D[x e^{1/x}]") {
    // = e^{1/x}(1 - 1/x): coefficients (1, -1) over x^{lambda-n} x^{-k}
    CHECK(derive_brychkov(1, 1, -1).coeffs == rvec({1, -1}));
}

TEST_CASE("brychkov matches a Leibniz expansion") {
    // D^n[x^l g] = sum_j C(n,j) falling(l,j) x^{l-j} D^{n-j}g with
    // g = e^{-a/x}; collect the x^{-k} slot of the combined canonical form.
    const long lambdas[] = {0, 1, 2};
    const Rational as[] = {Rational(-1), Rational(1), Rational(2)};
    for (long lam : lambdas)
        for (const auto& a : as)
            for (unsigned n = 0; n <= 8; ++n) {
                const auto got = derive_brychkov(n, Rational(lam), a);
                std::vector<Rational> want(n + 1, Rational(0));
                for (unsigned j = 0; j <= n; ++j) {
                    const Rational w =
                        Rational(binomial(n, j)) * falling(Rational(lam), j);
                    if (w == 0) continue;
                    const auto g = derive_via_schwatt(n - j, -a, -1);
                    for (unsigned k = 0; k <= n - j; ++k)
                        want[k] += w * g.coeffs[k];
                }
                CHECK(got.coeffs == want);
            }
}

TEST_CASE("taylor oracle handles the x^lambda prefactor") {
    // D[x e^{1/x}] at x0 = 2, stripped of e^{1/2}: 1 - 1/2 = 1/2
    DerivSpec s{1, 1, -1, 1};
    CHECK(taylor_oracle(s, 2) == make_rational(1, 2));
    CHECK(evaluate_form(derive_brychkov(1, 1, -1), 2) == make_rational(1, 2));
    for (unsigned n = 0; n <= 8; ++n) {
        const auto form = derive_brychkov(n, 2, make_rational(1, 2));
        DerivSpec spec = form.spec;
        const Rational x0 = make_rational(3, 2);
        CHECK(evaluate_form(form, x0) == taylor_oracle(spec, x0));
    }
}
