#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lahlab/exact.hpp"

namespace lahlab {

// Truncated formal power series in t to a fixed order N, coefficients in a
// ring R (Rational or Poly). Arithmetic never reads or writes past t^N.
// R must be constructible from int, support +, *, and * by Rational.
template <typename R>
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order)
        : order_(order), c_(order + 1, R(0)) {}

    std::size_t order() const { return order_; }
    const R& coeff(std::size_t i) const { return c_.at(i); }
    void set_coeff(std::size_t i, R v) { c_.at(i) = std::move(v); }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries r(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries r(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    // Cauchy product truncated at N.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries r(a.order_);
        for (std::size_t i = 0; i <= a.order_; ++i)
            for (std::size_t j = 0; i + j <= a.order_; ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        return r;
    }

private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b) {
        if (a.order_ != b.order_)
            throw std::invalid_argument("TruncSeries: order mismatch");
    }

    std::size_t order_;
    std::vector<R> c_;
};

// 1/(1-t) = 1 + t + ... + t^N.
TruncSeries<Rational> geometric(std::size_t N);

// exp of a series with zero constant term, via the coefficient recurrence
// b_m = (1/m) sum_{k=1}^{m} k a_k b_{m-k}.
template <typename R>
TruncSeries<R> series_exp(const TruncSeries<R>& a) {
    if (!(a.coeff(0) == R(0)))
        throw std::domain_error("series_exp: nonzero constant term");
    const std::size_t N = a.order();
    TruncSeries<R> b(N);
    b.set_coeff(0, R(1));
    for (std::size_t m = 1; m <= N; ++m) {
        R acc(0);
        for (std::size_t k = 1; k <= m; ++k)
            acc = acc + a.coeff(k) * b.coeff(m - k) *
                            Rational(static_cast<long>(k));
        b.set_coeff(m, acc * make_rational(1, static_cast<long>(m)));
    }
    return b;
}

// exp by direct power summation sum_k a^k/k!; the O(N^3) cross-check of
// series_exp.
template <typename R>
TruncSeries<R> series_exp_powers(const TruncSeries<R>& a) {
    if (!(a.coeff(0) == R(0)))
        throw std::domain_error("series_exp_powers: nonzero constant term");
    const std::size_t N = a.order();
    TruncSeries<R> sum(N), pow(N);
    pow.set_coeff(0, R(1));
    sum.set_coeff(0, R(1));
    for (std::size_t k = 1; k <= N; ++k) {
        pow = pow * a;
        TruncSeries<R> term(N);
        const Rational inv = make_rational(1, factorial(k));
        for (std::size_t i = 0; i <= N; ++i) term.set_coeff(i, pow.coeff(i) * inv);
        sum = sum + term;
    }
    return sum;
}

}  // namespace lahlab
