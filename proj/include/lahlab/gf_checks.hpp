#pragma once

#include <cstddef>
#include <vector>

#include "lahlab/poly.hpp"
#include "lahlab/series.hpp"

namespace lahlab {

// (1/k!)(t/(1-t))^k column generating function against the Lah triangle:
// n! [t^n] must equal L(n,k) for k <= n <= N.
struct LahGfResult {
    bool pass;
    std::vector<Int> extracted;  // n! [t^n] for n = 0..N
    std::vector<Int> expected;   // L(n,k)
};
LahGfResult lah_column_gf_check(std::size_t k, std::size_t N);

struct PolyGfResult {
    bool pass;
    std::vector<Poly> extracted;
    std::vector<Poly> expected;
};

// exp(-xt/(1-t)) against laguerre(-1, n), coefficients as Poly in x.
PolyGfResult laguerre_m1_gf_check(std::size_t N);

// exp(x(e^t - 1)): n! [t^n] against bell_poly(n).
PolyGfResult bell_gf_check(std::size_t N);

}  // namespace lahlab
