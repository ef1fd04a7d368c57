#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lahlab/poly.hpp"

namespace lahlab {

struct IdentityReport {
    std::string id;
    std::vector<long> params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

// Off-diagonal double Lah sum; 0 for n != m. n = m is a usage error.
Int lah_orthogonality_offdiag(unsigned n, unsigned m);

// Diagonal double Lah sum; equals (n!)^2/n.
Rational lah_orthogonality_diag(unsigned n);

// Todorov-Charalambides identity as polynomials in z:
// (m!/n!) sum_k s(n,k) S(k,m) z^k  vs  (-1)^m sum_j C(m,j)(-1)^j C(jz, n).
std::pair<Poly, Poly> todorov_charalambides(unsigned n, unsigned m);

// Both sides at z = -1 against (-1)^n (m!/n!) L(n,m).
IdentityReport todorov_specialization_z_minus1(unsigned n, unsigned m);

// sum_j C(m,j)(-1)^j C(y+j, n) vs (-1)^m C(y, n-m), as polynomials in y.
std::pair<Poly, Poly> gould_identity(unsigned m, unsigned n);

// sum_k L(n,k) x^k vs (-1)^n sum_j s(n,j)(-1)^j phi_j(x).
std::pair<Poly, Poly> lah_expbell_identity(unsigned n);

// L_n^{(-1)}(x) vs ((-1)^n/n!) sum_j s(n,j)(-1)^j phi_j(-x).
std::pair<Poly, Poly> laguerre_expbell_identity(unsigned n);

enum class Suite {
    All,
    Orthogonality,
    Todorov,
    Gould,
    Gf,
    Derivatives,
    Expbell,
};

// Every identity check plus the cross-module invariants, one report per
// (identity, parameters), deterministically ordered. The parallel runner
// executes the same task list with OpenMP into preallocated slots and must
// produce reports identical to the serial reference.
std::vector<IdentityReport> run_suite(unsigned nmax, Suite suite = Suite::All,
                                      bool parallel = true);
std::vector<IdentityReport> run_suite_serial(unsigned nmax, Suite suite = Suite::All);

}  // namespace lahlab
