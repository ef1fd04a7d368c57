#include "lahlab/identities.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "lahlab/derivatives.hpp"
#include "lahlab/gf_checks.hpp"
#include "lahlab/triangles.hpp"

namespace lahlab {

namespace {

std::string vec_str(const std::vector<Rational>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << to_string(v[i]);
    }
    os << ")";
    return os.str();
}

// C(s*z, n) expanded as a polynomial in z: prod_{i=0}^{n-1}(s z - i) / n!.
Poly gen_binomial_poly(const Rational& s, unsigned n) {
    Poly p(1);
    for (unsigned i = 0; i < n; ++i)
        p = p * Poly(std::vector<Rational>{Rational(-static_cast<long>(i)), s});
    return p * make_rational(1, factorial(n));
}

// C(y+j, n) as a polynomial in y.
Poly shifted_binomial_poly(long j, unsigned n) {
    Poly p(1);
    for (unsigned i = 0; i < n; ++i)
        p = p * Poly(std::vector<Rational>{Rational(j - static_cast<long>(i)), 1});
    return p * make_rational(1, factorial(n));
}

}  // namespace

Int lah_orthogonality_offdiag(unsigned n, unsigned m) {
    if (n == m)
        throw std::invalid_argument("lah_orthogonality_offdiag: n = m, use the diagonal");
    if (n < 1 || m < 1)
        throw std::invalid_argument("lah_orthogonality_offdiag: n, m must be >= 1");
    Int sum = 0;
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned j = 1; j <= m; ++j) {
            Int term = lah(n, k) * lah(m, j) * factorial(k + j - 1);
            if ((k + j) % 2 == 1) term = -term;
            sum += term;
        }
    return sum;
}

Rational lah_orthogonality_diag(unsigned n) {
    if (n < 1) throw std::invalid_argument("lah_orthogonality_diag: n must be >= 1");
    Int sum = 0;
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned j = 1; j <= n; ++j) {
            Int term = lah(n, k) * lah(n, j) * factorial(k + j - 1);
            if ((k + j) % 2 == 1) term = -term;
            sum += term;
        }
    return Rational(sum);
}

std::pair<Poly, Poly> todorov_charalambides(unsigned n, unsigned m) {
    std::vector<Rational> lc(n + 1, Rational(0));
    const Rational scale = make_rational(factorial(m), factorial(n));
    for (unsigned k = 0; k <= n; ++k)
        lc[k] = scale * Rational(stirling_first(n, k) * stirling_second(k, m));
    Poly lhs{std::vector<Rational>(lc)};

    Poly rhs;
    for (unsigned j = 0; j <= m; ++j) {
        Poly term = Rational(binomial(m, j)) *
                    gen_binomial_poly(Rational(static_cast<long>(j)), n);
        if (j % 2 == 1) term = term * Rational(-1);
        rhs += term;
    }
    if (m % 2 == 1) rhs = rhs * Rational(-1);
    return {lhs, rhs};
}

IdentityReport todorov_specialization_z_minus1(unsigned n, unsigned m) {
    auto [lhs, rhs] = todorov_charalambides(n, m);
    const Rational lv = lhs.eval(-1);
    const Rational rv = rhs.eval(-1);
    // Both sides at z = -1 must equal (-1)^n (m!/n!) L(n,m).
    Rational expect = make_rational(factorial(m), factorial(n)) * Rational(lah(n, m));
    if (n % 2 == 1) expect = -expect;
    IdentityReport rep;
    rep.id = "todorov_z_minus1";
    rep.params = {static_cast<long>(n), static_cast<long>(m)};
    rep.pass = (lv == rv) && (lv == expect);
    rep.lhs = to_string(lv);
    rep.rhs = to_string(rv) + " [expect " + to_string(expect) + "]";
    return rep;
}

std::pair<Poly, Poly> gould_identity(unsigned m, unsigned n) {
    Poly lhs;
    for (unsigned j = 0; j <= m; ++j) {
        Poly term = Rational(binomial(m, j)) * shifted_binomial_poly(j, n);
        if (j % 2 == 1) term = term * Rational(-1);
        lhs += term;
    }
    Poly rhs;
    if (n >= m) {
        rhs = shifted_binomial_poly(0, n - m);
        if (m % 2 == 1) rhs = rhs * Rational(-1);
    }
    return {lhs, rhs};
}

std::pair<Poly, Poly> lah_expbell_identity(unsigned n) {
    std::vector<Rational> lc(n + 1, Rational(0));
    for (unsigned k = 1; k <= n; ++k) lc[k] = Rational(lah(n, k));
    Poly lhs{std::vector<Rational>(lc)};

    Poly rhs;
    for (unsigned j = 0; j <= n; ++j) {
        Poly term = Rational(stirling_first(n, j)) * bell_poly(j);
        if (j % 2 == 1) term = term * Rational(-1);
        rhs += term;
    }
    if (n % 2 == 1) rhs = rhs * Rational(-1);
    return {lhs, rhs};
}

std::pair<Poly, Poly> laguerre_expbell_identity(unsigned n) {
    Poly lhs = laguerre(-1, n);
    Poly rhs;
    for (unsigned j = 0; j <= n; ++j) {
        Poly term = Rational(stirling_first(n, j)) * bell_poly(j).scaled_arg(-1);
        if (j % 2 == 1) term = term * Rational(-1);
        rhs += term;
    }
    Rational scale = make_rational(1, factorial(n));
    if (n % 2 == 1) scale = -scale;
    return {lhs, rhs * scale};
}

namespace {

struct Task {
    std::string id;
    std::vector<long> params;
    std::function<IdentityReport()> fn;
};

IdentityReport make_report(std::string id, std::vector<long> params, bool pass,
                           std::string lhs, std::string rhs) {
    return IdentityReport{std::move(id), std::move(params), pass, std::move(lhs),
                          std::move(rhs)};
}

void add_task(std::vector<Task>& tasks, std::string id, std::vector<long> params,
              std::function<IdentityReport()> fn) {
    tasks.push_back(Task{std::move(id), std::move(params), std::move(fn)});
}

void add_orthogonality_tasks(std::vector<Task>& tasks, unsigned N) {
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            add_task(tasks, "stirling_orthogonality",
                     {static_cast<long>(n), static_cast<long>(m)}, [n, m] {
                         const Int v = stirling_orthogonality_check(n, m);
                         const Int want = (n == m) ? 1 : 0;
                         return make_report(
                             "stirling_orthogonality",
                             {static_cast<long>(n), static_cast<long>(m)},
                             v == want, to_string(v), to_string(want));
                     });
            add_task(tasks, "lah_stirling_roundtrip",
                     {static_cast<long>(n), static_cast<long>(m)}, [n, m] {
                         const Int v = lah_from_stirling(n, m);
                         const Int want = lah(n, m);
                         return make_report(
                             "lah_stirling_roundtrip",
                             {static_cast<long>(n), static_cast<long>(m)},
                             v == want, to_string(v), to_string(want));
                     });
        }
    for (unsigned n = 2; n <= N; ++n)
        for (unsigned m = 1; m < n; ++m)
            add_task(tasks, "lah_orthogonality_offdiag",
                     {static_cast<long>(n), static_cast<long>(m)}, [n, m] {
                         const Int v = lah_orthogonality_offdiag(n, m);
                         return make_report(
                             "lah_orthogonality_offdiag",
                             {static_cast<long>(n), static_cast<long>(m)},
                             v == 0, to_string(v), "0");
                     });
    for (unsigned n = 1; n <= N; ++n)
        add_task(tasks, "lah_orthogonality_diag", {static_cast<long>(n)}, [n] {
            const Rational v = lah_orthogonality_diag(n);
            const Rational want =
                make_rational(factorial(n) * factorial(n), static_cast<long>(n));
            return make_report("lah_orthogonality_diag", {static_cast<long>(n)},
                               v == want, to_string(v), to_string(want));
        });
}

void add_todorov_tasks(std::vector<Task>& tasks, unsigned N) {
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned m = 0; m <= N; ++m)
            add_task(tasks, "todorov_poly",
                     {static_cast<long>(n), static_cast<long>(m)}, [n, m] {
                         auto [lhs, rhs] = todorov_charalambides(n, m);
                         // Coefficients below degree m vanish (S(k,m)=0 for k<m).
                         bool structure = true;
                         for (unsigned i = 0; i < m && structure; ++i)
                             structure = (lhs.coeff(i) == 0);
                         return make_report(
                             "todorov_poly",
                             {static_cast<long>(n), static_cast<long>(m)},
                             lhs == rhs && structure, lhs.coeff_list(),
                             rhs.coeff_list());
                     });
    for (unsigned n = 1; n <= N; ++n)
        for (unsigned m = 1; m <= n; ++m)
            add_task(tasks, "todorov_z_minus1",
                     {static_cast<long>(n), static_cast<long>(m)},
                     [n, m] { return todorov_specialization_z_minus1(n, m); });
}

void add_gould_tasks(std::vector<Task>& tasks, unsigned N) {
    for (unsigned m = 0; m <= N; ++m)
        for (unsigned n = 0; n <= N; ++n)
            add_task(tasks, "gould_poly",
                     {static_cast<long>(m), static_cast<long>(n)}, [m, n] {
                         auto [lhs, rhs] = gould_identity(m, n);
                         return make_report(
                             "gould_poly",
                             {static_cast<long>(m), static_cast<long>(n)},
                             lhs == rhs, lhs.coeff_list(), rhs.coeff_list());
                     });
}

void add_gf_tasks(std::vector<Task>& tasks, unsigned N) {
    const unsigned kmax = std::min(N, 6u);
    for (unsigned k = 1; k <= kmax; ++k)
        add_task(tasks, "lah_column_gf", {static_cast<long>(k), static_cast<long>(N)},
                 [k, N] {
                     auto r = lah_column_gf_check(k, N);
                     std::ostringstream le, re;
                     for (std::size_t i = 0; i < r.extracted.size(); ++i) {
                         if (i) le << " ", re << " ";
                         le << to_string(r.extracted[i]);
                         re << to_string(r.expected[i]);
                     }
                     return make_report("lah_column_gf",
                                        {static_cast<long>(k), static_cast<long>(N)},
                                        r.pass, le.str(), re.str());
                 });
    add_task(tasks, "laguerre_gf", {static_cast<long>(N)}, [N] {
        auto r = laguerre_m1_gf_check(N);
        return make_report("laguerre_gf", {static_cast<long>(N)}, r.pass,
                           r.extracted.back().pretty(), r.expected.back().pretty());
    });
    add_task(tasks, "bell_gf", {static_cast<long>(N)}, [N] {
        auto r = bell_gf_check(N);
        return make_report("bell_gf", {static_cast<long>(N)}, r.pass,
                           r.extracted.back().pretty(), r.expected.back().pretty());
    });
}

const std::vector<Rational>& grid_c() {
    static const std::vector<Rational> v{Rational(1), Rational(-1), Rational(2),
                                         make_rational(1, 2), make_rational(-3, 2)};
    return v;
}
const std::vector<Rational>& grid_p() {
    static const std::vector<Rational> v{Rational(-1), Rational(1), Rational(2),
                                         Rational(-2), make_rational(1, 2)};
    return v;
}

void add_derivative_tasks(std::vector<Task>& tasks, unsigned N) {
    for (unsigned n = 0; n <= N; ++n) {
        add_task(tasks, "laguerre_triple", {static_cast<long>(n)}, [n] {
            const Poly a = laguerre(-1, n);
            const Poly b = laguerre_m1_lah(n);
            const Poly c = laguerre_rodriguez(-1, n);
            return make_report("laguerre_triple", {static_cast<long>(n)},
                               a == b && b == c, a.coeff_list(),
                               b == c ? b.coeff_list()
                                      : b.coeff_list() + " | " + c.coeff_list());
        });
        add_task(tasks, "derivative_four_way", {static_cast<long>(n)}, [n] {
            const auto a = derive_via_lah(n);
            const auto b = derive_via_laguerre(n);
            const auto c = derive_via_schwatt(n, 1, -1);
            const auto d = derive_via_exppoly(n, 1, -1);
            const bool pass =
                a.coeffs == b.coeffs && a.coeffs == c.coeffs && a.coeffs == d.coeffs;
            return make_report("derivative_four_way", {static_cast<long>(n)}, pass,
                               vec_str(a.coeffs),
                               pass ? vec_str(a.coeffs)
                                    : vec_str(b.coeffs) + " | " + vec_str(c.coeffs) +
                                          " | " + vec_str(d.coeffs));
        });
    }
    const unsigned ng = std::min(N, 10u);
    for (std::size_t ci = 0; ci < grid_c().size(); ++ci)
        for (std::size_t pi = 0; pi < grid_p().size(); ++pi)
            add_task(tasks, "schwatt_vs_exppoly",
                     {static_cast<long>(ci), static_cast<long>(pi)}, [ci, pi, ng] {
                         const Rational c = grid_c()[ci];
                         const Rational p = grid_p()[pi];
                         bool pass = true;
                         std::string lhs, rhs;
                         for (unsigned n = 0; n <= ng; ++n) {
                             const auto a = derive_via_schwatt(n, c, p);
                             const auto b = derive_via_exppoly(n, c, p);
                             if (n == ng) {
                                 lhs = vec_str(a.coeffs);
                                 rhs = vec_str(b.coeffs);
                             }
                             if (!(a.coeffs == b.coeffs)) {
                                 pass = false;
                                 lhs = vec_str(a.coeffs);
                                 rhs = vec_str(b.coeffs);
                                 break;
                             }
                         }
                         return make_report(
                             "schwatt_vs_exppoly",
                             {static_cast<long>(ci), static_cast<long>(pi)}, pass,
                             lhs, rhs);
                     });
    // Oracle agreement over the evaluation grid: integer p everywhere, and
    // p = 1/2 at perfect squares.
    struct OraclePoint {
        Rational c, p, x0;
    };
    std::vector<OraclePoint> pts;
    const std::vector<Rational> cs{Rational(1), Rational(-1), make_rational(1, 2)};
    const std::vector<Rational> ps{Rational(-2), Rational(-1), Rational(1),
                                   Rational(2), Rational(3)};
    const std::vector<Rational> x0s{Rational(1), make_rational(1, 2), Rational(2),
                                    make_rational(3, 4)};
    for (const auto& c : cs)
        for (const auto& p : ps)
            for (const auto& x0 : x0s) pts.push_back({c, p, x0});
    const std::vector<Rational> sq{Rational(1), Rational(4), make_rational(9, 4)};
    for (const auto& c : cs)
        for (const auto& x0 : sq) pts.push_back({c, make_rational(1, 2), x0});

    const unsigned no = std::min(N, 12u);
    for (std::size_t i = 0; i < pts.size(); ++i)
        add_task(tasks, "oracle_agreement", {static_cast<long>(i)}, [i, pts, no] {
            const auto& pt = pts[i];
            bool pass = true;
            std::string lhs, rhs;
            for (unsigned n = 0; n <= no; ++n) {
                const auto form = derive_via_schwatt(n, pt.c, pt.p);
                const Rational got = evaluate_form(form, pt.x0);
                const Rational want = taylor_oracle(form.spec, pt.x0);
                if (n == no || got != want) {
                    lhs = to_string(got);
                    rhs = to_string(want);
                }
                if (got != want) {
                    pass = false;
                    break;
                }
            }
            return make_report("oracle_agreement", {static_cast<long>(i)}, pass,
                               lhs, rhs);
        });
}

void add_expbell_tasks(std::vector<Task>& tasks, unsigned N) {
    for (unsigned n = 1; n <= N; ++n)
        add_task(tasks, "lah_expbell", {static_cast<long>(n)}, [n] {
            auto [lhs, rhs] = lah_expbell_identity(n);
            return make_report("lah_expbell", {static_cast<long>(n)}, lhs == rhs,
                               lhs.coeff_list(), rhs.coeff_list());
        });
    for (unsigned n = 0; n <= N; ++n)
        add_task(tasks, "laguerre_expbell", {static_cast<long>(n)}, [n] {
            auto [lhs, rhs] = laguerre_expbell_identity(n);
            return make_report("laguerre_expbell", {static_cast<long>(n)}, lhs == rhs,
                               lhs.coeff_list(), rhs.coeff_list());
        });
}

std::vector<Task> build_tasks(unsigned nmax, Suite suite) {
    std::vector<Task> tasks;
    const bool all = (suite == Suite::All);
    if (all || suite == Suite::Orthogonality) add_orthogonality_tasks(tasks, nmax);
    if (all || suite == Suite::Todorov) add_todorov_tasks(tasks, nmax);
    if (all || suite == Suite::Gould) add_gould_tasks(tasks, nmax);
    if (all || suite == Suite::Gf) add_gf_tasks(tasks, nmax);
    if (all || suite == Suite::Derivatives) add_derivative_tasks(tasks, nmax);
    if (all || suite == Suite::Expbell) add_expbell_tasks(tasks, nmax);
    return tasks;
}

}  // namespace

std::vector<IdentityReport> run_suite_serial(unsigned nmax, Suite suite) {
    if (nmax < 1) throw std::invalid_argument("run_suite: nmax must be >= 1");
    const auto tasks = build_tasks(nmax, suite);
    std::vector<IdentityReport> reports(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i].fn();
    return reports;
}

std::vector<IdentityReport> run_suite(unsigned nmax, Suite suite, bool parallel) {
    if (!parallel) return run_suite_serial(nmax, suite);
    if (nmax < 1) throw std::invalid_argument("run_suite: nmax must be >= 1");
    const auto tasks = build_tasks(nmax, suite);
    std::vector<IdentityReport> reports(tasks.size());
    // Memoized triangles are pre-built up front so the parallel section only
    // reads published rows.
    lah(nmax, 0);
    stirling_first(nmax, 0);
    stirling_second(nmax, 0);
    const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) reports[i] = tasks[i].fn();
    return reports;
}

}  // namespace lahlab
