// lahlab: tables, polynomial constructors, the derivative lab, generating
// function checks, and the identity verification suite.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lahlab/derivatives.hpp"
#include "lahlab/gf_checks.hpp"
#include "lahlab/identities.hpp"
#include "lahlab/poly.hpp"
#include "lahlab/triangles.hpp"

namespace {

using lahlab::Int;
using lahlab::Rational;
using nlohmann::json;

enum class Format { Plain, Csv, Json };

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw CLI::ValidationError("--format", "must be plain, csv or json");
}

Rational require_rational(const std::string& s, const char* flag) {
    auto v = lahlab::parse_rational(s);
    if (!v) throw CLI::ValidationError(flag, "expected an integer or p/q rational");
    return *v;
}

void print_json_line(const std::string& kind, const std::vector<std::string>& params,
                     const std::vector<std::string>& values,
                     std::optional<bool> status = std::nullopt) {
    json j;
    j["kind"] = kind;
    j["params"] = params;
    j["values"] = values;
    if (status) j["status"] = *status ? "pass" : "fail";
    std::cout << j.dump() << "\n";
}

std::vector<std::string> row_strings(const std::vector<Int>& row) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(lahlab::to_string(v));
    return out;
}

std::vector<std::string> coeff_strings(const lahlab::Poly& p) {
    std::vector<std::string> out;
    const long deg = p.degree();
    for (long i = 0; i <= std::max(deg, 0L); ++i)
        out.push_back(lahlab::to_string(p.coeff(static_cast<std::size_t>(i))));
    return out;
}

std::vector<std::string> coeff_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(lahlab::to_string(x));
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

int cmd_table(const std::string& kind, long nmax, Format fmt) {
    const lahlab::Triangle* tri = nullptr;
    static const lahlab::Triangle lah_t(lahlab::TriangleKind::Lah);
    static const lahlab::Triangle s1_t(lahlab::TriangleKind::StirlingFirstSigned);
    static const lahlab::Triangle s2_t(lahlab::TriangleKind::StirlingSecond);
    if (kind == "lah")
        tri = &lah_t;
    else if (kind == "stirling1")
        tri = &s1_t;
    else
        tri = &s2_t;
    for (long n = 0; n <= nmax; ++n) {
        const auto row = row_strings(tri->row(static_cast<std::size_t>(n)));
        switch (fmt) {
            case Format::Plain:
                std::cout << join(row, " ") << "\n";
                break;
            case Format::Csv:
                std::cout << join(row, ",") << "\n";
                break;
            case Format::Json:
                print_json_line(kind, {std::to_string(n)}, row);
                break;
        }
    }
    return 0;
}

int cmd_poly(const std::string& kind, long n, const std::optional<Rational>& alpha,
             Format fmt) {
    lahlab::Poly p;
    std::vector<std::string> params;
    if (kind == "laguerre") {
        p = lahlab::laguerre(*alpha, static_cast<unsigned>(n));
        params = {lahlab::to_string(*alpha), std::to_string(n)};
    } else {
        p = lahlab::bell_poly(static_cast<unsigned>(n));
        params = {std::to_string(n)};
    }
    const auto coeffs = coeff_strings(p);
    switch (fmt) {
        case Format::Plain:
            std::cout << join(coeffs, ", ") << "\n";
            std::cout << "  = " << p.pretty() << "\n";
            break;
        case Format::Csv:
            std::cout << join(coeffs, ",") << "\n";
            break;
        case Format::Json:
            print_json_line(kind, params, coeffs);
            break;
    }
    return 0;
}

struct DeriveOutput {
    std::string method;
    lahlab::DerivClosedForm form;
};

int cmd_derive(long n, const Rational& c, const Rational& p, const Rational& lambda,
               const std::string& method, const std::optional<Rational>& x0,
               Format fmt) {
    const unsigned un = static_cast<unsigned>(n);
    const bool canonical_spec = (c == 1 && p == -1 && lambda == 0);
    if ((method == "lah" || method == "laguerre") && !canonical_spec) {
        std::cerr << "derive: method " << method
                  << " requires --c 1 --p -1 --lambda 0\n";
        return 2;
    }
    if (method == "brychkov" && p != -1) {
        std::cerr << "derive: method brychkov requires --p -1\n";
        return 2;
    }

    std::vector<DeriveOutput> outs;
    if (method == "lah" || (method == "all" && canonical_spec))
        outs.push_back({"lah", lahlab::derive_via_lah(un)});
    if (method == "laguerre" || (method == "all" && canonical_spec))
        outs.push_back({"laguerre", lahlab::derive_via_laguerre(un)});
    if (method == "schwatt" || method == "all")
        outs.push_back({"schwatt", lahlab::derive_via_schwatt(un, c, p)});
    if (method == "exppoly" || method == "all")
        outs.push_back({"exppoly", lahlab::derive_via_exppoly(un, c, p)});
    if (method == "brychkov")
        outs.push_back({"brychkov", lahlab::derive_brychkov(un, lambda, -c)});

    bool all_ok = true;
    for (const auto& o : outs)
        if (o.form.coeffs != outs.front().form.coeffs) all_ok = false;

    const std::vector<std::string> spec_params = {
        method, std::to_string(n), lahlab::to_string(c), lahlab::to_string(p),
        lahlab::to_string(lambda)};

    for (const auto& o : outs) {
        const auto coeffs = coeff_strings(o.form.coeffs);
        switch (fmt) {
            case Format::Plain:
                std::cout << o.method << ": (" << join(coeffs, ", ") << ")\n";
                break;
            case Format::Csv:
                std::cout << o.method << "," << join(coeffs, ",") << "\n";
                break;
            case Format::Json:
                print_json_line("derive_form",
                                {o.method, std::to_string(n), lahlab::to_string(c),
                                 lahlab::to_string(p), lahlab::to_string(lambda)},
                                coeffs);
                break;
        }
    }
    if (outs.size() > 1) {
        switch (fmt) {
            case Format::Plain:
                std::cout << (all_ok ? "AGREE" : "DISAGREE") << "\n";
                break;
            case Format::Csv:
                std::cout << "verdict," << (all_ok ? "AGREE" : "DISAGREE") << "\n";
                break;
            case Format::Json:
                print_json_line("derive_verdict", spec_params, {}, all_ok);
                break;
        }
    }

    bool eval_ok = true;
    if (x0) {
        for (const auto& o : outs) {
            const Rational got = lahlab::evaluate_form(o.form, *x0);
            const Rational want = lahlab::taylor_oracle(o.form.spec, *x0);
            const bool match = (got == want);
            if (!match) eval_ok = false;
            switch (fmt) {
                case Format::Plain:
                    std::cout << o.method << " at x0=" << lahlab::to_string(*x0)
                              << ": value " << lahlab::to_string(got) << ", oracle "
                              << lahlab::to_string(want) << ", "
                              << (match ? "MATCH" : "MISMATCH") << "\n";
                    break;
                case Format::Csv:
                    std::cout << o.method << "," << lahlab::to_string(*x0) << ","
                              << lahlab::to_string(got) << ","
                              << lahlab::to_string(want) << ","
                              << (match ? "MATCH" : "MISMATCH") << "\n";
                    break;
                case Format::Json:
                    print_json_line("derive_eval", {o.method, lahlab::to_string(*x0)},
                                    {lahlab::to_string(got), lahlab::to_string(want)},
                                    match);
                    break;
            }
        }
    }
    return (all_ok && eval_ok) ? 0 : 1;
}

lahlab::Suite parse_suite(const std::string& s) {
    if (s == "all") return lahlab::Suite::All;
    if (s == "orthogonality") return lahlab::Suite::Orthogonality;
    if (s == "todorov") return lahlab::Suite::Todorov;
    if (s == "gould") return lahlab::Suite::Gould;
    if (s == "gf") return lahlab::Suite::Gf;
    if (s == "derivatives") return lahlab::Suite::Derivatives;
    return lahlab::Suite::Expbell;
}

int cmd_verify(const std::string& suite, long nmax, Format fmt, bool inject_fault) {
    if (inject_fault) lahlab::set_lah_fault_injection(true);
    const auto reports =
        lahlab::run_suite(static_cast<unsigned>(nmax), parse_suite(suite));
    bool all_pass = true;
    for (const auto& r : reports) {
        if (!r.pass) all_pass = false;
        std::vector<std::string> params;
        for (long v : r.params) params.push_back(std::to_string(v));
        switch (fmt) {
            case Format::Plain:
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "("
                          << join(params, ",") << ")";
                if (!r.pass) std::cout << "  lhs=" << r.lhs << "  rhs=" << r.rhs;
                std::cout << "\n";
                break;
            case Format::Csv:
                std::cout << (r.pass ? "pass" : "fail") << "," << r.id << ","
                          << join(params, ",") << "\n";
                break;
            case Format::Json:
                print_json_line(r.id, params, {r.lhs, r.rhs}, r.pass);
                break;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_series(const std::string& kind, std::optional<long> k, long order, Format fmt) {
    const std::size_t N = static_cast<std::size_t>(order);
    bool all_pass = true;

    auto emit = [&](std::size_t n, const std::string& got, const std::string& want,
                    bool pass) {
        if (!pass) all_pass = false;
        switch (fmt) {
            case Format::Plain:
                std::cout << "n=" << n << ": " << got << " " << want << " "
                          << (pass ? "PASS" : "FAIL") << "\n";
                break;
            case Format::Csv:
                std::cout << n << "," << got << "," << want << ","
                          << (pass ? "pass" : "fail") << "\n";
                break;
            case Format::Json:
                print_json_line(kind, {std::to_string(n)}, {got, want}, pass);
                break;
        }
    };

    if (kind == "lahgf") {
        const auto r =
            lahlab::lah_column_gf_check(static_cast<std::size_t>(*k), N);
        for (std::size_t n = 0; n <= N; ++n)
            emit(n, lahlab::to_string(r.extracted[n]), lahlab::to_string(r.expected[n]),
                 r.extracted[n] == r.expected[n]);
    } else {
        const auto r = (kind == "laguerregf") ? lahlab::laguerre_m1_gf_check(N)
                                              : lahlab::bell_gf_check(N);
        for (std::size_t n = 0; n <= N; ++n)
            emit(n, r.extracted[n].pretty(), r.expected[n].pretty(),
                 r.extracted[n] == r.expected[n]);
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lah/Stirling/Laguerre/Bell toolbox"};
    app.require_subcommand(1);

    std::string format = "plain";

    // table
    auto* table = app.add_subcommand("table", "Print an integer triangle");
    std::string table_kind;
    long table_nmax = 0;
    table->add_option("kind", table_kind, "lah|stirling1|stirling2")
        ->required()
        ->check(CLI::IsMember({"lah", "stirling1", "stirling2"}));
    table->add_option("--nmax", table_nmax, "last row to print")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    // poly
    auto* poly = app.add_subcommand("poly", "Print polynomial coefficients");
    std::string poly_kind, poly_alpha;
    long poly_n = 0;
    poly->add_option("kind", poly_kind, "laguerre|bell")
        ->required()
        ->check(CLI::IsMember({"laguerre", "bell"}));
    poly->add_option("--n", poly_n)->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--alpha", poly_alpha, "order (required for laguerre)");
    poly->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    // derive
    auto* derive = app.add_subcommand("derive", "Closed forms for D^n[x^l e^{c x^p}]");
    long derive_n = 0;
    std::string derive_c = "1", derive_p = "-1", derive_lambda = "0", derive_x0;
    std::string derive_method = "all";
    derive->add_option("--n", derive_n)->required()->check(CLI::NonNegativeNumber);
    derive->add_option("--c", derive_c);
    derive->add_option("--p", derive_p);
    derive->add_option("--lambda", derive_lambda);
    derive->add_option("--x0", derive_x0, "also evaluate and compare to the oracle");
    derive->add_option("--method", derive_method)
        ->check(CLI::IsMember({"lah", "laguerre", "schwatt", "exppoly", "brychkov", "all"}));
    derive->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity suites");
    std::string verify_suite = "all";
    long verify_nmax = 0;
    bool inject_fault = false;
    verify->add_option("--suite", verify_suite)
        ->check(CLI::IsMember(
            {"all", "orthogonality", "todorov", "gould", "gf", "derivatives", "expbell"}));
    verify->add_option("--nmax", verify_nmax)->required()->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden
    verify->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    // series
    auto* series = app.add_subcommand("series", "Generating-function coefficient checks");
    std::string series_kind;
    long series_k = -1, series_order = 0;
    series->add_option("kind", series_kind, "lahgf|laguerregf|bellgf")
        ->required()
        ->check(CLI::IsMember({"lahgf", "laguerregf", "bellgf"}));
    series->add_option("--k", series_k, "column (required for lahgf)");
    series->add_option("--order", series_order)->required()->check(CLI::PositiveNumber);
    series->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = parse_format(format);
        if (*table) return cmd_table(table_kind, table_nmax, fmt);
        if (*poly) {
            std::optional<Rational> alpha;
            if (poly_kind == "laguerre") {
                if (poly_alpha.empty()) {
                    std::cerr << "poly laguerre: --alpha is required\n";
                    return 2;
                }
                alpha = require_rational(poly_alpha, "--alpha");
            }
            return cmd_poly(poly_kind, poly_n, alpha, fmt);
        }
        if (*derive) {
            std::optional<Rational> x0;
            if (!derive_x0.empty()) x0 = require_rational(derive_x0, "--x0");
            return cmd_derive(derive_n, require_rational(derive_c, "--c"),
                              require_rational(derive_p, "--p"),
                              require_rational(derive_lambda, "--lambda"),
                              derive_method, x0, fmt);
        }
        if (*verify) return cmd_verify(verify_suite, verify_nmax, fmt, inject_fault);
        if (*series) {
            if (series_kind == "lahgf") {
                if (series_k < 1 || series_k > series_order) {
                    std::cerr << "series lahgf: --k must satisfy 1 <= k <= order\n";
                    return 2;
                }
                return cmd_series(series_kind, series_k, series_order, fmt);
            }
            return cmd_series(series_kind, std::nullopt, series_order, fmt);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
