#include "lahlab/triangles.hpp"

#include <atomic>

namespace lahlab {

namespace {

std::atomic<bool> g_lah_fault{false};

std::vector<Int> build_row(TriangleKind kind, std::size_t n,
                           const std::vector<std::vector<Int>>& rows) {
    std::vector<Int> row(n + 1);
    switch (kind) {
        case TriangleKind::Lah:
            // Closed form n!/k! C(n-1,k-1); the recurrence is a test, not
            // the implementation.
            if (n == 0) {
                row[0] = 1;
            } else {
                row[0] = 0;
                for (std::size_t k = 1; k <= n; ++k)
                    row[k] = factorial(n) / factorial(k) *
                             binomial(static_cast<long>(n) - 1,
                                      static_cast<long>(k) - 1);
            }
            break;
        case TriangleKind::StirlingFirstSigned:
            if (n == 0) {
                row[0] = 1;
            } else {
                const auto& prev = rows[n - 1];
                const Int nm1 = static_cast<long>(n) - 1;
                for (std::size_t k = 0; k <= n; ++k) {
                    Int v = 0;
                    if (k >= 1) v += prev[k - 1];
                    if (k <= n - 1) v -= nm1 * prev[k];
                    row[k] = v;
                }
            }
            break;
        case TriangleKind::StirlingSecond:
            if (n == 0) {
                row[0] = 1;
            } else {
                const auto& prev = rows[n - 1];
                for (std::size_t k = 0; k <= n; ++k) {
                    Int v = 0;
                    if (k >= 1) v += prev[k - 1];
                    if (k <= n - 1) v += Int(static_cast<long>(k)) * prev[k];
                    row[k] = v;
                }
            }
            break;
    }
    return row;
}

const Triangle& lah_triangle() {
    static Triangle t(TriangleKind::Lah);
    return t;
}
const Triangle& s1_triangle() {
    static Triangle t(TriangleKind::StirlingFirstSigned);
    return t;
}
const Triangle& s2_triangle() {
    static Triangle t(TriangleKind::StirlingSecond);
    return t;
}

}  // namespace

Triangle::Triangle(TriangleKind kind) : kind_(kind) {}

void Triangle::ensure_rows(std::size_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (rows_.size() <= n) rows_.push_back(build_row(kind_, rows_.size(), rows_));
}

Int Triangle::at(std::size_t n, std::size_t k) const {
    if (k > n) return 0;
    ensure_rows(n);
    std::lock_guard<std::mutex> lock(mu_);
    return rows_[n][k];
}

std::vector<Int> Triangle::row(std::size_t n) const {
    ensure_rows(n);
    std::lock_guard<std::mutex> lock(mu_);
    return rows_[n];
}

Int lah(std::size_t n, std::size_t k) {
    Int v = lah_triangle().at(n, k);
    if (g_lah_fault.load() && n == 6 && k == 3) v += 1;
    return v;
}

Int stirling_first(std::size_t n, std::size_t k) { return s1_triangle().at(n, k); }

Int stirling_second(std::size_t n, std::size_t k) { return s2_triangle().at(n, k); }

Int stirling_orthogonality_check(std::size_t n, std::size_t m) {
    Int sum = 0;
    for (std::size_t k = 0; k <= n; ++k)
        sum += stirling_first(n, k) * stirling_second(k, m);
    return sum;
}

Int lah_from_stirling(std::size_t n, std::size_t m) {
    Int sum = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        Int term = stirling_first(n, k) * stirling_second(k, m);
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    if (n % 2 == 1) sum = -sum;
    return sum;
}

void set_lah_fault_injection(bool enabled) { g_lah_fault.store(enabled); }

}  // namespace lahlab
