#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "lahlab/exact.hpp"

namespace lahlab {

enum class TriangleKind { Lah, StirlingFirstSigned, StirlingSecond };

// Memoized integer triangle; rows built on demand in deterministic order.
// Reads of already-built rows are safe from any thread; row construction
// is serialized internally.
class Triangle {
public:
    explicit Triangle(TriangleKind kind);

    // Entry (n,k); 0 outside 0 <= k <= n.
    Int at(std::size_t n, std::size_t k) const;

    // Row n, entries k = 0..n.
    std::vector<Int> row(std::size_t n) const;

private:
    void ensure_rows(std::size_t n) const;

    TriangleKind kind_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Int>> rows_;
};

Int lah(std::size_t n, std::size_t k);
Int stirling_first(std::size_t n, std::size_t k);
Int stirling_second(std::size_t n, std::size_t k);

// sum_k s(n,k) S(k,m); equals delta_{nm}.
Int stirling_orthogonality_check(std::size_t n, std::size_t m);

// (-1)^n sum_k s(n,k) S(k,m) (-1)^k; equals lah(n,m).
Int lah_from_stirling(std::size_t n, std::size_t m);

// Test/fault-injection hook: when enabled, lah(6,3) is reported off by one.
void set_lah_fault_injection(bool enabled);

}  // namespace lahlab
