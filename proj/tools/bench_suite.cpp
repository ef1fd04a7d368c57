// Times the identity suite: serial reference vs OpenMP runner, and checks
// that both produce identical reports.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "lahlab/identities.hpp"

int main(int argc, char** argv) {
    const unsigned nmax = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 12;

    using clock = std::chrono::steady_clock;

    const auto t0 = clock::now();
    const auto serial = lahlab::run_suite_serial(nmax);
    const auto t1 = clock::now();
    const auto parallel = lahlab::run_suite(nmax, lahlab::Suite::All, true);
    const auto t2 = clock::now();

    const auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };

    bool identical = serial.size() == parallel.size();
    std::size_t failures = 0;
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
        const auto& a = serial[i];
        const auto& b = parallel[i];
        identical = a.id == b.id && a.params == b.params && a.pass == b.pass &&
                    a.lhs == b.lhs && a.rhs == b.rhs;
        if (!a.pass) ++failures;
    }

    std::cout << "nmax " << nmax << ", " << serial.size() << " checks, " << failures
              << " failures\n";
    std::cout << "serial:   " << ms(t0, t1) << " ms\n";
    std::cout << "parallel: " << ms(t1, t2) << " ms\n";
    std::cout << "reports identical: " << (identical ? "yes" : "NO") << "\n";
    return identical && failures == 0 ? 0 : 1;
}
