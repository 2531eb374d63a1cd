#include "quatmob/tolerance.hpp"

#include <atomic>

namespace quatmob {

namespace {
std::atomic<double> g_atol{1e-9};
std::atomic<double> g_rtol{1e-9};
}  // namespace

Tolerance default_tolerance() {
    return Tolerance{g_atol.load(std::memory_order_relaxed), g_rtol.load(std::memory_order_relaxed)};
}

void set_default_tolerance(Tolerance tol) {
    g_atol.store(tol.atol, std::memory_order_relaxed);
    g_rtol.store(tol.rtol, std::memory_order_relaxed);
}

}  // namespace quatmob
