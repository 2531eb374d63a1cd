#pragma once

#include <algorithm>
#include <cmath>

namespace quatmob {

/// Combined tolerance: |a - b| <= atol + rtol * max(|a|, |b|).
struct Tolerance {
    double atol = 1e-9;
    double rtol = 1e-9;

    bool close(double a, double b) const {
        return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
    }
    /// |value| small relative to a caller-supplied magnitude.
    bool negligible(double value, double scale = 0.0) const {
        return std::abs(value) <= atol + rtol * std::abs(scale);
    }
};

/// Process-wide default used when callers pass no tolerance. Reads and
/// writes are atomic, so changing it from one thread is safe but racy in
/// the obvious way.
Tolerance default_tolerance();
void set_default_tolerance(Tolerance tol);

}  // namespace quatmob
