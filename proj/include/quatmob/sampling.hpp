#pragma once

#include <cstdint>
#include <random>

#include "quatmob/flt.hpp"

namespace quatmob {

/// Seeded generators of random points, matrices and maps for the property
/// suites. Deterministic for a given seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    int index(int n);

    Quaternion gaussian();
    Quaternion unit();
    Quaternion imaginary_unit();
    /// Uniform direction, modulus uniform in [0, max_modulus].
    Quaternion with_modulus_at_most(double max_modulus);
    /// Uniform in the ball of the given radius (by volume).
    Quaternion in_ball(double radius = 1.0);
    /// Re in [re_min, re_max], imaginary part with modulus at most im_max.
    Quaternion in_halfspace(double re_min = 0.05, double re_max = 4.0, double im_max = 4.0);

    Mat2H matrix(double max_modulus = 10.0);
    MobiusCanonical canonical(double max_q0 = 0.9);
    /// SL(H+) element built from halfspace_general with |alpha| in [0.5, 2].
    Mat2H slhplus();
    /// Random invertible map with entries of modulus at most max_modulus.
    FLT flt(double max_modulus = 3.0);
    Generator generator();

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace quatmob
