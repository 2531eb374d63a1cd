#pragma once

#include <complex>
#include <vector>

#include "quatmob/quat.hpp"

namespace quatmob {

using Complex = std::complex<double>;

/// A point (z, w) of C^2, identified with the quaternion z + w j.
struct ComplexPair {
    Complex z;
    Complex w;

    double norm_sq() const { return std::norm(z) + std::norm(w); }
};

/// (w + x i) + (y + z i) j  <->  (w + x i, y + z i)
ComplexPair to_c2(const Quaternion& q);
Quaternion from_c2(const ComplexPair& p);

/// Distance from the origin, shared by the quaternionic Poincare distance and
/// the Kobayashi distance of the ball: artanh |q|.
double kobayashi_from_origin(const Quaternion& q);

/// Closed form and direct evaluation of one quantity, kept side by side.
struct DualValue {
    double closed_form;
    double direct;
};

/// |M(beta j)|^2 for the ball automorphism M(q) = (q - alpha)(1 - conj(alpha) q)^{-1}:
/// closed form (|beta|^2 + |alpha|^2) / (1 + |alpha|^2 |beta|^2), and direct
/// quaternionic evaluation of M.
DualValue poincare_image_modulus_sq(Complex alpha, Complex beta);

/// The complex-ball automorphism exchanging (alpha, 0) and the origin:
/// phi(z, w) = ((alpha, 0) - (z, 0) - sqrt(1 - |alpha|^2) (0, w)) / (1 - z conj(alpha)).
ComplexPair ball_automorphism(Complex alpha, const ComplexPair& p);

/// |phi(0, beta)|^2: closed form |alpha|^2 + (1 - |alpha|^2) |beta|^2 and
/// direct evaluation of ball_automorphism.
DualValue kobayashi_image_modulus_sq(Complex alpha, Complex beta);

struct WitnessPoint {
    double alpha;       ///< |alpha|, on the real axis
    double beta;        ///< |beta|, on the real axis
    double poincare;    ///< |M(beta j)|^2
    double kobayashi;   ///< |phi(0, beta)|^2
    double gap;         ///< poincare - kobayashi
    double poincare_distance;   ///< artanh sqrt(poincare)
    double kobayashi_distance;  ///< artanh sqrt(kobayashi)
};

struct WitnessReport {
    WitnessPoint witness;             ///< alpha = beta = 0.5
    int grid = 0;                     ///< samples per axis
    std::vector<WitnessPoint> scan;   ///< |alpha|, |beta| in {0, 1/grid, ..., (grid-1)/grid}
    double grid_max_gap = 0.0;
    bool witness_ok = false;          ///< gap > 1e-3 at the witness point
};

WitnessPoint witness_point(double alpha, double beta);

/// Numeric evidence that the two distances differ away from the origin.
WitnessReport non_isometry_witness(int grid = 20);

}  // namespace quatmob
