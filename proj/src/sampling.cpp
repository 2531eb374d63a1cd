#include "quatmob/sampling.hpp"

namespace quatmob {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

int Sampler::index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

Quaternion Sampler::gaussian() {
    std::normal_distribution<double> n01;
    return {n01(rng_), n01(rng_), n01(rng_), n01(rng_)};
}

Quaternion Sampler::unit() {
    Quaternion q;
    do {
        q = gaussian();
    } while (q.norm() < 1e-3);
    return q / q.norm();
}

Quaternion Sampler::imaginary_unit() {
    Quaternion q;
    do {
        q = gaussian().im();
    } while (q.norm() < 1e-3);
    return q / q.norm();
}

Quaternion Sampler::with_modulus_at_most(double max_modulus) { return unit() * uniform(0.0, max_modulus); }

Quaternion Sampler::in_ball(double radius) { return unit() * (radius * std::pow(uniform(0.0, 1.0), 0.25)); }

Quaternion Sampler::in_halfspace(double re_min, double re_max, double im_max) {
    return Quaternion(uniform(re_min, re_max)) + imaginary_unit() * uniform(0.0, im_max);
}

Mat2H Sampler::matrix(double max_modulus) {
    return {with_modulus_at_most(max_modulus), with_modulus_at_most(max_modulus),
            with_modulus_at_most(max_modulus), with_modulus_at_most(max_modulus)};
}

MobiusCanonical Sampler::canonical(double max_q0) { return {unit(), unit(), in_ball(max_q0)}; }

Mat2H Sampler::slhplus() {
    const Quaternion alpha = unit() * uniform(0.5, 2.0);
    const Quaternion beta = imaginary_unit() * uniform(0.0, 2.0) * alpha;
    const Quaternion gamma = imaginary_unit() * uniform(0.0, 2.0);
    return halfspace_general(alpha, beta, gamma).matrix();
}

FLT Sampler::flt(double max_modulus) {
    for (;;) {
        const Mat2H m = matrix(max_modulus);
        const double s = m.scale();
        if (det_h(m) > 0.05 * s * s) {
            return FLT(m);
        }
    }
}

Generator Sampler::generator() {
    switch (index(4)) {
        case 0: return Translation{with_modulus_at_most(2.0)};
        case 1: return Rotation{unit()};
        case 2: return Dilation{uniform(0.3, 3.0)};
        default: return Inversion{};
    }
}

}  // namespace quatmob
