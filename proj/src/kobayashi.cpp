#include "quatmob/kobayashi.hpp"

#include "quatmob/flt.hpp"

namespace quatmob {

ComplexPair to_c2(const Quaternion& q) { return {Complex(q.w, q.x), Complex(q.y, q.z)}; }

Quaternion from_c2(const ComplexPair& p) {
    return {p.z.real(), p.z.imag(), p.w.real(), p.w.imag()};
}

namespace {

void require_unit_disc(Complex c) {
    if (!(std::norm(c) < 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "complex parameter must satisfy |c| < 1");
    }
}

Quaternion as_quaternion(Complex c) { return {c.real(), c.imag(), 0.0, 0.0}; }

}  // namespace

double kobayashi_from_origin(const Quaternion& q) {
    const double r = q.norm();
    if (!(r < 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "point is not in the open unit ball");
    }
    return std::atanh(r);
}

DualValue poincare_image_modulus_sq(Complex alpha, Complex beta) {
    require_unit_disc(alpha);
    require_unit_disc(beta);
    const double a2 = std::norm(alpha);
    const double b2 = std::norm(beta);
    const double closed = (b2 + a2) / (1.0 + a2 * b2);

    const Quaternion a = as_quaternion(alpha);
    const FLT m(Mat2H{1.0, -a, -a.conj(), 1.0});
    const Quaternion point = as_quaternion(beta) * Quaternion::j();
    return {closed, m(point).finite().norm_sq()};
}

ComplexPair ball_automorphism(Complex alpha, const ComplexPair& p) {
    const Complex den = 1.0 - p.z * std::conj(alpha);
    const double s = std::sqrt(1.0 - std::norm(alpha));
    return {(alpha - p.z) / den, -s * p.w / den};
}

DualValue kobayashi_image_modulus_sq(Complex alpha, Complex beta) {
    require_unit_disc(alpha);
    require_unit_disc(beta);
    const double a2 = std::norm(alpha);
    const double closed = a2 + (1.0 - a2) * std::norm(beta);
    return {closed, ball_automorphism(alpha, {0.0, beta}).norm_sq()};
}

WitnessPoint witness_point(double alpha, double beta) {
    WitnessPoint p{};
    p.alpha = alpha;
    p.beta = beta;
    p.poincare = poincare_image_modulus_sq(alpha, beta).closed_form;
    p.kobayashi = kobayashi_image_modulus_sq(alpha, beta).closed_form;
    p.gap = p.poincare - p.kobayashi;
    p.poincare_distance = std::atanh(std::sqrt(p.poincare));
    p.kobayashi_distance = std::atanh(std::sqrt(p.kobayashi));
    return p;
}

WitnessReport non_isometry_witness(int grid) {
    if (grid < 1) {
        throw Error(ErrorCode::TooFewSamples, "witness grid needs at least one sample per axis");
    }
    WitnessReport report;
    report.witness = witness_point(0.5, 0.5);
    report.witness_ok = report.witness.gap > 1e-3;
    report.grid = grid;
    report.scan.reserve(static_cast<std::size_t>(grid * grid));
    for (int i = 0; i < grid; ++i) {
        for (int k = 0; k < grid; ++k) {
            const WitnessPoint p = witness_point(static_cast<double>(i) / grid, static_cast<double>(k) / grid);
            report.grid_max_gap = std::max(report.grid_max_gap, std::abs(p.gap));
            report.scan.push_back(p);
        }
    }
    return report;
}

}  // namespace quatmob
