#include "quatmob/quat.hpp"

#include <cstdio>
#include <ostream>

namespace quatmob {

Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 == 0.0) {
        throw Error(ErrorCode::DivisionByZero, "inverse of the zero quaternion");
    }
    return q.conj() / n2;
}

double distance(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

bool approx_equal(const Quaternion& p, const Quaternion& q, Tolerance tol) {
    return distance(p, q) <= tol.atol + tol.rtol * std::max(p.norm(), q.norm());
}

ImaginaryUnit::ImaginaryUnit(double x, double y, double z, Tolerance tol) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!tol.close(n, 1.0)) {
        throw Error(ErrorCode::ConstraintViolation, "imaginary unit must have norm 1");
    }
    x_ = x / n;
    y_ = y / n;
    z_ = z / n;
}

ImaginaryUnit ImaginaryUnit::from_imaginary_part(const Quaternion& q) {
    const double n = q.im_norm();
    if (n == 0.0) {
        throw Error(ErrorCode::RealInput, "real quaternion has no imaginary unit");
    }
    ImaginaryUnit u;
    u.x_ = q.x / n;
    u.y_ = q.y / n;
    u.z_ = q.z / n;
    return u;
}

SliceForm slice_decompose(const Quaternion& q, Tolerance tol) {
    const double y = q.im_norm();
    if (y <= tol.atol * (1.0 + q.norm())) {
        throw Error(ErrorCode::RealInput, "slice decomposition of a real quaternion: " + to_string(q));
    }
    return SliceForm{q.w, y, ImaginaryUnit::from_imaginary_part(q)};
}

bool on_sphere(const Quaternion& p, double x, double y, Tolerance tol) {
    return tol.close(p.w, x) && tol.close(p.im_norm(), std::abs(y));
}

bool conjugate_sphere_check(const Quaternion& q, double x, double y, const Quaternion& p, Tolerance tol) {
    if (!on_sphere(p, x, y, tol)) {
        throw Error(ErrorCode::NotOnSphere, "point " + to_string(p) + " is not on x + yS");
    }
    const Quaternion image = q * p * inverse(q);
    return on_sphere(image, x, y, tol);
}

std::string to_string(const Quaternion& q) {
    const auto z = [](double v) { return v == 0.0 ? 0.0 : v; };  // no "-0"
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi%+.17gj%+.17gk", z(q.w), z(q.x), z(q.y), z(q.z));
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace quatmob
