#pragma once

#include <cmath>
#include <iosfwd>
#include <string>

#include "quatmob/error.hpp"
#include "quatmob/tolerance.hpp"

namespace quatmob {

/// q = w + x i + y j + z k, with ij = -ji = k, jk = -kj = i, ki = -ik = j.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_) : w(w_) {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr double re() const { return w; }
    constexpr Quaternion im() const { return {0, x, y, z}; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
    double im_norm() const { return std::sqrt(x * x + y * y + z * z); }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    bool is_finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator*(Quaternion p, double s) { return p *= s; }
constexpr Quaternion operator*(double s, Quaternion p) { return p *= s; }
constexpr Quaternion operator/(Quaternion p, double s) { return p *= (1.0 / s); }

// Hamilton product
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

inline Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }
constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double abs(const Quaternion& q) { return q.norm(); }

/// q^{-1} = conj(q) / |q|^2. Throws DivisionByZero for q = 0.
Quaternion inverse(const Quaternion& q);

/// Re(p q) without forming the full product.
constexpr double re_mul(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z;
}

/// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

double distance(const Quaternion& p, const Quaternion& q);
bool approx_equal(const Quaternion& p, const Quaternion& q, Tolerance tol = default_tolerance());

/// Purely imaginary quaternion of unit norm; squares to -1.
class ImaginaryUnit {
public:
    /// Normalizes (x, y, z); throws ConstraintViolation unless the input
    /// already has unit norm within tolerance.
    ImaginaryUnit(double x, double y, double z, Tolerance tol = default_tolerance());

    /// Normalizes the imaginary part of q. Throws RealInput when it vanishes.
    static ImaginaryUnit from_imaginary_part(const Quaternion& q);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }
    Quaternion quat() const { return {0.0, x_, y_, z_}; }

private:
    ImaginaryUnit() = default;
    double x_ = 1.0, y_ = 0.0, z_ = 0.0;
};

/// q = re + im * unit, im > 0.
struct SliceForm {
    double re;
    double im;
    ImaginaryUnit unit;

    Quaternion recompose() const { return Quaternion(re) + unit.quat() * im; }
};

/// Unique decomposition q = x + yI with y > 0 and I in the sphere of imaginary
/// units. Throws RealInput when |Im q| <= atol * (1 + |q|).
SliceForm slice_decompose(const Quaternion& q, Tolerance tol = default_tolerance());

/// True when q p q^{-1} lies on the 2-sphere x + yS. Requires p itself on that
/// sphere (NotOnSphere otherwise) and q != 0.
bool conjugate_sphere_check(const Quaternion& q, double x, double y, const Quaternion& p,
                            Tolerance tol = default_tolerance());

/// Membership in the 2-sphere x + yS: Re p = x and |Im p| = |y|.
bool on_sphere(const Quaternion& p, double x, double y, Tolerance tol = default_tolerance());

/// Canonical text form "w+xi+yj+zk" with explicit signs.
std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatmob
