#include "quatmob/crossratio.hpp"

#include <array>

namespace quatmob {

ExtQuaternion cross_ratio(const ExtQuaternion& q1, const ExtQuaternion& q2, const ExtQuaternion& q3,
                          const ExtQuaternion& q4, Tolerance tol) {
    const std::array<const ExtQuaternion*, 4> pts{&q1, &q2, &q3, &q4};
    int infinite = 0;
    for (const auto* p : pts) {
        infinite += p->is_infinite() ? 1 : 0;
    }
    if (infinite > 1) {
        throw Error(ErrorCode::CoincidentPoints, "cross-ratio admits at most one point at infinity");
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if ((i != 0 || j != 1) && approx_equal(*pts[i], *pts[j], tol)) {
                throw Error(ErrorCode::CoincidentPoints, "cross-ratio of coincident points");
            }
        }
    }
    if (approx_equal(q1, q2, tol)) {
        return Quaternion(1.0);
    }

    // Each factor that contains the infinite argument becomes 1.
    Quaternion out(1.0);
    if (q1.is_finite() && q3.is_finite()) out = out * (q1.finite() - q3.finite());
    if (q1.is_finite() && q4.is_finite()) out = out * inverse(q1.finite() - q4.finite());
    if (q2.is_finite() && q4.is_finite()) out = out * (q2.finite() - q4.finite());
    if (q2.is_finite() && q3.is_finite()) out = out * inverse(q2.finite() - q3.finite());
    return out;
}

bool is_concyclic(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3, const Quaternion& q4,
                  double tol) {
    const Quaternion cr = cross_ratio(q1, q2, q3, q4).finite();
    return cr.im_norm() <= tol * (1.0 + cr.norm());
}

bool separates(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3, const Quaternion& q4,
               double tol) {
    const Quaternion cr = cross_ratio(q1, q2, q3, q4).finite();
    if (cr.im_norm() > tol * (1.0 + cr.norm())) {
        throw Error(ErrorCode::NotConcyclic, "points do not lie on one circle");
    }
    return cr.w < 0.0;
}

double QuadricF3::evaluate(const Quaternion& q) const { return alpha * q.norm_sq() + 2.0 * re_mul(beta, q) + gamma; }

double QuadricF3::magnitude(const Quaternion& q) const {
    return std::abs(alpha) * q.norm_sq() + 2.0 * beta.norm() * q.norm() + std::abs(gamma);
}

QuadricF3 sphere(const Quaternion& center, double radius) {
    return {1.0, -center.conj(), center.norm_sq() - radius * radius};
}

QuadricF3 plane(const Quaternion& normal, double offset) { return {0.0, normal, -2.0 * offset}; }

bool on_quadric(const Quaternion& q, const QuadricF3& quad, double tol) {
    return std::abs(quad.evaluate(q)) <= tol * (1.0 + quad.magnitude(q));
}

namespace {

std::array<double, 6> coefficients(const QuadricF3& q) {
    return {q.alpha, q.beta.w, q.beta.x, q.beta.y, q.beta.z, q.gamma};
}

double norm6(const std::array<double, 6>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

bool same_quadric(const QuadricF3& p, const QuadricF3& q, double tol) {
    const auto u = coefficients(p);
    const auto v = coefficients(q);
    const double nu = norm6(u);
    const double nv = norm6(v);
    if (nu == 0.0 || nv == 0.0) {
        return nu == nv;
    }
    double plus = 0.0;
    double minus = 0.0;
    for (int i = 0; i < 6; ++i) {
        plus = std::max(plus, std::abs(u[i] / nu - v[i] / nv));
        minus = std::max(minus, std::abs(u[i] / nu + v[i] / nv));
    }
    return std::min(plus, minus) <= tol;
}

QuadricF3 transform_quadric(const Generator& g, const QuadricF3& quad) {
    QuadricF3 out = quad;
    if (const auto* t = std::get_if<Translation>(&g)) {
        // substitute q - b
        out.beta = quad.beta - quad.alpha * t->b.conj();
        out.gamma = quad.alpha * t->b.norm_sq() - 2.0 * re_mul(quad.beta, t->b) + quad.gamma;
    } else if (const auto* r = std::get_if<Rotation>(&g)) {
        // substitute conj(a) q
        out.beta = quad.beta * r->a.conj();
    } else if (const auto* d = std::get_if<Dilation>(&g)) {
        // substitute q / r
        out.alpha = quad.alpha / (d->r * d->r);
        out.beta = quad.beta / d->r;
    } else {
        // substitute q^{-1}, multiply through by |q|^2
        out.alpha = quad.gamma;
        out.beta = quad.beta.conj();
        out.gamma = quad.alpha;
    }
    const double scale = std::abs(quad.alpha) + quad.beta.norm() + std::abs(quad.gamma);
    if (std::abs(out.alpha) + out.beta.norm() + std::abs(out.gamma) <= 1e-14 * scale) {
        throw Error(ErrorCode::DegenerateResult, "transformed quadric has vanishing coefficients");
    }
    return out;
}

}  // namespace quatmob
