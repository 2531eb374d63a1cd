#include "quatmob/hypgeo.hpp"

#include <tuple>

namespace quatmob {

std::string_view to_string(GeodesicDisc::Kind kind) {
    return kind == GeodesicDisc::Kind::Diameter ? "diameter" : "circle";
}

std::string_view to_string(GeodesicHalfspace::Kind kind) {
    return kind == GeodesicHalfspace::Kind::HalfLine ? "half-line" : "arc";
}

bool in_disc(const Quaternion& q) { return q.norm_sq() < 1.0; }
bool in_halfspace(const Quaternion& q) { return q.w > 0.0; }

namespace {

void require_disc(const Quaternion& q) {
    if (!in_disc(q)) {
        throw Error(ErrorCode::OutOfDomain, "point " + to_string(q) + " is not in the open unit ball");
    }
}

void require_halfspace(const Quaternion& q) {
    if (!in_halfspace(q)) {
        throw Error(ErrorCode::OutOfDomain, "point " + to_string(q) + " is not in the right half-space");
    }
}

}  // namespace

NormalizingMap normalizing_map(const Quaternion& q1, const Quaternion& q2, Tolerance tol) {
    require_disc(q1);
    require_disc(q2);
    if (approx_equal(q1, q2, tol)) {
        throw Error(ErrorCode::CoincidentPoints, "normalizing map needs two distinct points");
    }
    const Quaternion diff = q2 - q1;
    const Quaternion cross = 1.0 - q1.conj() * q2;
    const Quaternion l1 = diff.norm() * inverse(diff);
    const Quaternion l2 = cross / cross.norm();
    // L(q) = l1 (q - q1)(1 - conj(q1) q)^{-1} l2, so beta = l2^{-1}.
    return {MobiusCanonical{l1, l2.conj(), q1}, diff.norm() / cross.norm()};
}

GeodesicDisc geodesic_disc(const Quaternion& q1, const Quaternion& q2, Tolerance tol) {
    const NormalizingMap nm = normalizing_map(q1, q2, tol);
    const FLT back = inverse(nm.map());
    const Quaternion q3 = back(1.0).finite();
    const Quaternion q4 = back(-1.0).finite();
    const bool diameter = (q1.conj() * q2).im_norm() <= tol.atol * (1.0 + q1.norm() * q2.norm());
    return {q1, q2, q3, q4, diameter ? GeodesicDisc::Kind::Diameter : GeodesicDisc::Kind::Circle};
}

Quaternion reflected_pair_cross_ratio(const Quaternion& q1, const Quaternion& q2, Tolerance tol) {
    if (q1.norm_sq() == 0.0 || q2.norm_sq() == 0.0) {
        throw Error(ErrorCode::DivisionByZero, "reflection through the unit sphere needs q != 0");
    }
    return cross_ratio(q1, q2, inverse(q1.conj()), inverse(q2.conj()), tol).finite();
}

double pseudo_distance_disc(const Quaternion& q1, const Quaternion& q2) {
    require_disc(q1);
    require_disc(q2);
    // Fixed argument order makes the result bitwise symmetric.
    const auto key = [](const Quaternion& q) { return std::tie(q.w, q.x, q.y, q.z); };
    const bool swap = key(q2) < key(q1);
    const Quaternion& p = swap ? q2 : q1;
    const Quaternion& q = swap ? q1 : q2;
    return distance(p, q) / (1.0 - p.conj() * q).norm();
}

double distance_disc(const Quaternion& q1, const Quaternion& q2) {
    const double r = pseudo_distance_disc(q1, q2);
    if (!(r < 1.0)) {
        throw Error(ErrorCode::InternalNumericError, "pseudo-hyperbolic distance reached 1");
    }
    return std::atanh(r);
}

double distance_disc_cross_ratio(const Quaternion& q1, const Quaternion& q2, Tolerance tol) {
    require_disc(q1);
    require_disc(q2);
    if (approx_equal(q1, q2, tol)) {
        return 0.0;
    }
    const GeodesicDisc g = geodesic_disc(q1, q2, tol);
    return 0.5 * std::log(cross_ratio(g.q1, g.q2, g.q3, g.q4, tol).finite().re());
}

double metric_disc(const Quaternion& q, const Quaternion& tau) {
    require_disc(q);
    return tau.norm() / (1.0 - q.norm_sq());
}

double integrated_length_disc(const std::vector<Quaternion>& path) {
    if (path.size() < 2) {
        throw Error(ErrorCode::TooFewSamples, "a path needs at least two samples");
    }
    for (const auto& p : path) {
        require_disc(p);
    }
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const Quaternion mid = 0.5 * (path[k] + path[k + 1]);
        total += metric_disc(mid, path[k + 1] - path[k]);
    }
    return total;
}

std::vector<Quaternion> geodesic_sample(const Quaternion& q1, const Quaternion& q2, int n, Tolerance tol) {
    if (n < 2) {
        throw Error(ErrorCode::TooFewSamples, "geodesic sampling needs n >= 2");
    }
    const NormalizingMap nm = normalizing_map(q1, q2, tol);
    const FLT back = inverse(nm.map());
    const double arclength = std::atanh(nm.t);
    std::vector<Quaternion> out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back(q1);
    for (int k = 1; k + 1 < n; ++k) {
        const double s = static_cast<double>(k) / (n - 1);
        out.push_back(back(std::tanh(s * arclength)).finite());
    }
    out.push_back(q2);
    return out;
}

ExtQuaternion cayley(const ExtQuaternion& q) { return apply_matrix(Mat2H::cayley(), q); }

ExtQuaternion cayley_inv(const ExtQuaternion& q) { return apply_matrix(Mat2H{1.0, -1.0, 1.0, 1.0}, q); }

double distance_halfspace(const Quaternion& q1, const Quaternion& q2) {
    require_halfspace(q1);
    require_halfspace(q2);
    const double d = distance_disc(cayley_inv(q1).finite(), cayley_inv(q2).finite());
#ifdef QUATMOB_SELF_CHECK
    if (d > 0.0) {
        const GeodesicHalfspace g = geodesic_halfspace_direct(q1, q2);
        if (g.q3.is_finite() && g.q4.is_finite() &&
            std::abs(distance_halfspace_cross_ratio(q1, q2) - d) > 1e-9 * (1.0 + d)) {
            throw Error(ErrorCode::InternalNumericError, "half-space distance routes disagree");
        }
    }
#endif
    return d;
}

GeodesicHalfspace geodesic_halfspace(const Quaternion& q1, const Quaternion& q2, Tolerance tol) {
    require_halfspace(q1);
    require_halfspace(q2);
    const GeodesicDisc g = geodesic_disc(cayley_inv(q1).finite(), cayley_inv(q2).finite(), tol);
    // Boundary points of the ball land on Re q = 0 up to rounding.
    const auto on_wall = [](const ExtQuaternion& e) { return e.is_infinite() ? e : ExtQuaternion(e.finite().im()); };
    const ExtQuaternion e3 = on_wall(cayley(g.q3));
    const ExtQuaternion e4 = on_wall(cayley(g.q4));
    const bool half_line = e3.is_infinite() || e4.is_infinite();
    return {q1, q2, e3, e4, half_line ? GeodesicHalfspace::Kind::HalfLine : GeodesicHalfspace::Kind::Arc};
}

GeodesicHalfspace geodesic_halfspace_direct(const Quaternion& q1, const Quaternion& q2, Tolerance tol) {
    require_halfspace(q1);
    require_halfspace(q2);
    if (approx_equal(q1, q2, tol)) {
        throw Error(ErrorCode::CoincidentPoints, "geodesic needs two distinct points");
    }
    const Quaternion shift = q2.im() - q1.im();
    const double gap = shift.norm();
    if (gap <= tol.atol * (1.0 + q1.norm() + q2.norm())) {
        const Quaternion foot = 0.5 * (q1.im() + q2.im());
        const auto inf = ExtQuaternion::infinity();
        if (q2.w > q1.w) {
            return {q1, q2, inf, foot, GeodesicHalfspace::Kind::HalfLine};
        }
        return {q1, q2, foot, inf, GeodesicHalfspace::Kind::HalfLine};
    }
    // Coordinates (Re, e) with e = shift / gap: q1 = (x1, 0), q2 = (x2, gap).
    const Quaternion e = shift / gap;
    const double x1 = q1.w;
    const double x2 = q2.w;
    const double offset = (x2 * x2 + gap * gap - x1 * x1) / (2.0 * gap);
    const double radius = std::hypot(x1, offset);
    const Quaternion centre = q1.im() + offset * e;
    return {q1, q2, centre + radius * e, centre - radius * e, GeodesicHalfspace::Kind::Arc};
}

double distance_halfspace_cross_ratio(const Quaternion& q1, const Quaternion& q2, Tolerance tol) {
    require_halfspace(q1);
    require_halfspace(q2);
    if (approx_equal(q1, q2, tol)) {
        return 0.0;
    }
    const GeodesicHalfspace g = geodesic_halfspace_direct(q1, q2, tol);
    return 0.5 * std::log(cross_ratio(g.q1, g.q2, g.q3, g.q4, tol).finite().re());
}

double metric_halfspace(const Quaternion& q, const Quaternion& tau) {
    require_halfspace(q);
    return tau.norm() / (2.0 * q.w);
}

}  // namespace quatmob
