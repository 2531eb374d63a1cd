#pragma once

#include <vector>

#include "quatmob/crossratio.hpp"

namespace quatmob {

/// Non-Euclidean line of the unit ball through q1 and q2. The ends are
/// ordered so that q1, q2, q3, q4 run cyclically: q3 lies beyond q2 and q4
/// beyond q1, which makes CR(q1, q2, q3, q4) = (1 + t)/(1 - t) > 1.
struct GeodesicDisc {
    enum class Kind { Diameter, Circle };

    Quaternion q1, q2;
    Quaternion q3, q4;
    Kind kind;
};

/// Non-Euclidean line of the right half-space Re q > 0. Finite ends are
/// purely imaginary; one end may be infinite.
struct GeodesicHalfspace {
    enum class Kind { HalfLine, Arc };

    Quaternion q1, q2;
    ExtQuaternion q3, q4;
    Kind kind;
};

std::string_view to_string(GeodesicDisc::Kind kind);
std::string_view to_string(GeodesicHalfspace::Kind kind);

bool in_disc(const Quaternion& q);
bool in_halfspace(const Quaternion& q);

/// L(q) = l1 (q - q1)(1 - conj(q1) q)^{-1} l2 with l1 = |q2 - q1| (q2 - q1)^{-1}
/// and l2 = (1 - conj(q1) q2) / |1 - conj(q1) q2|: sends q1 to 0 and q2 to
/// t in (0, 1).
struct NormalizingMap {
    MobiusCanonical canonical;
    double t;

    FLT map() const { return to_flt(canonical); }
};

NormalizingMap normalizing_map(const Quaternion& q1, const Quaternion& q2, Tolerance tol = default_tolerance());

GeodesicDisc geodesic_disc(const Quaternion& q1, const Quaternion& q2, Tolerance tol = default_tolerance());

/// CR(q1, q2, conj(q1)^{-1}, conj(q2)^{-1}); real for every admissible pair,
/// since the four points lie on the geodesic circle. Requires q1, q2 != 0.
Quaternion reflected_pair_cross_ratio(const Quaternion& q1, const Quaternion& q2,
                                      Tolerance tol = default_tolerance());

/// |q1 - q2| |1 - conj(q1) q2|^{-1}; the pseudo-hyperbolic distance.
double pseudo_distance_disc(const Quaternion& q1, const Quaternion& q2);

/// (1/2) log((1 + r)/(1 - r)) with r the pseudo-hyperbolic distance.
double distance_disc(const Quaternion& q1, const Quaternion& q2);

/// (1/2) log CR(q1, q2, q3, q4) through the geodesic ends.
double distance_disc_cross_ratio(const Quaternion& q1, const Quaternion& q2, Tolerance tol = default_tolerance());

/// |tau| / (1 - |q|^2)
double metric_disc(const Quaternion& q, const Quaternion& tau);

/// Composite midpoint sum of metric_disc along a polyline.
double integrated_length_disc(const std::vector<Quaternion>& path);

/// n points on the geodesic from q1 to q2, equally spaced in hyperbolic
/// arclength; the first is q1 and the last q2.
std::vector<Quaternion> geodesic_sample(const Quaternion& q1, const Quaternion& q2, int n,
                                        Tolerance tol = default_tolerance());

/// psi(q) = (1 + q)(1 - q)^{-1}; psi(1) = inf, psi(inf) = -1.
ExtQuaternion cayley(const ExtQuaternion& q);
/// psi^{-1}(q) = (q - 1)(q + 1)^{-1}.
ExtQuaternion cayley_inv(const ExtQuaternion& q);

/// Distance of the half-space, pulled back to the ball through psi.
double distance_halfspace(const Quaternion& q1, const Quaternion& q2);

/// Ends of the half-space geodesic as images of the ball geodesic ends.
GeodesicHalfspace geodesic_halfspace(const Quaternion& q1, const Quaternion& q2,
                                     Tolerance tol = default_tolerance());

/// Half-space geodesic built in H+ itself: a half-line above the common
/// imaginary part, or a semicircle centred on Re q = 0 in the plane spanned
/// by 1 and Im(q2 - q1).
GeodesicHalfspace geodesic_halfspace_direct(const Quaternion& q1, const Quaternion& q2,
                                            Tolerance tol = default_tolerance());

/// (1/2) log CR(q1, q2, q3, q4) with the ends of geodesic_halfspace_direct.
double distance_halfspace_cross_ratio(const Quaternion& q1, const Quaternion& q2,
                                      Tolerance tol = default_tolerance());

/// |tau| / (2 Re q)
double metric_halfspace(const Quaternion& q, const Quaternion& tau);

}  // namespace quatmob
