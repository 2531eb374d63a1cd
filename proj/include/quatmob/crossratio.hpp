#pragma once

#include "quatmob/flt.hpp"

namespace quatmob {

/// CR(q1, q2, q3, q4) = (q1 - q3)(q1 - q4)^{-1}(q2 - q4)(q2 - q3)^{-1}.
///
/// At most one argument may be infinite; the two factors containing it are
/// replaced by 1. For q4 = inf this is the exact limit. In the other
/// positions the limit depends on the direction of approach up to a
/// quaternionic conjugation, which leaves Re(CR) and |Im(CR)| unchanged.
///
/// q1 = q2 yields 1. Any other coincidence throws CoincidentPoints.
ExtQuaternion cross_ratio(const ExtQuaternion& q1, const ExtQuaternion& q2, const ExtQuaternion& q3,
                          const ExtQuaternion& q4, Tolerance tol = default_tolerance());

/// The four points lie on one circle or affine line: |Im CR| <= tol (1 + |CR|).
bool is_concyclic(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3, const Quaternion& q4,
                  double tol = 1e-9);

/// Pairs (q1, q2) and (q3, q4) interleave on their common circle, i.e. CR < 0.
/// Throws NotConcyclic when the points are not on one circle.
bool separates(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3, const Quaternion& q4,
               double tol = 1e-9);

/// Zero set of alpha |q|^2 + beta q + conj(q) conj(beta) + gamma = 0: a 3-sphere
/// (alpha != 0) or an affine 3-plane (alpha = 0). Coefficients are stored
/// unnormalized.
struct QuadricF3 {
    double alpha = 0.0;
    Quaternion beta;
    double gamma = 0.0;

    /// Left-hand side; real because beta q + conj(beta q) = 2 Re(beta q).
    double evaluate(const Quaternion& q) const;
    /// Sum of the magnitudes of the three terms at q, used as a scale.
    double magnitude(const Quaternion& q) const;
};

/// Sphere |q - center| = radius.
QuadricF3 sphere(const Quaternion& center, double radius);
/// Affine plane Re(normal q) = offset, i.e. <conj(normal), q> = offset.
QuadricF3 plane(const Quaternion& normal, double offset);

bool on_quadric(const Quaternion& q, const QuadricF3& quad, double tol = 1e-9);

/// Proportionality of the six real coefficients.
bool same_quadric(const QuadricF3& p, const QuadricF3& q, double tol = 1e-9);

/// Image of the zero set under g (pushforward): substitutes g^{-1}(q) into the
/// equation and clears denominators. Throws DegenerateResult if all output
/// coefficients vanish.
QuadricF3 transform_quadric(const Generator& g, const QuadricF3& quad);

}  // namespace quatmob
