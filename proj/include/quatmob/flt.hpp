#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "quatmob/mat2h.hpp"

namespace quatmob {

/// A point of H u {inf}.
class ExtQuaternion {
public:
    ExtQuaternion(const Quaternion& q) : value_(q) {}  // NOLINT: finite points embed implicitly
    ExtQuaternion(double r) : value_(Quaternion(r)) {}  // NOLINT

    static ExtQuaternion infinity() { return ExtQuaternion(); }

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    /// Throws PoleInput when called on infinity.
    const Quaternion& finite() const;

    bool operator==(const ExtQuaternion&) const = default;

private:
    ExtQuaternion() = default;
    std::optional<Quaternion> value_;
};

/// Both infinite, or both finite and approx_equal.
bool approx_equal(const ExtQuaternion& p, const ExtQuaternion& q, Tolerance tol = default_tolerance());
std::string to_string(const ExtQuaternion& q);

/// Fractional linear transformation q -> (aq + b)(cq + d)^{-1}. The stored
/// matrix is scaled to det_h = 1; as maps, m and -m coincide.
class FLT {
public:
    /// Throws Singular when the matrix is not invertible.
    explicit FLT(const Mat2H& m);

    static FLT identity() { return FLT(Mat2H::identity()); }
    /// q -> q^{-1}
    static FLT inversion() { return FLT(Mat2H{0.0, 1.0, 1.0, 0.0}); }

    const Mat2H& matrix() const { return m_; }

    ExtQuaternion operator()(const ExtQuaternion& q) const;

private:
    Mat2H m_;
};

/// Evaluates (aq + b)(cq + d)^{-1} for any matrix, invertible or not. A pole
/// (|cq + d| <= 1e-12 (1 + |c||q| + |d|)) maps to infinity; infinity maps to
/// a c^{-1}, or to infinity when c vanishes.
ExtQuaternion apply_matrix(const Mat2H& m, const ExtQuaternion& q);
ExtQuaternion apply(const FLT& f, const ExtQuaternion& q);

struct ConstantCheck {
    bool constant = false;
    /// The constant value b d^{-1} (or a c^{-1} when d = 0).
    std::optional<ExtQuaternion> value;
};

/// A matrix defines a constant map exactly when det_h <= tol. Throws BothZero
/// when c = d = 0.
ConstantCheck is_constant(const Mat2H& m, double tol = default_tolerance().atol);

/// f o g, renormalized.
FLT compose(const FLT& f, const FLT& g);
FLT inverse(const FLT& f);

/// Equality as maps: matrices agree up to sign within tol.
bool same_map(const FLT& f, const FLT& g, double tol = 1e-9);

struct Translation { Quaternion b; };    ///< q -> q + b
struct Rotation { Quaternion a; };       ///< q -> a q, |a| = 1
struct Dilation { double r; };           ///< q -> r q, r > 0
struct Inversion {};                     ///< q -> q^{-1}

using Generator = std::variant<Translation, Rotation, Dilation, Inversion>;

Rotation make_rotation(const Quaternion& a);  ///< throws ConstraintViolation unless |a| = 1
Dilation make_dilation(double r);             ///< throws ConstraintViolation unless r > 0

FLT to_flt(const Generator& g);
ExtQuaternion apply(const Generator& g, const ExtQuaternion& q);
/// Inverse generator (same kind).
Generator inverse(const Generator& g);

/// Factorization into elementary maps, listed in the order they act (the
/// first element is applied first). For c != 0 it follows
///   L(q) = a c^{-1} + (b - a c^{-1} d)(cq + d)^{-1};
/// for c = 0 it uses (aq + b) d^{-1} = a (d q^{-1})^{-1} + b d^{-1}. Trivial
/// factors (unit dilation, rotation by 1, zero translation) are dropped.
std::vector<Generator> decompose_generators(const FLT& f);

/// Applies generators in list order.
ExtQuaternion apply_generators(const std::vector<Generator>& gens, const ExtQuaternion& q);
FLT compose_generators(const std::vector<Generator>& gens);

using RealMat4 = std::array<std::array<double, 4>, 4>;

/// Real differential at q by central differences, h = 1e-6 (1 + |q|).
/// Column k is the derivative along the k-th basis element (1, i, j, k).
/// Throws PoleInput when q or a stencil point is a pole.
RealMat4 jacobian(const FLT& f, const Quaternion& q);

/// Apply a real 4x4 matrix to a quaternion viewed as a vector of R^4.
Quaternion mat_vec(const RealMat4& m, const Quaternion& v);

struct Conformality {
    double lambda;    ///< dilation coefficient, sqrt(trace(J^T J) / 4)
    double residual;  ///< max entry of |J^T J - lambda^2 I|
};
Conformality conformality(const RealMat4& jac);

/// Map sending alpha -> 0, beta -> inf, gamma -> 1. Throws CoincidentPoints.
FLT three_point_map(const ExtQuaternion& alpha, const ExtQuaternion& beta, const ExtQuaternion& gamma,
                    Tolerance tol = default_tolerance());

/// g(q) = alpha (q - q0)(1 - conj(q0) q)^{-1} beta^{-1}, the unique form of a
/// Moebius map of the unit ball.
struct MobiusCanonical {
    Quaternion alpha;
    Quaternion beta;
    Quaternion q0;

    /// Throws ConstraintViolation unless |alpha| = |beta| = 1 and |q0| < 1.
    static MobiusCanonical make(const Quaternion& alpha, const Quaternion& beta, const Quaternion& q0,
                                Tolerance tol = default_tolerance());
};

/// [[alpha, -alpha q0], [-beta conj(q0), beta]]; det_h = 1 - |q0|^2.
Mat2H canonical_matrix(const MobiusCanonical& g);
FLT to_flt(const MobiusCanonical& g);
Quaternion apply(const MobiusCanonical& g, const Quaternion& q);

/// Reads alpha = a/|a|, beta = d/|d|, q0 = -a^{-1} b. Accepts any positive
/// multiple of an Sp(1,1) matrix; throws NotSp11 otherwise.
MobiusCanonical to_canonical_disc(const Mat2H& m, double tol = 1e-9);

/// Canonical parameters of g1 o g2 from the closed-form composition law.
MobiusCanonical canonical_compose(const MobiusCanonical& g1, const MobiusCanonical& g2);
/// (alpha^{-1}, beta^{-1}, -alpha q0 conj(beta)).
MobiusCanonical canonical_inverse(const MobiusCanonical& g);
/// det_h(canonical_matrix(g)); equals 1 - |q0|^2.
double canonical_det_check(const MobiusCanonical& g);

/// Stabilizer of infinity in the half-space group: [[|d|^{-2} d, b], [0, d]],
/// i.e. q -> |d|^{-2} d q d^{-1} + b d^{-1}. Requires Re(b d^{-1}) = 0.
FLT isotropy_at_infinity(const Quaternion& b, const Quaternion& d, Tolerance tol = default_tolerance());

/// General half-space map [[|a|^{-2} g a, g b + a], [|a|^{-2} a, b]] for
/// alpha = a, beta = b, gamma = g with Re g = 0 = Re(b a^{-1}); sends inf to g.
FLT halfspace_general(const Quaternion& alpha, const Quaternion& beta, const Quaternion& gamma,
                      Tolerance tol = default_tolerance());

}  // namespace quatmob
