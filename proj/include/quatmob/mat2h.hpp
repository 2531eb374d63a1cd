#pragma once

#include <vector>

#include "quatmob/quat.hpp"

namespace quatmob {

/// 2x2 quaternionic matrix [[a, b], [c, d]].
struct Mat2H {
    Quaternion a, b, c, d;

    static constexpr Mat2H identity() { return {1.0, 0.0, 0.0, 1.0}; }
    /// diag(1, -1), the form preserved by Sp(1,1).
    static constexpr Mat2H form_h() { return {1.0, 0.0, 0.0, -1.0}; }
    /// antidiag(1, 1), the form preserved by SL(H+).
    static constexpr Mat2H form_k() { return {0.0, 1.0, 1.0, 0.0}; }
    /// Matrix of the Cayley map q -> (1 + q)(1 - q)^{-1}.
    static constexpr Mat2H cayley() { return {1.0, 1.0, -1.0, 1.0}; }

    constexpr bool operator==(const Mat2H&) const = default;

    /// Largest entry modulus.
    double scale() const;
    bool is_finite() const;
};

Mat2H mat_mul(const Mat2H& lhs, const Mat2H& rhs);
inline Mat2H operator*(const Mat2H& lhs, const Mat2H& rhs) { return mat_mul(lhs, rhs); }
Mat2H operator*(double t, const Mat2H& m);
Mat2H operator-(const Mat2H& lhs, const Mat2H& rhs);

/// Conjugate transpose  t(conj A).
Mat2H conj_transpose(const Mat2H& m);

/// Largest entrywise difference |lhs_ij - rhs_ij|.
double max_entry_diff(const Mat2H& lhs, const Mat2H& rhs);

/// Dieudonne determinant. Evaluated as |p| |s| where p is the entry of
/// largest modulus and s its Schur complement (e.g. |a| |d - c a^{-1} b|);
/// all four choices agree in exact arithmetic.
double det_h(const Mat2H& m);

/// The radicand |a|^2|d|^2 + |c|^2|b|^2 - 2 Re(c conj(a) b conj(d)), i.e.
/// det_h^2 by its defining formula. Negative values within tolerance of the
/// summed magnitudes clamp to 0; larger negatives throw InternalNumericError.
double det_h_squared_formula(const Mat2H& m, Tolerance tol = default_tolerance());

/// Inverse with the block formula keyed on a (requires a != 0 and
/// d - c a^{-1} b != 0). Throws Singular otherwise.
Mat2H inverse_form_a(const Mat2H& m);
/// Inverse with the block formula keyed on b.
Mat2H inverse_form_b(const Mat2H& m);

/// Singularity threshold used by inverse(): det_h <= 1e-6 * scale^2.
bool is_numerically_singular(const Mat2H& m);

/// Two-sided inverse. Uses the a-keyed form when |a| >= |b| and the b-keyed
/// form otherwise. Throws Singular when is_numerically_singular(m).
Mat2H inverse(const Mat2H& m);

/// m / sqrt(det_h(m)), so the result has det_h = 1. Throws Singular.
Mat2H normalize_det(const Mat2H& m);

enum class GroupTag { GL2H, SL2H, Sp11, SLHplus, CenterGL, CenterSL };

std::string_view to_string(GroupTag tag);

/// Residual of t(conj A) H A = H (resp. K), scaled so that a value <= tol
/// means membership. The scale is 1 + the largest column norm squared.
double sp11_residual(const Mat2H& m);
double slhplus_residual(const Mat2H& m);

bool is_sp11(const Mat2H& m, double tol = 1e-9);
bool is_slhplus(const Mat2H& m, double tol = 1e-9);

/// All group tags whose defining identities hold within tol, in enum order.
std::vector<GroupTag> classify(const Mat2H& m, double tol = 1e-9);
bool has_tag(const std::vector<GroupTag>& tags, GroupTag tag);

/// C^{-1} A C with C the Cayley matrix: SL(H+) -> Sp(1,1).
Mat2H cayley_conjugate(const Mat2H& m);
/// C A C^{-1}: Sp(1,1) -> SL(H+).
Mat2H cayley_unconjugate(const Mat2H& m);

}  // namespace quatmob
