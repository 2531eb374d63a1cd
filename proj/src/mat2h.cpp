#include "quatmob/mat2h.hpp"

#include <algorithm>
#include <array>

namespace quatmob {

double Mat2H::scale() const { return std::max({a.norm(), b.norm(), c.norm(), d.norm()}); }

bool Mat2H::is_finite() const { return a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite(); }

Mat2H mat_mul(const Mat2H& l, const Mat2H& r) {
    return {
        l.a * r.a + l.b * r.c,
        l.a * r.b + l.b * r.d,
        l.c * r.a + l.d * r.c,
        l.c * r.b + l.d * r.d,
    };
}

Mat2H operator*(double t, const Mat2H& m) { return {t * m.a, t * m.b, t * m.c, t * m.d}; }

Mat2H operator-(const Mat2H& l, const Mat2H& r) { return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d}; }

Mat2H conj_transpose(const Mat2H& m) { return {m.a.conj(), m.c.conj(), m.b.conj(), m.d.conj()}; }

double max_entry_diff(const Mat2H& l, const Mat2H& r) {
    return std::max({distance(l.a, r.a), distance(l.b, r.b), distance(l.c, r.c), distance(l.d, r.d)});
}

double det_h(const Mat2H& m) {
    const std::array<double, 4> mod{m.a.norm(), m.b.norm(), m.c.norm(), m.d.norm()};
    const auto pivot = std::max_element(mod.begin(), mod.end()) - mod.begin();
    if (mod[pivot] == 0.0) {
        return 0.0;
    }
    switch (pivot) {
        case 0: return mod[0] * (m.d - m.c * inverse(m.a) * m.b).norm();
        case 1: return mod[1] * (m.c - m.d * inverse(m.b) * m.a).norm();
        case 2: return mod[2] * (m.b - m.a * inverse(m.c) * m.d).norm();
        default: return mod[3] * (m.a - m.b * inverse(m.d) * m.c).norm();
    }
}

double det_h_squared_formula(const Mat2H& m, Tolerance tol) {
    const double ad = m.a.norm_sq() * m.d.norm_sq();
    const double cb = m.c.norm_sq() * m.b.norm_sq();
    const double radicand = ad + cb - 2.0 * (m.c * m.a.conj() * m.b * m.d.conj()).re();
    if (radicand >= 0.0) {
        return radicand;
    }
    if (tol.negligible(radicand, 2.0 * (ad + cb))) {
        return 0.0;
    }
    throw Error(ErrorCode::InternalNumericError, "negative determinant radicand");
}

Mat2H inverse_form_a(const Mat2H& m) {
    if (m.a.norm_sq() == 0.0) {
        throw Error(ErrorCode::Singular, "a-keyed inverse needs a != 0");
    }
    const Quaternion ai = inverse(m.a);
    const Quaternion schur = m.d - m.c * ai * m.b;
    if (schur.norm_sq() == 0.0) {
        throw Error(ErrorCode::Singular, "matrix is not invertible");
    }
    const Quaternion si = inverse(schur);
    return {
        ai + ai * m.b * si * m.c * ai,
        -(ai * m.b * si),
        -(si * m.c * ai),
        si,
    };
}

Mat2H inverse_form_b(const Mat2H& m) {
    if (m.b.norm_sq() == 0.0) {
        throw Error(ErrorCode::Singular, "b-keyed inverse needs b != 0");
    }
    const Quaternion bi = inverse(m.b);
    const Quaternion schur = m.c - m.d * bi * m.a;
    if (schur.norm_sq() == 0.0) {
        throw Error(ErrorCode::Singular, "matrix is not invertible");
    }
    const Quaternion ti = inverse(schur);
    return {
        -(ti * m.d * bi),
        ti,
        bi + bi * m.a * ti * m.d * bi,
        -(bi * m.a * ti),
    };
}

bool is_numerically_singular(const Mat2H& m) {
    const double s = m.scale();
    return det_h(m) <= 1e-6 * s * s;
}

Mat2H inverse(const Mat2H& m) {
    if (is_numerically_singular(m)) {
        throw Error(ErrorCode::Singular, "matrix is singular (det_h below threshold)");
    }
    return m.a.norm_sq() >= m.b.norm_sq() ? inverse_form_a(m) : inverse_form_b(m);
}

Mat2H normalize_det(const Mat2H& m) {
    const double det = det_h(m);
    if (det == 0.0 || !std::isfinite(det)) {
        throw Error(ErrorCode::Singular, "cannot normalize a singular matrix");
    }
    return (1.0 / std::sqrt(det)) * m;
}

std::string_view to_string(GroupTag tag) {
    switch (tag) {
        case GroupTag::GL2H: return "GL2H";
        case GroupTag::SL2H: return "SL2H";
        case GroupTag::Sp11: return "Sp11";
        case GroupTag::SLHplus: return "SLHplus";
        case GroupTag::CenterGL: return "CenterGL";
        case GroupTag::CenterSL: return "CenterSL";
    }
    return "Unknown";
}

namespace {

double form_scale(const Mat2H& m) {
    return 1.0 + std::max(m.a.norm_sq() + m.c.norm_sq(), m.b.norm_sq() + m.d.norm_sq());
}

}  // namespace

double sp11_residual(const Mat2H& m) {
    const Mat2H h = Mat2H::form_h();
    return max_entry_diff(conj_transpose(m) * h * m, h) / form_scale(m);
}

double slhplus_residual(const Mat2H& m) {
    const Mat2H k = Mat2H::form_k();
    return max_entry_diff(conj_transpose(m) * k * m, k) / form_scale(m);
}

bool is_sp11(const Mat2H& m, double tol) { return sp11_residual(m) <= tol; }
bool is_slhplus(const Mat2H& m, double tol) { return slhplus_residual(m) <= tol; }

std::vector<GroupTag> classify(const Mat2H& m, double tol) {
    std::vector<GroupTag> tags;
    const double det = det_h(m);
    if (det > tol) tags.push_back(GroupTag::GL2H);
    if (std::abs(det - 1.0) <= tol) tags.push_back(GroupTag::SL2H);
    if (is_sp11(m, tol)) tags.push_back(GroupTag::Sp11);
    if (is_slhplus(m, tol)) tags.push_back(GroupTag::SLHplus);

    const double bound = tol * (1.0 + m.scale());
    const bool scalar = m.b.norm() <= bound && m.c.norm() <= bound && m.a.im_norm() <= bound &&
                        m.d.im_norm() <= bound && std::abs(m.a.w - m.d.w) <= bound;
    if (scalar && std::abs(m.a.w) > tol) {
        tags.push_back(GroupTag::CenterGL);
        if (std::abs(std::abs(m.a.w) - 1.0) <= tol) tags.push_back(GroupTag::CenterSL);
    }
    return tags;
}

bool has_tag(const std::vector<GroupTag>& tags, GroupTag tag) {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Mat2H cayley_conjugate(const Mat2H& m) {
    const Mat2H c_inv{0.5, -0.5, 0.5, 0.5};
    return c_inv * m * Mat2H::cayley();
}

Mat2H cayley_unconjugate(const Mat2H& m) {
    const Mat2H c_inv{0.5, -0.5, 0.5, 0.5};
    return Mat2H::cayley() * m * c_inv;
}

}  // namespace quatmob
