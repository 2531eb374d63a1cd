#include "quatmob/flt.hpp"

namespace quatmob {

const Quaternion& ExtQuaternion::finite() const {
    if (!value_) {
        throw Error(ErrorCode::PoleInput, "point at infinity has no finite value");
    }
    return *value_;
}

bool approx_equal(const ExtQuaternion& p, const ExtQuaternion& q, Tolerance tol) {
    if (p.is_infinite() || q.is_infinite()) {
        return p.is_infinite() && q.is_infinite();
    }
    return approx_equal(p.finite(), q.finite(), tol);
}

std::string to_string(const ExtQuaternion& q) { return q.is_infinite() ? "inf" : to_string(q.finite()); }

FLT::FLT(const Mat2H& m) {
    if (!m.is_finite()) {
        throw Error(ErrorCode::ConstraintViolation, "matrix entries must be finite");
    }
    const double det = det_h(m);
    const double s = m.scale();
    if (!(det > 1e-12 * s * s)) {
        throw Error(ErrorCode::Singular, "fractional linear map needs an invertible matrix");
    }
    m_ = (1.0 / std::sqrt(det)) * m;
}

ExtQuaternion FLT::operator()(const ExtQuaternion& q) const { return apply_matrix(m_, q); }

ExtQuaternion apply_matrix(const Mat2H& m, const ExtQuaternion& q) {
    if (q.is_infinite()) {
        const double cn = m.c.norm();
        if (cn <= 1e-12 * std::max(m.a.norm(), cn)) {
            return ExtQuaternion::infinity();
        }
        return m.a * inverse(m.c);
    }
    const Quaternion& p = q.finite();
    const Quaternion den = m.c * p + m.d;
    if (den.norm() <= 1e-12 * (1.0 + m.c.norm() * p.norm() + m.d.norm())) {
        return ExtQuaternion::infinity();
    }
    return (m.a * p + m.b) * inverse(den);
}

ExtQuaternion apply(const FLT& f, const ExtQuaternion& q) { return apply_matrix(f.matrix(), q); }

ConstantCheck is_constant(const Mat2H& m, double tol) {
    if (m.c.norm_sq() == 0.0 && m.d.norm_sq() == 0.0) {
        throw Error(ErrorCode::BothZero, "c and d both vanish");
    }
    ConstantCheck out;
    if (det_h(m) > tol) {
        return out;
    }
    out.constant = true;
    if (m.d.norm_sq() != 0.0) {
        out.value = ExtQuaternion(m.b * inverse(m.d));
    } else {
        out.value = ExtQuaternion(m.a * inverse(m.c));
    }
    return out;
}

FLT compose(const FLT& f, const FLT& g) { return FLT(f.matrix() * g.matrix()); }

FLT inverse(const FLT& f) { return FLT(inverse(f.matrix())); }

bool same_map(const FLT& f, const FLT& g, double tol) {
    const Mat2H& p = f.matrix();
    const Mat2H& q = g.matrix();
    const double bound = tol * (1.0 + std::max(p.scale(), q.scale()));
    return max_entry_diff(p, q) <= bound || max_entry_diff(p, -1.0 * q) <= bound;
}

Rotation make_rotation(const Quaternion& a) {
    if (std::abs(a.norm() - 1.0) > 1e-9) {
        throw Error(ErrorCode::ConstraintViolation, "rotation needs a unit quaternion");
    }
    return Rotation{a / a.norm()};
}

Dilation make_dilation(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw Error(ErrorCode::ConstraintViolation, "dilation factor must be positive");
    }
    return Dilation{r};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kTrivial = 1e-15;

// Appends q -> mult q + shift as Dilation, Rotation, Translation.
void push_affine(std::vector<Generator>& out, const Quaternion& mult, const Quaternion& shift) {
    const double r = mult.norm();
    if (std::abs(r - 1.0) > kTrivial) {
        out.emplace_back(Dilation{r});
    }
    const Quaternion unit = mult / r;
    if (distance(unit, 1.0) > kTrivial) {
        out.emplace_back(Rotation{unit});
    }
    if (shift.norm() > 0.0) {
        out.emplace_back(Translation{shift});
    }
}

}  // namespace

FLT to_flt(const Generator& g) {
    return std::visit(overloaded{
                          [](const Translation& t) { return FLT(Mat2H{1.0, t.b, 0.0, 1.0}); },
                          [](const Rotation& r) { return FLT(Mat2H{r.a, 0.0, 0.0, 1.0}); },
                          [](const Dilation& d) { return FLT(Mat2H{d.r, 0.0, 0.0, 1.0}); },
                          [](const Inversion&) { return FLT::inversion(); },
                      },
                      g);
}

ExtQuaternion apply(const Generator& g, const ExtQuaternion& q) {
    return std::visit(overloaded{
                          [&](const Translation& t) -> ExtQuaternion {
                              if (q.is_infinite()) return q;
                              return q.finite() + t.b;
                          },
                          [&](const Rotation& r) -> ExtQuaternion {
                              if (q.is_infinite()) return q;
                              return r.a * q.finite();
                          },
                          [&](const Dilation& d) -> ExtQuaternion {
                              if (q.is_infinite()) return q;
                              return d.r * q.finite();
                          },
                          [&](const Inversion&) -> ExtQuaternion {
                              if (q.is_infinite()) return Quaternion{};
                              if (q.finite().norm_sq() == 0.0) return ExtQuaternion::infinity();
                              return inverse(q.finite());
                          },
                      },
                      g);
}

Generator inverse(const Generator& g) {
    return std::visit(overloaded{
                          [](const Translation& t) -> Generator { return Translation{-t.b}; },
                          [](const Rotation& r) -> Generator { return Rotation{r.a.conj()}; },
                          [](const Dilation& d) -> Generator { return Dilation{1.0 / d.r}; },
                          [](const Inversion& i) -> Generator { return i; },
                      },
                      g);
}

std::vector<Generator> decompose_generators(const FLT& f) {
    const Mat2H& m = f.matrix();
    std::vector<Generator> out;
    if (m.c.norm() > 1e-13 * m.scale()) {
        const Quaternion ac = m.a * inverse(m.c);
        const Quaternion residue = m.b - ac * m.d;
        push_affine(out, m.c, m.d);
        out.emplace_back(Inversion{});
        push_affine(out, residue, ac);
        return out;
    }
    const Quaternion shift = m.b * inverse(m.d);
    if (m.d.im_norm() <= kTrivial * m.d.norm()) {
        push_affine(out, m.a / m.d.w, shift);
        return out;
    }
    // Right multiplication by d^{-1} is not elementary: q d^{-1} = (d q^{-1})^{-1}.
    out.emplace_back(Inversion{});
    push_affine(out, m.d, 0.0);
    out.emplace_back(Inversion{});
    push_affine(out, m.a, shift);
    return out;
}

ExtQuaternion apply_generators(const std::vector<Generator>& gens, const ExtQuaternion& q) {
    ExtQuaternion p = q;
    for (const auto& g : gens) {
        p = quatmob::apply(g, p);
    }
    return p;
}

FLT compose_generators(const std::vector<Generator>& gens) {
    FLT out = FLT::identity();
    for (const auto& g : gens) {
        out = compose(to_flt(g), out);
    }
    return out;
}

RealMat4 jacobian(const FLT& f, const Quaternion& q) {
    const double h = 1e-6 * (1.0 + q.norm());
    const auto eval = [&](const Quaternion& p) {
        const ExtQuaternion v = f(p);
        if (v.is_infinite()) {
            throw Error(ErrorCode::PoleInput, "jacobian evaluated at or next to a pole");
        }
        return v.finite();
    };
    eval(q);
    const std::array<Quaternion, 4> basis{Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    RealMat4 jac{};
    for (int col = 0; col < 4; ++col) {
        const Quaternion step = basis[col] * h;
        const Quaternion diff = (eval(q + step) - eval(q - step)) / (2.0 * h);
        jac[0][col] = diff.w;
        jac[1][col] = diff.x;
        jac[2][col] = diff.y;
        jac[3][col] = diff.z;
    }
    return jac;
}

Quaternion mat_vec(const RealMat4& m, const Quaternion& v) {
    const std::array<double, 4> in{v.w, v.x, v.y, v.z};
    std::array<double, 4> out{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out[r] += m[r][c] * in[c];
        }
    }
    return {out[0], out[1], out[2], out[3]};
}

Conformality conformality(const RealMat4& jac) {
    RealMat4 gram{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            for (int k = 0; k < 4; ++k) {
                gram[r][c] += jac[k][r] * jac[k][c];
            }
        }
    }
    const double lambda_sq = (gram[0][0] + gram[1][1] + gram[2][2] + gram[3][3]) / 4.0;
    double residual = 0.0;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            residual = std::max(residual, std::abs(gram[r][c] - (r == c ? lambda_sq : 0.0)));
        }
    }
    return {std::sqrt(lambda_sq), residual};
}

FLT three_point_map(const ExtQuaternion& alpha, const ExtQuaternion& beta, const ExtQuaternion& gamma,
                    Tolerance tol) {
    if (approx_equal(alpha, beta, tol) || approx_equal(alpha, gamma, tol) || approx_equal(beta, gamma, tol)) {
        throw Error(ErrorCode::CoincidentPoints, "three-point normalization needs distinct points");
    }
    // (g - b)(g - a)^{-1} (q - a)(q - b)^{-1}, dropping factors that contain infinity.
    if (alpha.is_infinite()) {
        const Quaternion& b = beta.finite();
        return FLT(Mat2H{0.0, gamma.finite() - b, 1.0, -b});
    }
    if (beta.is_infinite()) {
        const Quaternion& a = alpha.finite();
        const Quaternion k = inverse(gamma.finite() - a);
        return FLT(Mat2H{k, -(k * a), 0.0, 1.0});
    }
    const Quaternion& a = alpha.finite();
    const Quaternion& b = beta.finite();
    if (gamma.is_infinite()) {
        return FLT(Mat2H{1.0, -a, 1.0, -b});
    }
    const Quaternion k = (gamma.finite() - b) * inverse(gamma.finite() - a);
    return FLT(Mat2H{k, -(k * a), 1.0, -b});
}

MobiusCanonical MobiusCanonical::make(const Quaternion& alpha, const Quaternion& beta, const Quaternion& q0,
                                      Tolerance tol) {
    if (!tol.close(alpha.norm(), 1.0) || !tol.close(beta.norm(), 1.0)) {
        throw Error(ErrorCode::ConstraintViolation, "canonical alpha and beta must be unit quaternions");
    }
    if (!(q0.norm() < 1.0)) {
        throw Error(ErrorCode::ConstraintViolation, "canonical q0 must lie in the open unit ball");
    }
    return {alpha, beta, q0};
}

Mat2H canonical_matrix(const MobiusCanonical& g) {
    return {g.alpha, -(g.alpha * g.q0), -(g.beta * g.q0.conj()), g.beta};
}

FLT to_flt(const MobiusCanonical& g) { return FLT(canonical_matrix(g)); }

Quaternion apply(const MobiusCanonical& g, const Quaternion& q) {
    const Quaternion den = 1.0 - g.q0.conj() * q;
    if (den.norm_sq() == 0.0) {
        throw Error(ErrorCode::PoleInput, "point is the pole of the canonical map");
    }
    return g.alpha * (q - g.q0) * inverse(den) * inverse(g.beta);
}

MobiusCanonical to_canonical_disc(const Mat2H& m, double tol) {
    const double det = det_h(m);
    if (!(det > 0.0)) {
        throw Error(ErrorCode::NotSp11, "singular matrix is not in Sp(1,1)");
    }
    const Mat2H n = (1.0 / std::sqrt(det)) * m;
    if (!is_sp11(n, tol)) {
        throw Error(ErrorCode::NotSp11, "matrix does not preserve the form diag(1,-1)");
    }
    return {n.a / n.a.norm(), n.d / n.d.norm(), -(inverse(n.a) * n.b)};
}

MobiusCanonical canonical_compose(const MobiusCanonical& g1, const MobiusCanonical& g2) {
    const Quaternion& a = g1.alpha;
    const Quaternion& b = g1.beta;
    const Quaternion& q0 = g1.q0;
    const Quaternion& c = g2.alpha;
    const Quaternion& d = g2.beta;
    const Quaternion& p0 = g2.q0;

    const Quaternion top = a * c + a * q0 * d * p0.conj();
    const Quaternion bottom = b * d + b * q0.conj() * c * p0;
    const Quaternion numer = p0 + p0 * q0.norm_sq() + c.conj() * q0 * d + p0 * d.conj() * q0.conj() * c * p0;
    return {top / top.norm(), bottom / bottom.norm(), numer / top.norm_sq()};
}

MobiusCanonical canonical_inverse(const MobiusCanonical& g) {
    return {inverse(g.alpha), inverse(g.beta), -(g.alpha * g.q0 * g.beta.conj())};
}

double canonical_det_check(const MobiusCanonical& g) { return det_h(canonical_matrix(g)); }

FLT isotropy_at_infinity(const Quaternion& b, const Quaternion& d, Tolerance tol) {
    if (d.norm_sq() == 0.0) {
        throw Error(ErrorCode::ZeroD, "isotropy map needs d != 0");
    }
    const Quaternion shift = b * inverse(d);
    if (!tol.negligible(shift.re(), shift.norm())) {
        throw Error(ErrorCode::NonImaginaryShift, "Re(b d^{-1}) must vanish");
    }
    return FLT(Mat2H{d / d.norm_sq(), b, 0.0, d});
}

FLT halfspace_general(const Quaternion& alpha, const Quaternion& beta, const Quaternion& gamma, Tolerance tol) {
    if (alpha.norm_sq() == 0.0) {
        throw Error(ErrorCode::ConstraintViolation, "alpha must be nonzero");
    }
    if (!tol.negligible(gamma.re(), gamma.norm())) {
        throw Error(ErrorCode::ConstraintViolation, "gamma must be purely imaginary");
    }
    const Quaternion ratio = beta * inverse(alpha);
    if (!tol.negligible(ratio.re(), ratio.norm())) {
        throw Error(ErrorCode::ConstraintViolation, "Re(beta alpha^{-1}) must vanish");
    }
    const double s = 1.0 / alpha.norm_sq();
    return FLT(Mat2H{s * (gamma * alpha), gamma * beta + alpha, s * alpha, beta});
}

}  // namespace quatmob
