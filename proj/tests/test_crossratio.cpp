#include "oracles.hpp"
#include "quatmob/crossratio.hpp"
#include "quatmob/sampling.hpp"
#include "support.hpp"

using namespace quatmob;
using namespace testing;

namespace {

Quaternion cr(const ExtQuaternion& a, const ExtQuaternion& b, const ExtQuaternion& c, const ExtQuaternion& d) {
    return cross_ratio(a, b, c, d).finite();
}

// Four points on a random circle of R^4, in increasing angle order.
std::array<Quaternion, 4> circle_points(Sampler& s) {
    const Quaternion centre = s.gaussian();
    const double radius = s.uniform(0.2, 3.0);
    const Quaternion u = s.unit();
    Quaternion v = s.unit();
    v = v - dot(u, v) * u;
    v = v / v.norm();
    // jittered quarter turns keep the points apart and in cyclic order
    const double start = s.uniform(0.0, 2.0 * M_PI);
    std::array<Quaternion, 4> out;
    for (int k = 0; k < 4; ++k) {
        const double t = start + k * M_PI / 2.0 + s.uniform(-0.6, 0.6);
        out[k] = centre + radius * (std::cos(t) * u + std::sin(t) * v);
    }
    return out;
}

}  // namespace

TEST_CASE("cross-ratio values") {
    const Quaternion q0 = 2.0 + I;
    CHECK(qdist(cr(q0, 1.0, 0.0, ExtQuaternion::infinity()), q0) < 1e-15);
    CHECK(std::abs(cr(0.0, 0.5, 1.0, -1.0).w - 3.0) <= 1e-12);
    CHECK(cr(0.0, 0.5, 1.0, -1.0).im_norm() == 0.0);
    CHECK(cr(J, J, 1.0, K) == Quaternion(1.0));
    CHECK(std::abs(cr(0.0, 2.0, 1.0, -1.0).w + 3.0) < 1e-15);
    CHECK(error_of([] { cross_ratio(0.0, 1.0, 1.0, 2.0); }) == ErrorCode::CoincidentPoints);
    CHECK(error_of([] {
              cross_ratio(0.0, 1.0, ExtQuaternion::infinity(), ExtQuaternion::infinity());
          }) == ErrorCode::CoincidentPoints);
}

TEST_CASE("infinity in the last slot is the limit") {
    Sampler s(41);
    for (int n = 0; n < 100; ++n) {
        const Quaternion a = s.gaussian();
        const Quaternion b = s.gaussian();
        const Quaternion c = s.gaussian();
        const Quaternion far = 1e8 * s.unit();
        const Quaternion limit = cr(a, b, c, ExtQuaternion::infinity());
        CHECK(qdist(cr(a, b, c, far), limit) <= 1e-6 * (1.0 + limit.norm()));
    }
}

TEST_CASE("concyclicity values") {
    CHECK(is_concyclic(0.0, 0.5, 1.0, -1.0));
    const Quaternion a = 0.5 * I;
    const Quaternion b = 0.5 * J;
    const Quaternion ra = inverse(a.conj());
    const Quaternion rb = inverse(b.conj());
    CHECK(is_concyclic(a, b, ra, rb));
    // (1 - |a|^2)(1 - |b|^2) / |1 - conj(a) b|^2 = (9/16) / (17/16)
    CHECK(qdist(cr(a, b, ra, rb), 9.0 / 17.0) < 1e-14);

    CHECK_FALSE(is_concyclic(0.0, 1.0, I, 1.0 + J));
    CHECK_FALSE(oracle::concyclic_by_fit(0.0, 1.0, I, 1.0 + J, 1e-9));
    CHECK(cr(0.0, 1.0, I, 1.0 + J).im_norm() > 0.1);
}

TEST_CASE("concyclic iff real cross-ratio") {
    Sampler s(42);
    for (int n = 0; n < 1000; ++n) {
        auto p = circle_points(s);
        CHECK(oracle::concyclic_by_fit(p[0], p[1], p[2], p[3], 1e-9));
        CHECK(is_concyclic(p[0], p[1], p[2], p[3]));
        // points in cyclic order: q1, q2 adjacent and q3 after q2
        CHECK(cr(p[0], p[1], p[2], p[3]).w > 1.0);

        const Quaternion g[4] = {s.gaussian(), s.gaussian(), s.gaussian(), s.gaussian()};
        const bool fit = oracle::concyclic_by_fit(g[0], g[1], g[2], g[3], 1e-6);
        CHECK_FALSE(fit);
        CHECK_FALSE(is_concyclic(g[0], g[1], g[2], g[3]));
    }
}

TEST_CASE("separation") {
    CHECK(separates(0.0, 2.0, 1.0, -1.0));
    CHECK_FALSE(separates(0.0, 0.5, 1.0, -1.0));
    CHECK(separates(I, -I, 1.0, -1.0));
    CHECK(qdist(cr(I, -I, 1.0, -1.0), -1.0) < 1e-15);
    CHECK(error_of([] { separates(0.0, 1.0, I, 1.0 + J); }) == ErrorCode::NotConcyclic);
}

TEST_CASE("generator covariance") {
    Sampler s(43);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion q[4] = {s.gaussian(), s.gaussian(), s.gaussian(), s.gaussian()};
        const Quaternion base = cr(q[0], q[1], q[2], q[3]);
        const double tol = 1e-9 * (1.0 + base.norm());

        const Quaternion b = s.gaussian();
        CHECK(qdist(cr(q[0] + b, q[1] + b, q[2] + b, q[3] + b), base) <= tol);
        const double r = s.uniform(0.2, 5.0);
        CHECK(qdist(cr(r * q[0], r * q[1], r * q[2], r * q[3]), base) <= tol);
        const Quaternion a = s.unit();
        CHECK(qdist(cr(a * q[0], a * q[1], a * q[2], a * q[3]), a * base * inverse(a)) <= tol);
        const Quaternion inv = cr(inverse(q[0]), inverse(q[1]), inverse(q[2]), inverse(q[3]));
        CHECK(qdist(inv, inverse(q[2]) * base * q[2]) <= tol);
    }
}

TEST_CASE("real part and imaginary modulus are invariant") {
    Sampler s(44);
    for (int n = 0; n < 500; ++n) {
        const Quaternion q[4] = {s.gaussian(), s.gaussian(), s.gaussian(), s.gaussian()};
        const FLT f = s.flt();
        const Quaternion base = cr(q[0], q[1], q[2], q[3]);
        const Quaternion img = cr(f(q[0]), f(q[1]), f(q[2]), f(q[3]));
        CHECK(std::abs(base.w - img.w) <= 1e-8 * (1.0 + base.norm()));
        CHECK(std::abs(base.im_norm() - img.im_norm()) <= 1e-8 * (1.0 + base.norm()));
    }
}

TEST_CASE("quadric values") {
    const QuadricF3 unit{1.0, 0.0, -1.0};
    CHECK(on_quadric(I, unit));
    CHECK_FALSE(on_quadric(2.0, unit));
    CHECK(on_quadric(1.0 + I, QuadricF3{0.0, 1.0, -2.0}));
    CHECK(same_quadric(sphere(0.0, 1.0), unit));
    CHECK(on_quadric(Quaternion(0.5, 0, 3, 0), plane(1.0, 0.5)));

    const QuadricF3 moved = transform_quadric(Translation{1.0}, unit);
    CHECK(same_quadric(moved, QuadricF3{1.0, -1.0, 0.0}));
    CHECK(on_quadric(2.0, moved));

    // the image of |q| = 1 under q -> 2q is |q| = 2
    const QuadricF3 big = transform_quadric(Dilation{2.0}, unit);
    CHECK(same_quadric(big, QuadricF3{1.0, 0.0, -4.0}));
    CHECK(on_quadric(2.0 * J, big));
    CHECK_FALSE(on_quadric(0.5 * J, big));

    CHECK(same_quadric(transform_quadric(Inversion{}, unit), unit));
    CHECK(same_quadric(transform_quadric(Rotation{J}, unit), unit));
    CHECK(error_of([] { transform_quadric(Translation{1.0}, QuadricF3{}); }) == ErrorCode::DegenerateResult);
}

TEST_CASE("quadric pushforward") {
    Sampler s(45);
    for (int n = 0; n < 1000; ++n) {
        QuadricF3 quad;
        Quaternion point;
        if (n % 2 == 0) {
            const Quaternion c = s.gaussian();
            const double r = s.uniform(0.2, 3.0);
            quad = sphere(c, r);
            point = c + r * s.unit();
        } else {
            const Quaternion normal = s.unit();
            const double offset = s.uniform(-2.0, 2.0);
            quad = plane(normal, offset);
            Quaternion t = s.gaussian();
            const Quaternion along = normal.conj();
            t = t - dot(t, along) * along;
            point = offset * along + t;
        }
        REQUIRE(on_quadric(point, quad, 1e-10));
        const Generator g = s.generator();
        const ExtQuaternion image = quatmob::apply(g, point);
        if (image.is_infinite()) continue;
        CHECK(on_quadric(image.finite(), transform_quadric(g, quad), 1e-7));
    }
}

TEST_CASE("circles go to circles") {
    Sampler s(46);
    for (int n = 0; n < 300; ++n) {
        auto p = circle_points(s);
        const FLT f = s.flt();
        ExtQuaternion img[4] = {f(p[0]), f(p[1]), f(p[2]), f(p[3])};
        bool finite = true;
        for (const auto& e : img) finite = finite && e.is_finite();
        if (!finite) continue;
        CHECK(is_concyclic(img[0].finite(), img[1].finite(), img[2].finite(), img[3].finite(), 1e-7));
    }
}
