#include "quatmob/selftest.hpp"

#include <functional>

#include "quatmob/hypgeo.hpp"
#include "quatmob/kobayashi.hpp"
#include "quatmob/sampling.hpp"

namespace quatmob {

namespace {

// Runs `body` `iters` times; body returns the defect of one sample.
SuiteResult suite(std::string name, int iters, double tol, const std::function<double()>& body) {
    SuiteResult r;
    r.name = std::move(name);
    r.iterations = iters;
    r.tolerance = tol;
    for (int n = 0; n < iters; ++n) {
        double defect = 0.0;
        try {
            defect = body();
        } catch (const Error&) {
            defect = std::numeric_limits<double>::infinity();
        }
        if (!(defect <= r.max_error)) r.max_error = defect;
    }
    r.passed = r.max_error <= tol;
    return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, int iters) {
    Sampler s(seed);
    std::vector<SuiteResult> out;

    out.push_back(suite("binet", iters, 1e-9, [&] {
        const Mat2H a = s.matrix();
        const Mat2H b = s.matrix();
        const double prod = det_h(a) * det_h(b);
        return std::abs(det_h(a * b) - prod) / prod;
    }));

    out.push_back(suite("inverse", iters, 1e-8, [&] {
        Mat2H a = s.matrix();
        while (det_h(a) <= 1e-3) a = s.matrix();
        const Mat2H inv = inverse(a);
        return std::max(max_entry_diff(a * inv, Mat2H::identity()), max_entry_diff(inv * a, Mat2H::identity()));
    }));

    out.push_back(suite("homomorphism", iters, 1e-8, [&] {
        const FLT f = s.flt();
        const FLT g = s.flt();
        const FLT fg = compose(f, g);
        const Quaternion q = s.with_modulus_at_most(2.0);
        const ExtQuaternion inner = g(q);
        const ExtQuaternion lhs = fg(q);
        const ExtQuaternion rhs = f(inner);
        if (inner.is_infinite() || lhs.is_infinite() || rhs.is_infinite()) return 0.0;
        return distance(lhs.finite(), rhs.finite()) / (1.0 + lhs.finite().norm());
    }));

    out.push_back(suite("generators", iters, 1e-8, [&] {
        const FLT f = s.flt();
        const auto gens = decompose_generators(f);
        const Quaternion q = s.with_modulus_at_most(2.0);
        const ExtQuaternion lhs = f(q);
        const ExtQuaternion rhs = apply_generators(gens, q);
        if (lhs.is_infinite() || rhs.is_infinite()) return 0.0;
        return distance(lhs.finite(), rhs.finite()) / (1.0 + lhs.finite().norm());
    }));

    out.push_back(suite("cross-ratio orbit", iters, 1e-8, [&] {
        const Quaternion p[4] = {s.gaussian(), s.gaussian(), s.gaussian(), s.gaussian()};
        const FLT f = s.flt();
        const Quaternion cr = cross_ratio(p[0], p[1], p[2], p[3]).finite();
        const Quaternion img = cross_ratio(f(p[0]), f(p[1]), f(p[2]), f(p[3])).finite();
        return std::max(rel(cr.w, img.w), rel(cr.im_norm(), img.im_norm()));
    }));

    out.push_back(suite("quadric pushforward", iters, 1e-7, [&] {
        const Quaternion centre = s.with_modulus_at_most(2.0);
        const double radius = s.uniform(0.2, 2.0);
        const QuadricF3 q = sphere(centre, radius);
        const Generator g = s.generator();
        const Quaternion point = centre + s.unit() * radius;
        const ExtQuaternion image = quatmob::apply(g, point);
        if (image.is_infinite()) return 0.0;
        const QuadricF3 moved = transform_quadric(g, q);
        return std::abs(moved.evaluate(image.finite())) / (1.0 + moved.magnitude(image.finite()));
    }));

    out.push_back(suite("disc isometry", iters, 1e-9, [&] {
        const FLT g = to_flt(s.canonical());
        const Quaternion a = s.in_ball(0.95);
        const Quaternion b = s.in_ball(0.95);
        return rel(distance_disc(a, b), distance_disc(g(a).finite(), g(b).finite()));
    }));

    out.push_back(suite("triangle inequality", iters, 1e-9, [&] {
        const Quaternion a = s.in_ball();
        const Quaternion b = s.in_ball();
        const Quaternion c = s.in_ball();
        return std::max(0.0, distance_disc(a, b) - distance_disc(a, c) - distance_disc(c, b));
    }));

    out.push_back(suite("conformality", std::max(1, iters / 10), 1e-4, [&] {
        const FLT f = s.flt();
        Quaternion q = s.with_modulus_at_most(2.0);
        while (f(q).is_infinite() || (f.matrix().c * q + f.matrix().d).norm() < 0.3) q = s.with_modulus_at_most(2.0);
        return conformality(jacobian(f, q)).residual;
    }));

    out.push_back(suite("cayley isometry", iters, 1e-9, [&] {
        const Quaternion a = s.in_ball(0.95);
        const Quaternion b = s.in_ball(0.95);
        return rel(distance_disc(a, b), distance_halfspace(cayley(a).finite(), cayley(b).finite()));
    }));

    out.push_back(suite("cayley conjugation", iters, 1e-9, [&] {
        const Mat2H m = s.slhplus();
        return std::max(sp11_residual(cayley_conjugate(m)),
                        slhplus_residual(cayley_unconjugate(cayley_conjugate(m))));
    }));

    out.push_back(suite("kobayashi origin", iters, 1e-12, [&] {
        const Quaternion q = s.in_ball();
        return std::abs(kobayashi_from_origin(q) - distance_disc(0.0, q));
    }));

    return out;
}

}  // namespace quatmob
