#include "oracles.hpp"
#include "quatmob/sampling.hpp"
#include "support.hpp"

using namespace quatmob;
using namespace testing;

namespace {

const Mat2H kHyperbolic{std::cosh(1.0), std::sinh(1.0), std::sinh(1.0), std::cosh(1.0)};

}  // namespace

TEST_CASE("determinant values") {
    CHECK(det_h(Mat2H::identity()) == 1.0);
    CHECK(det_h(Mat2H{1.0, 2.0, 3.0, 4.0}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(det_h_squared_formula(Mat2H{1.0, 2.0, 3.0, 4.0}) == doctest::Approx(4.0));
    CHECK(det_h(Mat2H{I, I, 1.0, 1.0}) == 0.0);
    CHECK(det_h_squared_formula(Mat2H{I, I, 1.0, 1.0}) == 0.0);
    CHECK(det_h(kHyperbolic) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("determinant agrees with the complex representation") {
    Sampler s(21);
    for (int n = 0; n < 2000; ++n) {
        const Mat2H m = s.matrix();
        const double want = oracle::det_from_complex_rep(m);
        CHECK(rel_err(det_h(m), want) <= 1e-9);
        CHECK(std::abs(det_h_squared_formula(m) - want * want) <= 1e-9 * (1.0 + want * want) * 100.0);
    }
    // the representation is multiplicative, which is what the oracle relies on
    const Quaternion p(0.3, -1, 2, 0.5);
    const Quaternion q(-2, 0.1, 0.7, 1);
    CHECK((oracle::complex_rep(p) * oracle::complex_rep(q) - oracle::complex_rep(p * q)).norm() < 1e-13);
}

TEST_CASE("Binet") {
    Sampler s(22);
    for (int n = 0; n < 5000; ++n) {
        const Mat2H a = s.matrix();
        const Mat2H b = s.matrix();
        const double prod = det_h(a) * det_h(b);
        CHECK(std::abs(det_h(a * b) - prod) <= 1e-9 * prod);
    }
}

TEST_CASE("row and column operations") {
    Sampler s(23);
    for (int n = 0; n < 1000; ++n) {
        const Mat2H m = s.matrix();
        const Quaternion lambda = s.gaussian();
        const double d = det_h(m);
        // second column times lambda on the right
        CHECK(rel_err(det_h(Mat2H{m.a, m.b * lambda, m.c, m.d * lambda}), d * lambda.norm()) <= 1e-9);
        // first row times lambda on the left
        CHECK(rel_err(det_h(Mat2H{lambda * m.a, lambda * m.b, m.c, m.d}), d * lambda.norm()) <= 1e-9);
        // add one row to the other, one column to the other
        CHECK(rel_err(det_h(Mat2H{m.a + m.c, m.b + m.d, m.c, m.d}), d) <= 1e-9 * (1.0 + m.scale() * m.scale() / d));
        CHECK(rel_err(det_h(Mat2H{m.a, m.b + m.a, m.c, m.d + m.c}), d) <= 1e-9 * (1.0 + m.scale() * m.scale() / d));
        CHECK(rel_err(det_h(conj_transpose(m)), d) <= 1e-9);
        CHECK(rel_err(det_h(2.5 * m), 6.25 * d) <= 1e-9);
    }
}

TEST_CASE("inverse values and errors") {
    CHECK(inverse(Mat2H::identity()) == Mat2H::identity());
    CHECK(mdist(inverse(Mat2H{I, 0.0, 0.0, J}), Mat2H{-I, 0.0, 0.0, -J}) < 1e-15);
    CHECK(error_of([] { inverse(Mat2H{I, I, 1.0, 1.0}); }) == ErrorCode::Singular);
    CHECK(error_of([] { inverse_form_a(Mat2H{0.0, 1.0, 1.0, 0.0}); }) == ErrorCode::Singular);
    CHECK(error_of([] { inverse_form_b(Mat2H::identity()); }) == ErrorCode::Singular);
    CHECK(mdist(inverse(Mat2H::form_k()), Mat2H::form_k()) < 1e-15);
    CHECK(is_numerically_singular(Mat2H{1.0, 1.0, 1.0, 1.0 + 1e-8}));
}

TEST_CASE("inverse agrees with the real 8x8 solve") {
    Sampler s(24);
    for (int n = 0; n < 2000; ++n) {
        const Mat2H m = s.matrix();
        if (det_h(m) <= 1e-3) continue;
        const Mat2H inv = inverse(m);
        CHECK(mdist(m * inv, Mat2H::identity()) <= 1e-8);
        CHECK(mdist(inv * m, Mat2H::identity()) <= 1e-8);
        const Mat2H want = oracle::inverse_by_real_solve(m);
        CHECK(mdist(inv, want) <= 1e-8 * (1.0 + inv.scale()));
        CHECK(mdist(inverse_form_a(m), inverse_form_b(m)) <= 1e-8 * (1.0 + inv.scale()));
    }
}

TEST_CASE("mat_mul is noncommutative") {
    CHECK(Mat2H{I, 0.0, 0.0, 1.0} * Mat2H{J, 0.0, 0.0, 1.0} == Mat2H{K, 0.0, 0.0, 1.0});
    CHECK(Mat2H{J, 0.0, 0.0, 1.0} * Mat2H{I, 0.0, 0.0, 1.0} == Mat2H{-K, 0.0, 0.0, 1.0});
    const Mat2H a{1.0, I, J, K};
    CHECK(a * Mat2H::identity() == a);
}

TEST_CASE("normalize") {
    const Mat2H n = normalize_det(Mat2H{1.0, 2.0, 3.0, 4.0});
    CHECK(det_h(n) == doctest::Approx(1.0));
    CHECK(n.a.w == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(error_of([] { normalize_det(Mat2H{I, I, 1.0, 1.0}); }) == ErrorCode::Singular);
}

TEST_CASE("classification") {
    const auto id = classify(Mat2H::identity());
    for (GroupTag t : {GroupTag::GL2H, GroupTag::SL2H, GroupTag::Sp11, GroupTag::SLHplus, GroupTag::CenterGL,
                       GroupTag::CenterSL}) {
        CHECK(has_tag(id, t));
    }
    const auto hyp = classify(kHyperbolic);
    CHECK(has_tag(hyp, GroupTag::Sp11));
    CHECK(has_tag(hyp, GroupTag::SL2H));
    CHECK_FALSE(has_tag(hyp, GroupTag::CenterGL));

    const auto k = classify(Mat2H::form_k());
    CHECK(has_tag(k, GroupTag::SLHplus));
    CHECK_FALSE(has_tag(k, GroupTag::Sp11));
    // scalar conditions behind K: Re(a conj c) = 0, Re(b conj d) = 0, conj(b) c + conj(d) a = 1
    const Mat2H m = Mat2H::form_k();
    CHECK(re_mul(m.a, m.c.conj()) == 0.0);
    CHECK(re_mul(m.b, m.d.conj()) == 0.0);
    CHECK(m.b.conj() * m.c + m.d.conj() * m.a == Quaternion(1.0));

    const auto two = classify(2.0 * Mat2H::identity());
    CHECK(has_tag(two, GroupTag::CenterGL));
    CHECK_FALSE(has_tag(two, GroupTag::CenterSL));
    CHECK_FALSE(has_tag(two, GroupTag::SL2H));
    CHECK(classify(Mat2H{I, I, 1.0, 1.0}).empty());
    CHECK(to_string(GroupTag::SLHplus) == "SLHplus");
}

TEST_CASE("Sp(1,1) scalar conditions and determinant") {
    Sampler s(25);
    for (int n = 0; n < 1000; ++n) {
        const Mat2H m = normalize_det(canonical_matrix(s.canonical()));
        REQUIRE(is_sp11(m));
        CHECK(std::abs(det_h(m) - 1.0) <= 1e-9);
        // |a|^2 - |c|^2 = 1, |d|^2 - |b|^2 = 1, conj(a) b = conj(c) d
        CHECK(std::abs(m.a.norm_sq() - m.c.norm_sq() - 1.0) <= 1e-9);
        CHECK(std::abs(m.d.norm_sq() - m.b.norm_sq() - 1.0) <= 1e-9);
        CHECK(qdist(m.a.conj() * m.b, m.c.conj() * m.d) <= 1e-9 * (1.0 + m.scale() * m.scale()));
    }
}

TEST_CASE("SL(H+) closure and the Cayley conjugation") {
    CHECK(mdist(cayley_conjugate(Mat2H::identity()), Mat2H::identity()) < 1e-15);
    const Mat2H ck = cayley_conjugate(Mat2H::form_k());
    CHECK(mdist(ck, Mat2H{-1.0, 0.0, 0.0, 1.0}) < 1e-15);
    CHECK(is_sp11(ck));

    Sampler s(26);
    for (int n = 0; n < 1000; ++n) {
        const Mat2H a = s.slhplus();
        const Mat2H b = s.slhplus();
        CHECK(is_slhplus(a));
        CHECK(is_slhplus(a * b, 1e-8));
        CHECK(is_slhplus(inverse(a), 1e-8));
        CHECK(has_tag(classify(cayley_conjugate(a)), GroupTag::Sp11));

        const Mat2H g = normalize_det(canonical_matrix(s.canonical()));
        CHECK(is_slhplus(cayley_unconjugate(g)));
        CHECK(mdist(cayley_conjugate(cayley_unconjugate(g)), g) <= 1e-12 * (1.0 + g.scale()));
    }
}
