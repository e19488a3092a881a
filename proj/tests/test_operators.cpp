#include "hypercx/operators.hpp"
#include "hypercx/rng.hpp"

#include <doctest.h>

using namespace hypercx;

namespace {

Element<double> point_of(const AlgebraPtr& alg, std::vector<double> coeffs) {
    return Element<double>(alg, std::move(coeffs));
}

} // namespace

TEST_CASE("conjugate-variable operators on the coordinate function") {
    Rng rng(13);
    for (const auto& name : Algebra::preset_names()) {
        auto alg = Algebra::preset(name);
        auto ops = dbar_names(alg);
        if (ops.empty()) continue;
        ExprPtr id = parse("v", alg);
        ExprPtr constant = parse("3 - v*0", alg);
        for (int trial = 0; trial < 5; ++trial) {
            Element<double> pt = zero_element<double>(alg);
            for (auto& v : pt.c) v = rng.uniform(-2, 2);
            JetElement jid = eval(id, seed(pt));
            JetElement jconst = eval(constant, seed(pt));
            for (const auto& star : holomorphy_operators(alg)) {
                CHECK(max_abs(apply(dbar(alg, star), jid)) < 1e-14);
                CHECK(max_abs(apply(dbar(alg, star), jconst)) < 1e-14);
            }
        }
    }
    CHECK_THROWS_AS(dbar(Algebra::preset("complex"), "dq"), UnknownOperator);
    CHECK_THROWS_AS(laplacian(Algebra::preset("complex"), "wave"), UnknownOperator);
}

TEST_CASE("hyperbolic dzstar distinguishes z from its conjugate") {
    auto hc = Algebra::preset("hyperbolic_complex");
    LinDiffOp dstar = dbar(hc, "dzstar");
    ExprPtr z = parse("v", hc);
    ExprPtr zstar = parse("x0 - j*x1", hc);
    Element<double> pt = point_of(hc, {0.4, -1.2});
    CHECK(max_abs(apply(dstar, z, pt)) < 1e-15);
    Element<double> r = apply(dstar, zstar, pt);
    CHECK(r.c[0] == doctest::Approx(1.0));
    CHECK(r.c[1] == doctest::Approx(0.0));
}

TEST_CASE("catalog operators annihilate their holomorphic examples") {
    auto hbc = Algebra::preset("hyperbolic_bicomplex");
    // alpha = z + j2 w as an expression in coordinates
    ExprPtr alpha = parse("x0 + j1*x1 + j2*x2 + j1*j2*x3", hbc);
    CHECK(max_abs(apply(dbar(hbc, "dalphastar"), alpha, point_of(hbc, {1, 2, -1, 0.5}))) <
          1e-14);

    auto co = Algebra::preset("coquaternion");
    ExprPtr q = parse("v", co);
    CHECK(max_abs(apply(dbar(co, "dqstar"), q, point_of(co, {1, -2, 0.5, 2}))) < 1e-14);
    CHECK(max_abs(apply(dbar(co, "dqbarstar"), q, point_of(co, {1, -2, 0.5, 2}))) < 1e-14);
    // dq recovers 1 on q
    Element<double> v = apply(dbar(co, "dq"), q, point_of(co, {1, -2, 0.5, 2}));
    CHECK(max_abs(v - unit_element<double>(co)) < 1e-14);

    auto dcx = Algebra::preset("double_complex");
    CHECK(max_abs(apply(dbar(dcx, "dalphastar"), parse("exp(v)", dcx),
                        point_of(dcx, {0.3, -0.2, 0.5, 0.1}))) < 1e-12);
}

TEST_CASE("laplacians on harmonic examples") {
    auto cx = Algebra::preset("complex");
    CHECK(max_abs(apply(laplacian(cx, "laplace"), parse("x0^2 - x1^2", cx),
                        point_of(cx, {1.0, 2.0}))) < 1e-13);
    auto four = Algebra::preset("four_real_hyperbolic");
    CHECK(max_abs(apply(laplacian(four, "wave02"), parse("x0^2 + x2^2", four),
                        point_of(four, {1, 0, 1, 0}))) < 1e-13);
    auto dcx = Algebra::preset("double_complex");
    CHECK(max_abs(apply(laplacian(dcx, "delta_plus"), parse("exp(v)", dcx),
                        point_of(dcx, {0.4, 0.3, -0.2, 0.6}))) < 1e-11);
}

TEST_CASE("wirtinger factorization of the second-order operators") {
    auto hc = Algebra::preset("hyperbolic_complex");
    CHECK(op_equal(compose(dbar(hc, "dz"), dbar(hc, "dzstar")),
                   scale_op(laplacian(hc, "wave"), Rational(1, 4))));
    auto cx = Algebra::preset("complex");
    CHECK(op_equal(compose(dbar(cx, "dzbar"), dbar(cx, "dz")),
                   scale_op(laplacian(cx, "laplace"), Rational(1, 4))));
    CHECK_FALSE(op_equal(laplacian(hc, "wave"), scale_op(laplacian(hc, "wave"), Rational(2))));

    // spot check on a generic smooth expression
    ExprPtr f = parse("exp(1/2*v)*x0 + j*sinh(x1)", hc);
    Element<double> pt = point_of(hc, {0.7, -0.4});
    Element<double> lhs = apply(compose(dbar(hc, "dz"), dbar(hc, "dzstar")), f, pt);
    Element<double> rhs = apply(scale_op(laplacian(hc, "wave"), Rational(1, 4)), f, pt);
    CHECK(max_abs(lhs - rhs) < 1e-8);
}

TEST_CASE("series functions stay inside the operator kernels") {
    // exp of the whole variable is annihilated by the conjugate operator on
    // every commutative algebra with a catalog entry
    Rng rng(139);
    for (const auto& name :
         {"complex", "hyperbolic_complex", "bicomplex", "hyperbolic_bicomplex"}) {
        auto alg = Algebra::preset(name);
        ExprPtr f = parse("exp(1/2*v)", alg);
        for (int trial = 0; trial < 4; ++trial) {
            Element<double> pt = zero_element<double>(alg);
            for (auto& v : pt.c) v = rng.uniform(-1.5, 1.5);
            JetElement jet = eval(f, seed(pt));
            for (const auto& star : holomorphy_operators(alg))
                CHECK(normalized_residual(dbar(alg, star), jet) < 1e-12);
        }
    }
}

TEST_CASE("holomorphy verdicts") {
    auto four = Algebra::preset("four_real_hyperbolic");
    SamplingSpec spec;
    spec.seed = 99;
    spec.tol = 1e-12;
    Verdict good = holomorphy_check(
        four, parse("x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)", four),
        spec);
    CHECK(good.pass);
    CHECK(good.points == 64);

    auto hc = Algebra::preset("hyperbolic_complex");
    SamplingSpec loose;
    loose.seed = 99;
    Verdict bad = holomorphy_check(hc, parse("x0 - j*x1", hc), loose);
    CHECK_FALSE(bad.pass);
    CHECK(bad.residuals.at("dzstar") > 0.1);

    Verdict expv = holomorphy_check(Algebra::preset("hyperbolic_double_complex"),
                                    parse("exp(v)", Algebra::preset("hyperbolic_double_complex")),
                                    loose);
    CHECK(expv.pass);
}

TEST_CASE("sampler rejects singular sets and can exhaust") {
    auto hc = Algebra::preset("hyperbolic_complex");
    // every point is a zero divisor for the constant denominator 1 - j
    SamplingSpec spec;
    spec.points = 4;
    spec.seed = 5;
    CHECK_THROWS_AS(holomorphy_check(hc, parse("v/(1 + j - 1 - j)", hc), spec),
                    AllPointsRejected);
    // 1/v is fine: off-cone points exist
    Verdict v = holomorphy_check(hc, parse("1/v", hc), spec);
    CHECK(v.pass);
}

TEST_CASE("holomorphy operators annihilate polynomials in the whole variable") {
    Rng rng(131);
    for (const auto& name : Algebra::preset_names()) {
        auto alg = Algebra::preset(name);
        if (dbar_names(alg).empty()) continue;
        // on the noncommutative algebra only central-coefficient linear
        // functions are regular; v*v itself is not (see the q^2 expansion)
        ExprPtr f = alg->commutative() ? parse("v*v*v - 2*v*v + v - 5", alg)
                                       : parse("3*v - 5", alg);
        SamplingSpec spec;
        spec.seed = rng.next();
        spec.points = 16;
        Verdict v = holomorphy_check(alg, f, spec);
        INFO(name);
        CHECK(v.pass);
    }
}

TEST_CASE("coquaternion regular polynomial satisfies both displayed systems") {
    auto co = Algebra::preset("coquaternion");
    // f0 = z^2 + w^2, f1 = 2 z w solves the coupled pair; written out in the
    // real coordinates with j multiplied from the right.
    ExprPtr f = parse("(x0+i*x1)^2 + (x2+i*x3)^2 + 2*(x0+i*x1)*(x2+i*x3)*j", co);
    SamplingSpec spec;
    spec.seed = 21;
    Verdict v = holomorphy_check(co, f, spec);
    CHECK(v.pass);
    CHECK(v.residuals.at("dqstar") < 1e-12);
    // components are holomorphic in (z, w), so the conjugate-coordinate
    // system is identically satisfied
    CHECK(v.residuals.at("dqbarstar") < 1e-14);

    // while q^2 itself is not in the kernel of dqstar
    Verdict q2 = holomorphy_check(co, parse("v*v", co), spec);
    CHECK_FALSE(q2.pass);

    // the induced second-order pair annihilates the same example; the
    // conjugate-coordinate operator is trivially zero on it
    Element<double> pt(co, {0.7, -1.1, 0.4, 0.9});
    CHECK(max_abs(apply(laplacian(co, "wave_z"), f, pt)) < 1e-12);
    CHECK(max_abs(apply(laplacian(co, "wave_zbar"), f, pt)) < 1e-12);
}

TEST_CASE("differential decomposition identities") {
    Rng rng(47);
    auto check_identity = [&](const std::string& algebra, const char* text, double tol) {
        auto alg = Algebra::preset(algebra);
        ExprPtr f = parse(text, alg);
        for (int trial = 0; trial < 20; ++trial) {
            Element<double> pt = zero_element<double>(alg);
            Element<double> dir = zero_element<double>(alg);
            for (auto& v : pt.c) v = rng.uniform(-1.5, 1.5);
            for (auto& v : dir.c) v = rng.uniform(-1, 1);
            CHECK(differential_decomposition_check(alg, f, pt, dir) < tol);
        }
    };
    // complete pairings hold for arbitrary smooth expressions
    check_identity("complex", "v*v - x1*i + exp(1/2*v)", 1e-9);
    check_identity("hyperbolic_complex", "v*v*v + x0*x1*j", 1e-9);
    check_identity("four_real_hyperbolic", "x0 - j*x1 + j^2*x2*x0 - j^3*x3", 1e-9);
    // paired-variable identities on their holomorphic classes
    check_identity("bicomplex", "v*v", 1e-12);
    check_identity("hyperbolic_bicomplex", "v*v", 1e-12);
    check_identity("hyperbolic_bicomplex", "v*v*v - 2*v", 1e-11);
    check_identity("double_complex", "v*v + exp(1/4*v)", 1e-11);
    check_identity("hyperbolic_double_complex", "v*v", 1e-12);
    // constants map to zero on both sides
    check_identity("hyperbolic_bicomplex", "7/2", 0.0 + 1e-15);

    // the noncommutative algebra has no conjugate-coordinate pairing
    auto co = Algebra::preset("coquaternion");
    CHECK_FALSE(has_differential_pairing(co));
    CHECK(has_differential_pairing(Algebra::preset("bicomplex")));
    CHECK_THROWS_AS(differential_decomposition_check(co, parse("v", co),
                                                     zero_element<double>(co),
                                                     unit_element<double>(co)),
                    UnknownOperator);
}
