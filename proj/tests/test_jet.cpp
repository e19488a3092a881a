#include "hypercx/expr.hpp"
#include "hypercx/rng.hpp"

#include <doctest.h>

using namespace hypercx;

TEST_CASE("seed carries values, unit gradients, zero hessian") {
    auto alg = Algebra::preset("four_real_hyperbolic");
    Element<double> p(alg, {1.5, -0.5, 2.0, 0.25});
    JetElement s = seed(p);
    CHECK(max_abs(jet_values(s) - p) == 0.0);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            CHECK(s.c[k].g[l] == (k == l ? 1.0 : 0.0));
            CHECK(s.c[k].hess(k, l) == 0.0);
        }
}

TEST_CASE("bilinear product has unit mixed partial") {
    auto alg = Algebra::preset("hyperbolic_complex");
    ExprPtr f = parse("x0*x1", alg);
    JetElement jet = eval(f, seed(Element<double>(alg, {0.7, -0.3})));
    CHECK(jet.c[0].hess(0, 1) == doctest::Approx(1.0));
    CHECK(jet.c[0].hess(1, 0) == doctest::Approx(1.0));
    CHECK(jet.c[0].hess(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("exp gradient at the origin") {
    auto alg = Algebra::preset("hyperbolic_complex");
    ExprPtr f = parse("exp(v)", alg);
    JetElement jet = eval(f, seed(zero_element<double>(alg)));
    CHECK(jet.c[0].v == doctest::Approx(1.0));
    CHECK(jet.c[0].g[0] == doctest::Approx(1.0));
    CHECK(jet.c[1].g[1] == doctest::Approx(1.0));
}

TEST_CASE("jet division and hessian symmetry") {
    Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        Jet<double> x = Jet<double>::seed(rng.uniform(0.5, 2.0), 2, 0);
        Jet<double> y = Jet<double>::seed(rng.uniform(0.5, 2.0), 2, 1);
        Jet<double> f = (x * y + sin(x)) / (cosh(y) + Jet<double>(1.0));
        CHECK(f.hess(0, 1) == doctest::Approx(f.hess(1, 0)).epsilon(1e-14));
    }
}

TEST_CASE("product rule against factor jets") {
    auto alg = Algebra::preset("bicomplex");
    ExprPtr a = parse("x0^2 + j1*x1", alg);
    ExprPtr b = parse("sinh(x2) + j2*x3*x0", alg);
    ExprPtr ab = parse("(x0^2 + j1*x1)*(sinh(x2) + j2*x3*x0)", alg);
    Rng rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        Element<double> pt = zero_element<double>(alg);
        for (auto& v : pt.c) v = rng.uniform(-1, 1);
        JetElement fa = eval(a, seed(pt));
        JetElement fb = eval(b, seed(pt));
        JetElement fab = eval(ab, seed(pt));
        for (int k = 0; k < 4; ++k) {
            Element<double> leibniz =
                jet_partial(fa, k) * jet_values(fb) + jet_values(fa) * jet_partial(fb, k);
            CHECK(max_abs(leibniz - jet_partial(fab, k)) < 1e-12);
        }
    }
}
