#include "hypercx/matrixrep.hpp"
#include "hypercx/rng.hpp"

#include <doctest.h>

using namespace hypercx;

namespace {

Element<Rational> el4(std::vector<long long> coeffs) {
    auto alg = Algebra::preset("four_real_hyperbolic");
    Element<Rational> e = zero_element<Rational>(alg);
    for (std::size_t k = 0; k < coeffs.size(); ++k) e.c[k] = coeffs[k];
    return e;
}

} // namespace

TEST_CASE("representation layout") {
    auto one = unit_element<Rational>(Algebra::preset("four_real_hyperbolic"));
    Mat<Rational> id = represent(one);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(id(i, j) == (i == j ? 1 : 0));

    // second row holds (x3, x0, x1, x2)
    Mat<Rational> m = represent(el4({3, 5, 7, 11}));
    CHECK(m(1, 0) == 11);
    CHECK(m(1, 1) == 3);
    CHECK(m(1, 2) == 5);
    CHECK(m(1, 3) == 7);

    auto hc = Algebra::preset("hyperbolic_complex");
    Element<Rational> z = zero_element<Rational>(hc);
    z.c[0] = 4;
    z.c[1] = 9;
    Mat<Rational> mh = represent(z);
    CHECK(mh(0, 0) == 4);
    CHECK(mh(0, 1) == 9);
    CHECK(mh(1, 0) == 9);
    CHECK(mh(1, 1) == 4);
    CHECK(det_bareiss(mh) == 4 * 4 - 9 * 9);
}

TEST_CASE("representation is an antihomomorphism with multiplicative determinant") {
    Rng rng(41);
    for (const auto& name : Algebra::preset_names()) {
        auto alg = Algebra::preset(name);
        const int n = alg->dim();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto ea = basis_element<Rational>(alg, a);
                auto eb = basis_element<Rational>(alg, b);
                Mat<Rational> lhs = represent(ea * eb);
                Mat<Rational> ra = represent(ea), rb = represent(eb);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        Rational acc = 0;
                        for (int k = 0; k < n; ++k) acc += rb(i, k) * ra(k, j);
                        CHECK(lhs(i, j) == acc);
                    }
            }
        for (int trial = 0; trial < 5; ++trial) {
            Element<Rational> x = zero_element<Rational>(alg), y = zero_element<Rational>(alg);
            for (auto& v : x.c) v = rng.uniform_int(-3, 3);
            for (auto& v : y.c) v = rng.uniform_int(-3, 3);
            CHECK(rep_determinant(x * y) == rep_determinant(x) * rep_determinant(y));
        }
    }
}

TEST_CASE("determinant values") {
    CHECK(det_h(el4({1, 0, 0, 0})) == 1);
    CHECK(det_h(el4({1, 1, 0, 0})) == 0);
    CHECK(det_h(el4({1, 0, 2, 0})) == 9);
}

TEST_CASE("determinant identity and bounds") {
    CHECK(det_identity_residual(el4({1, 0, 0, 0})) == 0);
    CHECK(det_identity_residual(el4({1, 1, 0, 0})) == 0);
    CHECK(det_identity_residual(el4({2, 1, 1, 1})) == 0);

    Rng rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        auto x = el4({rng.uniform_int(-5, 5), rng.uniform_int(-5, 5), rng.uniform_int(-5, 5),
                      rng.uniform_int(-5, 5)});
        CHECK(det_identity_residual(x) == 0);
        CHECK(det_bounds_check(x));
    }

    // with x1 = x3 the upper bound is attained
    for (int trial = 0; trial < 50; ++trial) {
        long long x0 = rng.uniform_int(-5, 5), x1 = rng.uniform_int(-5, 5);
        long long x2 = rng.uniform_int(-5, 5);
        auto x = el4({x0, x1, x2, x1});
        Rational even = x.c[0] * x.c[0] - x.c[2] * x.c[2];
        Rational cross = 4 * (x.c[0] * x.c[3] - x.c[1] * x.c[2]) *
                         (x.c[0] * x.c[1] - x.c[2] * x.c[3]);
        CHECK(det_h(x) == even * even - cross);
    }
}

TEST_CASE("zero determinant tracks zero divisors") {
    Rng rng(29);
    for (int trial = 0; trial < 400; ++trial) {
        auto x = el4({rng.uniform_int(-3, 3), rng.uniform_int(-3, 3), rng.uniform_int(-3, 3),
                      rng.uniform_int(-3, 3)});
        bool zero = x.c[0] == 0 && x.c[1] == 0 && x.c[2] == 0 && x.c[3] == 0;
        if (zero) continue;
        CHECK((det_h(x) == 0) == is_zero_divisor(x));
    }
}
