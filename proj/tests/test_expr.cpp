#include "hypercx/expr.hpp"
#include "hypercx/rng.hpp"

#include <doctest.h>

using namespace hypercx;

TEST_CASE("grammar basics") {
    auto four = Algebra::preset("four_real_hyperbolic");
    CHECK_NOTHROW(parse("x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)", four));
    CHECK_THROWS_AS(parse("1 + * j", four), SyntaxError);
    CHECK_THROWS_AS(parse("qq + 1", four), UnknownSymbol);
    CHECK_THROWS_AS(parse("x7", four), UnknownSymbol);
    CHECK_THROWS_AS(parse("foo(v)", four), UnknownSymbol);
    CHECK_THROWS_AS(parse("x0^1.5", four), SyntaxError);
    CHECK_THROWS_AS(parse("(x0", four), SyntaxError);

    ExprPtr call = parse("exp(v)", four);
    CHECK(call->kind == Expr::Kind::Call);
    CHECK(call->a->kind == Expr::Kind::Var);

    // position is reported for the offending token
    try {
        parse("1 + * j", four);
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("precedence and associativity") {
    auto hc = Algebra::preset("hyperbolic_complex");
    Element<Rational> p = zero_element<Rational>(hc);
    p.c[0] = 2;
    // ^ binds tighter than unary minus: -x0^2 = -(x0^2)
    CHECK(eval(parse("-x0^2", hc), p).c[0] == -4);
    CHECK(eval(parse("2^3", hc), p).c[0] == 8);
    CHECK(eval(parse("8/4/2", hc), p).c[0] == 1);
    CHECK(eval(parse("1 - 2 - 3", hc), p).c[0] == -4);
    CHECK(eval(parse("1/2 + 1/2", hc), p).c[0] == 1);
    CHECK(eval(parse("v^-1", hc), p).c[0] == Rational(1, 2));
}

TEST_CASE("evaluation in the algebras") {
    auto hc = Algebra::preset("hyperbolic_complex");
    Element<Rational> p(hc, {Rational(5), Rational(7)});
    CHECK(eval(parse("j^2", hc), p).c == unit_element<Rational>(hc).c);

    auto four = Algebra::preset("four_real_hyperbolic");
    ExprPtr example =
        parse("x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)", four);
    Element<Rational> q(four, {Rational(1), Rational(0), Rational(1), Rational(0)});
    auto value = eval(example, q);
    CHECK(value.c == std::vector<Rational>{2, 0, 2, 0});

    auto dcx = Algebra::preset("double_complex");
    Element<double> zero = zero_element<double>(dcx);
    CHECK(max_abs(eval(parse("exp(v)", dcx), zero) - unit_element<double>(dcx)) < 1e-15);

    // right division: a/b = a * b^{-1}
    auto co = Algebra::preset("coquaternion");
    Element<Rational> cp = zero_element<Rational>(co);
    cp.c[0] = 1;
    auto lhs = eval(parse("i*j/j", co), cp);
    CHECK(lhs.c == std::vector<Rational>{0, 1, 0, 0});
    CHECK_THROWS_AS(eval(parse("(1 + j1*0)/(0*v)", Algebra::preset("bicomplex")),
                         zero_element<Rational>(Algebra::preset("bicomplex"))),
                    ZeroDivisorError);
}

TEST_CASE("C and S are rejected off the double-complex line") {
    auto dcx = Algebra::preset("double_complex");
    Element<double> zero = zero_element<double>(dcx);
    CHECK(eval(parse("C(x0)", dcx), zero).c[0] == doctest::Approx(1.0));
    CHECK(eval(parse("S(x0)", dcx), zero).c[0] == doctest::Approx(0.0));
    CHECK_THROWS_AS(eval(parse("C(v)", dcx), Element<double>(dcx, {0.0, 1.0, 0.0, 0.0})),
                    DomainError);
    auto hc = Algebra::preset("hyperbolic_complex");
    CHECK_THROWS_AS(eval(parse("C(x0)", hc), zero_element<double>(hc)), DomainError);
}

TEST_CASE("rational mode refuses series functions") {
    auto hc = Algebra::preset("hyperbolic_complex");
    CHECK_THROWS_AS(eval(parse("exp(v)", hc), zero_element<Rational>(hc)), ModeError);
}

TEST_CASE("pretty print round trips") {
    auto four = Algebra::preset("four_real_hyperbolic");
    Rng rng(101);
    const char* samples[] = {
        "x0^2 + x2^2 + j*(x1^2 + x3^2) + j^2*(2*x0*x2) + j^3*(2*x1*x3)",
        "-(x0 - x1)^3*j^2 - 1/2",
        "exp(1/4*v)*sinh(x1) - cos(x2/(1 + x0^2))",
        "v^-2 + 2*v - j",
    };
    for (const char* text : samples) {
        ExprPtr e = parse(text, four);
        ExprPtr round = parse(pretty(e), four);
        CHECK(expr_equal(e, round));
        CHECK(pretty(round) == pretty(e));
    }
}

namespace {

ExprPtr fuzz_expr(Rng& rng, const AlgebraPtr& alg, int depth) {
    Expr n;
    if (depth <= 0 || rng.uniform_int(0, 5) == 0) {
        switch (rng.uniform_int(0, 3)) {
        case 0:
            n.kind = Expr::Kind::Number;
            n.number = Rational(rng.uniform_int(-12, 12), 1 + rng.uniform_int(0, 4));
            break;
        case 1:
            n.kind = Expr::Kind::Coord;
            n.index = static_cast<int>(rng.uniform_int(0, alg->dim() - 1));
            n.name = "x" + std::to_string(n.index);
            break;
        case 2:
            n.kind = Expr::Kind::Var;
            break;
        default: {
            n.kind = Expr::Kind::Unit;
            auto it = alg->unit_symbols().begin();
            std::advance(it, rng.uniform_int(0, alg->unit_symbols().size() - 1));
            n.name = it->first;
            n.index = it->second;
            break;
        }
        }
        return std::make_shared<Expr>(std::move(n));
    }
    switch (rng.uniform_int(0, 6)) {
    case 0: n.kind = Expr::Kind::Add; break;
    case 1: n.kind = Expr::Kind::Sub; break;
    case 2: n.kind = Expr::Kind::Mul; break;
    case 3: n.kind = Expr::Kind::Div; break;
    case 4: n.kind = Expr::Kind::Neg; break;
    case 5:
        n.kind = Expr::Kind::Pow;
        n.exponent = rng.uniform_int(-3, 5);
        break;
    default:
        n.kind = Expr::Kind::Call;
        n.name = (const char*[]){"exp", "cos", "sin", "cosh", "sinh"}[rng.uniform_int(0, 4)];
        break;
    }
    n.a = fuzz_expr(rng, alg, depth - 1);
    if (n.kind == Expr::Kind::Add || n.kind == Expr::Kind::Sub || n.kind == Expr::Kind::Mul ||
        n.kind == Expr::Kind::Div)
        n.b = fuzz_expr(rng, alg, depth - 1);
    return std::make_shared<Expr>(std::move(n));
}

} // namespace

TEST_CASE("printer round trips on random trees") {
    Rng rng(211);
    for (const auto& name : {"complex", "four_real_hyperbolic", "bicomplex", "coquaternion"}) {
        auto alg = Algebra::preset(name);
        for (int trial = 0; trial < 200; ++trial) {
            // the printed synthetic tree must parse; from the first reparse
            // on (a parse image, constants folded) the round trip is exact
            ExprPtr image = parse(pretty(fuzz_expr(rng, alg, 4)), alg);
            ExprPtr round = parse(pretty(image), alg);
            CHECK(expr_equal(image, round));
            CHECK(pretty(round) == pretty(image));
        }
    }
}

TEST_CASE("float mode agrees with rational mode") {
    auto bc = Algebra::preset("bicomplex");
    const char* text = "(x0 - 2*x1)^3*j1 + x2*x3*(j2 - 1/3) - 7/8*x0";
    ExprPtr e = parse(text, bc);
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Element<Rational> p = zero_element<Rational>(bc);
        for (auto& v : p.c) v = Rational(rng.uniform_int(-8, 8), 4);
        auto exact = eval(e, p);
        auto approx = eval(e, to_double_element(p));
        double scale = 1.0 + max_abs(to_double_element(exact));
        CHECK(max_abs(to_double_element(exact) - approx) / scale < 1e-12);
    }
}
