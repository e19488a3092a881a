#ifndef HYPERCX_EXPR_HPP
#define HYPERCX_EXPR_HPP

#include "hypercx/algebra.hpp"
#include "hypercx/jet.hpp"
#include "hypercx/special.hpp"

#include <memory>
#include <string>

namespace hypercx {

/// AST over a fixed algebra: rational literals, basis units, coordinates
/// x0..x_{n-1}, the whole-variable symbol v, arithmetic, integer powers and
/// the function set {exp, cos, sin, cosh, sinh, C, S}.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Unit, Coord, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
    Kind kind;
    Rational number;     // Number
    int index = -1;      // Unit (basis index) / Coord (coordinate index)
    std::string name;    // Unit symbol as written, or function name
    long long exponent = 0; // Pow
    ExprPtr a, b;
};

/// Recursive-descent parse against the fixed grammar; identifiers resolve in
/// the given algebra or raise UnknownSymbol, stray tokens raise SyntaxError.
ExprPtr parse(const std::string& text, const AlgebraPtr& algebra);

/// Canonical text form; parse(pretty(e)) rebuilds the same tree.
std::string pretty(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct EvalStats {
    /// Smallest scale-aware invertibility margin seen across divisions.
    double min_division_margin = 1e300;
};

namespace detail {

inline Element<double> value_part(const Element<double>& e) { return e; }
inline Element<double> value_part(const Element<Rational>& e) { return to_double_element(e); }
inline Element<double> value_part(const Element<Jet<double>>& e) { return jet_values(e); }

template <class S>
Element<S> int_pow(Element<S> base, long long n) {
    Element<S> acc = unit_element<S>(base.alg);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

// C/S lift to whatever scalar the evaluation runs in.
Element<double> eval_cs(bool cosine, const Element<double>& arg);
Element<Jet<double>> eval_cs(bool cosine, const Element<Jet<double>>& arg);
inline Element<Rational> eval_cs(bool, const Element<Rational>&) {
    throw ModeError("C/S are float-mode only");
}

} // namespace detail

/// Structural recursion; point supplies both the coordinates and the value
/// of the whole-variable symbol. With jet coefficients in the point the
/// result carries exact first and second partials.
template <class S>
Element<S> eval(const ExprPtr& e, const Element<S>& point, EvalStats* stats = nullptr) {
    const AlgebraPtr& alg = point.alg;
    switch (e->kind) {
    case Expr::Kind::Number:
        return scale(unit_element<S>(alg), e->number);
    case Expr::Kind::Unit:
        return basis_element<S>(alg, e->index);
    case Expr::Kind::Coord: {
        Element<S> out = zero_element<S>(alg);
        out.c[alg->unit_index()] = point.c[e->index];
        return out;
    }
    case Expr::Kind::Var:
        return point;
    case Expr::Kind::Neg:
        return -eval(e->a, point, stats);
    case Expr::Kind::Add:
        return eval(e->a, point, stats) + eval(e->b, point, stats);
    case Expr::Kind::Sub:
        return eval(e->a, point, stats) - eval(e->b, point, stats);
    case Expr::Kind::Mul:
        return eval(e->a, point, stats) * eval(e->b, point, stats);
    case Expr::Kind::Div: {
        Element<S> num = eval(e->a, point, stats);
        Element<S> den = eval(e->b, point, stats);
        if (stats) {
            Element<double> v = detail::value_part(den);
            double det = std::fabs(rep_determinant(v));
            double margin = det / (1.0 + std::pow(norm2(v), v.dim()));
            stats->min_division_margin = std::min(stats->min_division_margin, margin);
        }
        return num * inverse(den); // right division
    }
    case Expr::Kind::Pow: {
        Element<S> base = eval(e->a, point, stats);
        if (e->exponent >= 0) return detail::int_pow(base, e->exponent);
        return detail::int_pow(inverse(base), -e->exponent);
    }
    case Expr::Kind::Call: {
        Element<S> arg = eval(e->a, point, stats);
        if (e->name == "exp") return analytic_series(SeriesKind::Exp, arg);
        if (e->name == "cos") return analytic_series(SeriesKind::Cos, arg);
        if (e->name == "sin") return analytic_series(SeriesKind::Sin, arg);
        if (e->name == "cosh") return analytic_series(SeriesKind::Cosh, arg);
        if (e->name == "sinh") return analytic_series(SeriesKind::Sinh, arg);
        if (e->name == "C") return detail::eval_cs(true, arg);
        if (e->name == "S") return detail::eval_cs(false, arg);
        throw UnknownSymbol("unknown function '" + e->name + "'");
    }
    }
    throw DomainError("corrupt expression node");
}

} // namespace hypercx

#endif
