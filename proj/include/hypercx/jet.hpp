#ifndef HYPERCX_JET_HPP
#define HYPERCX_JET_HPP

#include "hypercx/algebra.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace hypercx {

/// Order-2 truncated Taylor data: value, gradient over m coordinates and the
/// full (symmetric) Hessian. Arithmetic propagates both derivative orders
/// exactly, so applying a first- or second-order operator at a point needs a
/// single evaluation.
template <class S>
struct Jet {
    S v{};
    std::vector<S> g;
    std::vector<S> h; // m*m, kept symmetric

    Jet() = default;
    explicit Jet(const S& value) : v(value) {}
    Jet(const S& value, int m) : v(value), g(m, S(0)), h(static_cast<std::size_t>(m) * m, S(0)) {}

    int vars() const { return static_cast<int>(g.size()); }
    S& hess(int k, int l) { return h[static_cast<std::size_t>(k) * vars() + l]; }
    const S& hess(int k, int l) const { return h[static_cast<std::size_t>(k) * vars() + l]; }

    static Jet seed(const S& value, int m, int index) {
        Jet j(value, m);
        j.g[index] = S(1);
        return j;
    }
};

namespace detail {

template <class S>
void match(Jet<S>& a, const Jet<S>& b) {
    if (a.vars() == 0 && b.vars() != 0) {
        a.g.assign(b.g.size(), S(0));
        a.h.assign(b.h.size(), S(0));
    }
}

} // namespace detail

template <class S>
Jet<S> operator+(Jet<S> a, const Jet<S>& b) {
    detail::match(a, b);
    a.v = a.v + b.v;
    for (std::size_t k = 0; k < b.g.size(); ++k) a.g[k] = a.g[k] + b.g[k];
    for (std::size_t k = 0; k < b.h.size(); ++k) a.h[k] = a.h[k] + b.h[k];
    return a;
}

template <class S>
Jet<S> operator-(Jet<S> a, const Jet<S>& b) {
    detail::match(a, b);
    a.v = a.v - b.v;
    for (std::size_t k = 0; k < b.g.size(); ++k) a.g[k] = a.g[k] - b.g[k];
    for (std::size_t k = 0; k < b.h.size(); ++k) a.h[k] = a.h[k] - b.h[k];
    return a;
}

template <class S>
Jet<S> operator-(Jet<S> a) {
    a.v = -a.v;
    for (auto& x : a.g) x = -x;
    for (auto& x : a.h) x = -x;
    return a;
}

template <class S>
Jet<S> operator*(const Jet<S>& a, const Jet<S>& b) {
    if (a.vars() == 0) {
        Jet<S> out = b;
        out.v = a.v * b.v;
        for (auto& x : out.g) x = a.v * x;
        for (auto& x : out.h) x = a.v * x;
        return out;
    }
    if (b.vars() == 0) return b * a;
    const int m = a.vars();
    Jet<S> out(a.v * b.v, m);
    for (int k = 0; k < m; ++k) out.g[k] = a.v * b.g[k] + a.g[k] * b.v;
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            out.hess(k, l) = a.v * b.hess(k, l) + a.hess(k, l) * b.v + a.g[k] * b.g[l] +
                             a.g[l] * b.g[k];
    return out;
}

template <class S>
Jet<S> operator*(const S& s, Jet<S> a) {
    a.v = s * a.v;
    for (auto& x : a.g) x = s * x;
    for (auto& x : a.h) x = s * x;
    return a;
}

/// Composition with an analytic scalar function given f(v), f'(v), f''(v).
template <class S>
Jet<S> compose(const Jet<S>& x, const S& f, const S& fp, const S& fpp) {
    const int m = x.vars();
    Jet<S> out(f, m);
    for (int k = 0; k < m; ++k) out.g[k] = fp * x.g[k];
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            out.hess(k, l) = fp * x.hess(k, l) + fpp * x.g[k] * x.g[l];
    return out;
}

template <class S>
Jet<S> reciprocal(const Jet<S>& x) {
    if (scalar_mag(x.v) < 1e-300) // IEEE guard, not a mathematical threshold
        throw ZeroDivisorError("jet division by a vanishing value");
    S inv = S(1) / x.v;
    return compose(x, inv, -inv * inv, S(2) * inv * inv * inv);
}

template <class S>
Jet<S> operator/(const Jet<S>& a, const Jet<S>& b) {
    return a * reciprocal(b);
}

inline Jet<double> exp(const Jet<double>& x) {
    double e = std::exp(x.v);
    return compose(x, e, e, e);
}
inline Jet<double> sin(const Jet<double>& x) {
    return compose(x, std::sin(x.v), std::cos(x.v), -std::sin(x.v));
}
inline Jet<double> cos(const Jet<double>& x) {
    return compose(x, std::cos(x.v), -std::sin(x.v), -std::cos(x.v));
}
inline Jet<double> sinh(const Jet<double>& x) {
    return compose(x, std::sinh(x.v), std::cosh(x.v), std::sinh(x.v));
}
inline Jet<double> cosh(const Jet<double>& x) {
    return compose(x, std::cosh(x.v), std::sinh(x.v), std::cosh(x.v));
}

inline Jet<std::complex<double>> exp(const Jet<std::complex<double>>& x) {
    auto e = std::exp(x.v);
    return compose(x, e, e, e);
}
inline Jet<std::complex<double>> sin(const Jet<std::complex<double>>& x) {
    return compose(x, std::sin(x.v), std::cos(x.v), -std::sin(x.v));
}
inline Jet<std::complex<double>> cos(const Jet<std::complex<double>>& x) {
    return compose(x, std::cos(x.v), -std::sin(x.v), -std::cos(x.v));
}

// Glue so Element<Jet<double>> works through the shared templates.
inline void scale_add(Jet<double>& acc, const Rational& r, const Jet<double>& x) {
    double f = to_double(r);
    acc.v += f * x.v;
    if (acc.vars() == 0 && x.vars() != 0) {
        acc.g.assign(x.g.size(), 0.0);
        acc.h.assign(x.h.size(), 0.0);
    }
    for (std::size_t k = 0; k < x.g.size(); ++k) acc.g[k] += f * x.g[k];
    for (std::size_t k = 0; k < x.h.size(); ++k) acc.h[k] += f * x.h[k];
}

/// Magnitude used by pivoting and truncation bounds: l1 norm across orders.
inline double jet_mag(const Jet<double>& x) {
    double s = std::fabs(x.v);
    for (double v : x.g) s += std::fabs(v);
    for (double v : x.h) s += std::fabs(v);
    return s;
}

inline double pivot_mag(const Jet<double>& x) { return std::fabs(x.v); }
inline double scalar_mag(const Jet<double>& x) { return jet_mag(x); }

using JetElement = Element<Jet<double>>;

/// Coordinate k of the result carries grad = e_k and a zero Hessian.
JetElement seed(const Element<double>& point);

/// Value / gradient / Hessian tables of each component function.
Element<double> jet_values(const JetElement& f);
Element<double> jet_partial(const JetElement& f, int k);
Element<double> jet_partial2(const JetElement& f, int k, int l);

} // namespace hypercx

#endif
