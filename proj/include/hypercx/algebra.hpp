#ifndef HYPERCX_ALGEBRA_HPP
#define HYPERCX_ALGEBRA_HPP

#include "hypercx/errors.hpp"
#include "hypercx/linalg.hpp"
#include "hypercx/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypercx {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A named linear involution on an algebra. Homomorphism kinds record how the
/// map interacts with the product and are verified on construction.
struct Conjugation {
    enum class Kind { Homomorphism, AntiHomomorphism, Linear };
    std::string name;
    Mat<Rational> matrix; // column j = image of basis j
    Kind kind = Kind::Linear;
};

/// How an algebra's real coordinates group into two "complex like" pairs
/// (component pairs and coordinate pairs) for presentations in the paired
/// variables. inner_square is the square of the pair unit (+1 or -1).
struct PairGrouping {
    int inner_square = -1;
    std::array<std::array<int, 2>, 2> comps;  // comps[P] = {re index, im index}
    std::array<std::array<int, 2>, 2> coords; // coords[c] = {re index, im index}
};

/// Finite-dimensional real algebra given by structure constants over a fixed
/// basis. Immutable after construction; shared via AlgebraPtr.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    /// table[(i*n + j)*n + m] = coefficient of basis m in (basis i * basis j)
    Algebra(std::string name, int dim, std::vector<std::string> basis_labels,
            std::vector<Rational> table, bool commutative, int unit_index);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }
    bool commutative() const { return commutative_; }
    int unit_index() const { return unit_index_; }
    const std::vector<Conjugation>& conjugations() const { return conjugations_; }
    const std::optional<PairGrouping>& grouping() const { return grouping_; }

    Rational table(int i, int j, int m) const {
        return table_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + m];
    }

    const Conjugation& conjugation(const std::string& name) const;
    bool has_conjugation(const std::string& name) const;

    /// Symbols usable in expressions for basis units (e.g. "i", "j1", "j^2").
    const std::map<std::string, int>& unit_symbols() const { return unit_symbols_; }

    /// Brute-force checks: associativity, unit, conjugation involutions and
    /// (anti)homomorphism tags. Throws on violation.
    void validate() const;

    nlohmann::json to_json() const;
    static AlgebraPtr from_json(const nlohmann::json& doc);

    /// R(1, j, ..., j^{n-1}) with j^n = sign; star conjugation j -> -j.
    static AlgebraPtr cyclic(int n, int sign);

    /// Named algebras: complex, hyperbolic_complex, four_real_hyperbolic,
    /// four_real_elliptic, four_complex, bicomplex, double_complex,
    /// hyperbolic_bicomplex, hyperbolic_double_complex, coquaternion.
    static AlgebraPtr preset(const std::string& name);
    static const std::vector<std::string>& preset_names();

    /// Same multiplication structure (used for compatibility of elements that
    /// come from separate construction calls).
    bool same_structure(const Algebra& other) const;

    // Internal sparse view of the table for fast products.
    struct TableEntry {
        int i, j, m;
        Rational r;
        double rd;
    };
    const std::vector<TableEntry>& sparse_table() const { return sparse_; }

    void add_conjugation(Conjugation c); // used by builders before sharing
    void set_grouping(PairGrouping g) { grouping_ = g; }
    void add_unit_symbol(const std::string& sym, int index);

private:
    std::string name_;
    int dim_;
    std::vector<std::string> basis_labels_;
    std::vector<Rational> table_;
    bool commutative_;
    int unit_index_;
    std::vector<Conjugation> conjugations_;
    std::map<std::string, int> unit_symbols_;
    std::optional<PairGrouping> grouping_;
    std::vector<TableEntry> sparse_;
};

// ---------------------------------------------------------------------------
// Scalar glue: lets Element<S> mix exact table coefficients with S arithmetic.

inline void scale_add(Rational& acc, const Rational& r, const Rational& x) { acc += r * x; }
inline void scale_add(double& acc, const Rational& r, const double& x) { acc += to_double(r) * x; }
inline void scale_add(std::complex<double>& acc, const Rational& r,
                      const std::complex<double>& x) {
    acc += to_double(r) * x;
}

inline double scalar_mag(double x) { return std::fabs(x); }
inline double scalar_mag(const std::complex<double>& x) { return std::abs(x); }
inline double scalar_mag(const Rational& x) { return std::fabs(to_double(x)); }

template <class S>
struct ScalarTraits {
    static constexpr bool exact = false;
};
template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
};

// ---------------------------------------------------------------------------

/// Coefficient vector in an algebra's canonical basis. S is the scalar mode:
/// Rational (exact), double, or a jet type.
template <class S>
struct Element {
    AlgebraPtr alg;
    std::vector<S> c;

    Element() = default;
    Element(AlgebraPtr a, std::vector<S> coeffs) : alg(std::move(a)), c(std::move(coeffs)) {}

    int dim() const { return alg ? alg->dim() : 0; }
};

template <class S>
void check_same_algebra(const Element<S>& a, const Element<S>& b) {
    if (!a.alg || !b.alg || (a.alg != b.alg && !a.alg->same_structure(*b.alg)))
        throw AlgebraMismatch("elements of '" + (a.alg ? a.alg->name() : "?") + "' and '" +
                              (b.alg ? b.alg->name() : "?") + "' cannot be combined");
}

template <class S>
Element<S> zero_element(const AlgebraPtr& alg) {
    return Element<S>(alg, std::vector<S>(alg->dim(), S(0)));
}

template <class S>
Element<S> basis_element(const AlgebraPtr& alg, int k) {
    auto e = zero_element<S>(alg);
    e.c[k] = S(1);
    return e;
}

template <class S>
Element<S> unit_element(const AlgebraPtr& alg) {
    return basis_element<S>(alg, alg->unit_index());
}

template <class S>
Element<S> operator+(const Element<S>& a, const Element<S>& b) {
    check_same_algebra(a, b);
    Element<S> out = a;
    for (int k = 0; k < out.dim(); ++k) out.c[k] = out.c[k] + b.c[k];
    return out;
}

template <class S>
Element<S> operator-(const Element<S>& a, const Element<S>& b) {
    check_same_algebra(a, b);
    Element<S> out = a;
    for (int k = 0; k < out.dim(); ++k) out.c[k] = out.c[k] - b.c[k];
    return out;
}

template <class S>
Element<S> operator-(const Element<S>& a) {
    Element<S> out = a;
    for (auto& v : out.c) v = -v;
    return out;
}

/// Bilinear product through the structure constants.
template <class S>
Element<S> operator*(const Element<S>& a, const Element<S>& b) {
    check_same_algebra(a, b);
    Element<S> out = zero_element<S>(a.alg);
    for (const auto& t : a.alg->sparse_table()) {
        S prod = a.c[t.i] * b.c[t.j];
        scale_add(out.c[t.m], t.r, prod);
    }
    return out;
}

template <class S>
Element<S> operator*(const S& s, const Element<S>& a) {
    Element<S> out = a;
    for (auto& v : out.c) v = s * v;
    return out;
}

template <class S>
Element<S> scale(const Element<S>& a, const Rational& r) {
    Element<S> out = zero_element<S>(a.alg);
    for (int k = 0; k < a.dim(); ++k) scale_add(out.c[k], r, a.c[k]);
    return out;
}

/// Image under the named involution.
template <class S>
Element<S> conjugate(const Element<S>& a, const std::string& name) {
    const Conjugation& conj = a.alg->conjugation(name);
    Element<S> out = zero_element<S>(a.alg);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (conj.matrix(i, j) != 0) scale_add(out.c[i], conj.matrix(i, j), a.c[j]);
    return out;
}

/// Matrix of right multiplication maps in row convention: row k holds the
/// coefficients of a * basis_k.
template <class S>
Mat<S> represent(const Element<S>& a) {
    const int n = a.dim();
    Mat<S> m(n, n);
    for (auto& v : m.a) v = S(0);
    for (const auto& t : a.alg->sparse_table())
        scale_add(m(t.j, t.m), t.r, a.c[t.i]);
    return m;
}

template <class S>
S rep_determinant(const Element<S>& a) {
    if constexpr (ScalarTraits<S>::exact)
        return det_bareiss(represent(a));
    else
        return det_lu(represent(a));
}

/// b with a*b = b*a = 1, by linear solve against the regular representation.
/// Throws ZeroDivisorError when the representation is singular.
template <class S>
Element<S> inverse(const Element<S>& a) {
    const int n = a.dim();
    // (a * sum_j b_j e_j)_m = sum_j R(a)_{j,m} b_j, so solve R(a)^T b = e_unit.
    Mat<S> r = represent(a);
    Mat<S> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = r(j, i);
    std::vector<S> rhs(n, S(0));
    rhs[a.alg->unit_index()] = S(1);
    std::vector<S> x;
    if (!solve_lu(std::move(m), std::move(rhs), x))
        throw ZeroDivisorError("element of '" + a.alg->name() + "' is not invertible");
    return Element<S>(a.alg, std::move(x));
}

template <class S>
double norm2(const Element<S>& a) {
    double s = 0;
    for (const auto& v : a.c) {
        double m = scalar_mag(v);
        s += m * m;
    }
    return std::sqrt(s);
}

template <class S>
double max_abs(const Element<S>& a) {
    double s = 0;
    for (const auto& v : a.c) s = std::max(s, scalar_mag(v));
    return s;
}

/// True iff the regular representation is singular: exact determinant test in
/// rational mode, |det| < 1e-10 (1 + |a|^n) in float mode.
bool is_zero_divisor(const Element<Rational>& a);
bool is_zero_divisor(const Element<double>& a);

/// Ring isomorphism between the double_complex and bicomplex presets and its
/// inverse; float mode (the matrix involves sqrt(1/2)).
Element<double> bc_dc_isomorphism(const Element<double>& a);
Element<double> bc_dc_isomorphism_inverse(const Element<double>& a);

/// |x0 y0 - x1 y1 + x2 y2 - x3 y3| on a dim-4 cyclic algebra.
double scalar_product_h4(const Element<double>& x, const Element<double>& y);

/// (dx0^2 - dx2^2, dx1^2 - dx3^2) for a dim-4 element.
std::pair<double, double> minkowski_intervals(const Element<double>& dx);

Element<double> to_double_element(const Element<Rational>& a);
Element<Rational> element_from_strings(const AlgebraPtr& alg,
                                       const std::vector<std::string>& coeffs);

} // namespace hypercx

#endif
