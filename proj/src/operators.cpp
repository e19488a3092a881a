#include "hypercx/operators.hpp"

#include <algorithm>

namespace hypercx {

namespace {

Element<Rational> unit_coeff(const AlgebraPtr& alg) { return unit_element<Rational>(alg); }

Element<Rational> coeff(const AlgebraPtr& alg, int basis, const Rational& r) {
    auto e = zero_element<Rational>(alg);
    e.c[basis] = r;
    return e;
}

LinDiffOp first_order(const AlgebraPtr& alg, const std::string& name,
                      std::vector<std::pair<Element<Rational>, int>> terms) {
    LinDiffOp op{alg, name, 1, {}};
    for (auto& [left, k] : terms) op.terms.push_back({std::move(left), unit_coeff(alg), k, 0});
    return op;
}

LinDiffOp second_order(const AlgebraPtr& alg, const std::string& name,
                       std::vector<std::tuple<Element<Rational>, int, int>> terms) {
    LinDiffOp op{alg, name, 2, {}};
    for (auto& [left, k, l] : terms) op.terms.push_back({std::move(left), unit_coeff(alg), k, l});
    return op;
}

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

} // namespace

LinDiffOp dbar(const AlgebraPtr& alg, const std::string& name) {
    const std::string& a = alg->name();
    auto u = [&](const Rational& r) { return scale(unit_coeff(alg), r); };
    auto b = [&](int idx, const Rational& r) { return coeff(alg, idx, r); };

    if (a == "complex") {
        if (name == "dz") return first_order(alg, name, {{u(kHalf), 0}, {b(1, -kHalf), 1}});
        if (name == "dzbar") return first_order(alg, name, {{u(kHalf), 0}, {b(1, kHalf), 1}});
    } else if (a == "hyperbolic_complex") {
        if (name == "dz") return first_order(alg, name, {{u(kHalf), 0}, {b(1, kHalf), 1}});
        if (name == "dzstar") return first_order(alg, name, {{u(kHalf), 0}, {b(1, -kHalf), 1}});
    } else if (a == "four_real_hyperbolic") {
        if (name == "dalpha") return first_order(alg, name, {{u(kHalf), 0}, {b(2, kHalf), 2}});
        if (name == "dbeta") return first_order(alg, name, {{u(kHalf), 1}, {b(2, kHalf), 3}});
        if (name == "dalphastar")
            return first_order(alg, name, {{u(kHalf), 0}, {b(2, -kHalf), 2}});
        if (name == "dbetastar")
            return first_order(alg, name, {{u(kHalf), 1}, {b(2, -kHalf), 3}});
    } else if (a == "bicomplex") {
        if (name == "dalpha")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(1, -kQuarter), 1},
                                {b(2, -kQuarter), 2},
                                {b(3, kQuarter), 3}});
        if (name == "dalphastar")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(1, -kQuarter), 1},
                                {b(2, kQuarter), 2},
                                {b(3, -kQuarter), 3}});
    } else if (a == "double_complex") {
        if (name == "dalpha")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(3, -kQuarter), 1},
                                {b(2, -kQuarter), 2},
                                {b(1, -kQuarter), 3}});
        if (name == "dalphastar")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(3, kQuarter), 1},
                                {b(2, -kQuarter), 2},
                                {b(1, kQuarter), 3}});
    } else if (a == "hyperbolic_bicomplex") {
        if (name == "dalpha")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(1, kQuarter), 1},
                                {b(2, kQuarter), 2},
                                {b(3, kQuarter), 3}});
        if (name == "dalphastar")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(1, kQuarter), 1},
                                {b(2, -kQuarter), 2},
                                {b(3, -kQuarter), 3}});
    } else if (a == "hyperbolic_double_complex") {
        if (name == "dq")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(3, kQuarter), 1},
                                {b(2, kQuarter), 2},
                                {b(1, kQuarter), 3}});
        if (name == "dqstar")
            return first_order(alg, name,
                               {{u(kQuarter), 0},
                                {b(3, -kQuarter), 1},
                                {b(2, kQuarter), 2},
                                {b(1, -kQuarter), 3}});
    } else if (a == "coquaternion") {
        // 1/2 (d/dz +- (d/dw) j) with complex Wirtinger halves; the j factor
        // multiplies from the right.
        auto jr = coeff(alg, 2, 1);
        auto mk = [&](const std::string& nm, int sz, int sw) {
            LinDiffOp op{alg, nm, 1, {}};
            op.terms.push_back({u(kQuarter), unit_coeff(alg), 0, 0});
            op.terms.push_back({b(1, sz * kQuarter), unit_coeff(alg), 1, 0});
            op.terms.push_back({u(sw * kQuarter), jr, 2, 0});
            op.terms.push_back({b(1, Rational(sz) * sw * kQuarter), jr, 3, 0});
            return op;
        };
        if (name == "dq") return mk(name, -1, 1);
        if (name == "dqbar") return mk(name, 1, 1);
        if (name == "dqstar") return mk(name, -1, -1);
        if (name == "dqbarstar") return mk(name, 1, -1);
    }
    throw UnknownOperator("no operator '" + name + "' on algebra '" + a + "'");
}

LinDiffOp laplacian(const AlgebraPtr& alg, const std::string& name) {
    const std::string& a = alg->name();
    auto u = [&](const Rational& r) { return scale(unit_coeff(alg), r); };
    auto b = [&](int idx, const Rational& r) { return coeff(alg, idx, r); };

    if (a == "complex" && name == "laplace")
        return second_order(alg, name, {{u(1), 0, 0}, {u(1), 1, 1}});
    if (a == "hyperbolic_complex" && name == "wave")
        return second_order(alg, name, {{u(1), 0, 0}, {u(-1), 1, 1}});
    if (a == "four_real_hyperbolic") {
        if (name == "wave02") return second_order(alg, name, {{u(1), 0, 0}, {u(-1), 2, 2}});
        if (name == "wave13") return second_order(alg, name, {{u(1), 1, 1}, {u(-1), 3, 3}});
    }
    if (a == "bicomplex" && name == "laplace_bc")
        return second_order(alg, name,
                            {{u(kQuarter), 0, 0},
                             {u(-kQuarter), 1, 1},
                             {u(kQuarter), 2, 2},
                             {u(-kQuarter), 3, 3},
                             {b(1, -kHalf), 0, 1},
                             {b(1, -kHalf), 2, 3}});
    if (a == "double_complex" && name == "delta_plus")
        return second_order(alg, name,
                            {{u(kQuarter), 0, 0},
                             {u(-kQuarter), 2, 2},
                             {b(2, kQuarter), 1, 1},
                             {b(2, -kQuarter), 3, 3},
                             {b(2, -kHalf), 0, 2},
                             {u(kHalf), 1, 3}});
    if (a == "hyperbolic_bicomplex" && name == "delta_h")
        return second_order(alg, name,
                            {{u(kQuarter), 0, 0},
                             {u(kQuarter), 1, 1},
                             {u(-kQuarter), 2, 2},
                             {u(-kQuarter), 3, 3},
                             {b(1, kHalf), 0, 1},
                             {b(1, -kHalf), 2, 3}});
    if (a == "hyperbolic_double_complex" && name == "delta_h")
        return second_order(alg, name,
                            {{u(kQuarter), 0, 0},
                             {u(kQuarter), 2, 2},
                             {b(2, kHalf), 0, 2},
                             {b(2, -kQuarter), 1, 1},
                             {b(2, -kQuarter), 3, 3},
                             {u(-kHalf), 1, 3}});
    if (a == "coquaternion") {
        if (name == "wave_z")
            return second_order(alg, name,
                                {{u(kQuarter), 0, 0},
                                 {u(-kQuarter), 1, 1},
                                 {b(1, -kHalf), 0, 1},
                                 {u(-kQuarter), 2, 2},
                                 {u(kQuarter), 3, 3},
                                 {b(1, kHalf), 2, 3}});
        if (name == "wave_zbar")
            return second_order(alg, name,
                                {{u(kQuarter), 0, 0},
                                 {u(-kQuarter), 1, 1},
                                 {b(1, kHalf), 0, 1},
                                 {u(-kQuarter), 2, 2},
                                 {u(kQuarter), 3, 3},
                                 {b(1, -kHalf), 2, 3}});
    }
    throw UnknownOperator("no second-order operator '" + name + "' on algebra '" + a + "'");
}

std::vector<std::string> dbar_names(const AlgebraPtr& alg) {
    const std::string& a = alg->name();
    if (a == "complex") return {"dz", "dzbar"};
    if (a == "hyperbolic_complex") return {"dz", "dzstar"};
    if (a == "four_real_hyperbolic") return {"dalpha", "dbeta", "dalphastar", "dbetastar"};
    if (a == "bicomplex" || a == "double_complex" || a == "hyperbolic_bicomplex")
        return {"dalpha", "dalphastar"};
    if (a == "hyperbolic_double_complex") return {"dq", "dqstar"};
    if (a == "coquaternion") return {"dq", "dqbar", "dqstar", "dqbarstar"};
    return {};
}

std::vector<std::string> laplacian_names(const AlgebraPtr& alg) {
    const std::string& a = alg->name();
    if (a == "complex") return {"laplace"};
    if (a == "hyperbolic_complex") return {"wave"};
    if (a == "four_real_hyperbolic") return {"wave02", "wave13"};
    if (a == "bicomplex") return {"laplace_bc"};
    if (a == "double_complex") return {"delta_plus"};
    if (a == "hyperbolic_bicomplex" || a == "hyperbolic_double_complex") return {"delta_h"};
    if (a == "coquaternion") return {"wave_z", "wave_zbar"};
    return {};
}

std::vector<std::string> holomorphy_operators(const AlgebraPtr& alg) {
    const std::string& a = alg->name();
    if (a == "complex") return {"dzbar"};
    if (a == "hyperbolic_complex") return {"dzstar"};
    if (a == "four_real_hyperbolic") return {"dalphastar", "dbetastar"};
    if (a == "bicomplex" || a == "double_complex" || a == "hyperbolic_bicomplex")
        return {"dalphastar"};
    if (a == "hyperbolic_double_complex") return {"dqstar"};
    if (a == "coquaternion") return {"dqstar", "dqbarstar"};
    throw UnknownOperator("no holomorphy condition registered for '" + a + "'");
}

Element<double> apply(const LinDiffOp& op, const JetElement& f) {
    Element<double> acc = zero_element<double>(f.alg);
    for (const auto& t : op.terms) {
        Element<double> d =
            (op.order == 1) ? jet_partial(f, t.k) : jet_partial2(f, t.k, t.l);
        Element<double> left = to_double_element(t.left);
        Element<double> right = to_double_element(t.right);
        acc = acc + left * d * right;
    }
    return acc;
}

Element<double> apply(const LinDiffOp& op, const ExprPtr& f, const Element<double>& point) {
    JetElement jet = eval(f, seed(point));
    return apply(op, jet);
}

LinDiffOp compose(const LinDiffOp& a, const LinDiffOp& b) {
    if (a.order != 1 || b.order != 1)
        throw DomainError("compose expects two first-order operators");
    check_same_algebra(a.terms.at(0).left, b.terms.at(0).left);
    LinDiffOp out{a.alg, a.name + "*" + b.name, 2, {}};
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            // constant coefficients: (L1 d_k R1)(L2 d_l R2) = L1 L2 d_k d_l R2 R1
            LinDiffOp::Term t;
            t.left = ta.left * tb.left;
            t.right = tb.right * ta.right;
            t.k = std::min(ta.k, tb.k);
            t.l = std::max(ta.k, tb.k);
            out.terms.push_back(std::move(t));
        }
    return out;
}

LinDiffOp scale_op(LinDiffOp op, const Rational& r) {
    for (auto& t : op.terms) t.left = scale(t.left, r);
    return op;
}

namespace {

// The bilinear action x -> L x R of one term, as an n x n rational matrix.
Mat<Rational> term_matrix(const Element<Rational>& left, const Element<Rational>& right) {
    const int n = left.dim();
    Mat<Rational> m(n, n);
    auto self = left.alg;
    for (int b = 0; b < n; ++b) {
        auto img = left * basis_element<Rational>(self, b) * right;
        for (int i = 0; i < n; ++i) m(i, b) = img.c[i];
    }
    return m;
}

} // namespace

bool op_equal(const LinDiffOp& a, const LinDiffOp& b) {
    if (a.order != b.order) return false;
    if (!a.alg->same_structure(*b.alg)) return false;
    const int n = a.alg->dim();
    auto collect = [&](const LinDiffOp& op) {
        std::map<std::pair<int, int>, Mat<Rational>> sums;
        for (const auto& t : op.terms) {
            auto key = std::make_pair(std::min(t.k, t.l), std::max(t.k, t.l));
            if (op.order == 1) key = {t.k, t.k};
            auto m = term_matrix(t.left, t.right);
            auto it = sums.find(key);
            if (it == sums.end()) {
                sums.emplace(key, std::move(m));
            } else {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) it->second(i, j) += m(i, j);
            }
        }
        return sums;
    };
    auto sa = collect(a), sb = collect(b);
    auto is_zero = [&](const Mat<Rational>& m) {
        for (const auto& v : m.a)
            if (v != 0) return false;
        return true;
    };
    for (const auto& [key, m] : sa) {
        auto it = sb.find(key);
        if (it == sb.end()) {
            if (!is_zero(m)) return false;
            continue;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m(i, j) != it->second(i, j)) return false;
    }
    for (const auto& [key, m] : sb)
        if (sa.find(key) == sa.end() && !is_zero(m)) return false;
    return true;
}

namespace {

double partial_scale(const JetElement& f, int order) {
    double s = 0;
    const int m = f.dim();
    for (int p = 0; p < m; ++p) {
        const auto& jet = f.c[p];
        if (jet.vars() == 0) continue;
        if (order == 1)
            for (double v : jet.g) s = std::max(s, std::fabs(v));
        else
            for (double v : jet.h) s = std::max(s, std::fabs(v));
    }
    return s;
}

} // namespace

double normalized_residual(const LinDiffOp& op, const JetElement& f) {
    return max_abs(apply(op, f)) / (1.0 + partial_scale(f, op.order));
}

Verdict holomorphy_check(const AlgebraPtr& alg, const ExprPtr& f, const SamplingSpec& spec) {
    std::vector<LinDiffOp> ops;
    for (const auto& name : holomorphy_operators(alg)) ops.push_back(dbar(alg, name));

    Verdict verdict;
    verdict.tol = spec.tol;
    for (const auto& op : ops) verdict.residuals[op.name] = 0.0;

    Rng rng(spec.seed);
    const int n = alg->dim();
    int accepted = 0;
    long attempts = 0;
    const long max_attempts = 50L * spec.points + 100;
    while (accepted < spec.points) {
        if (++attempts > max_attempts)
            throw AllPointsRejected("sampler could not find " + std::to_string(spec.points) +
                                    " valid points");
        Element<double> pt = zero_element<double>(alg);
        for (int k = 0; k < n; ++k) pt.c[k] = rng.uniform(spec.lo, spec.hi);
        EvalStats stats;
        JetElement jet;
        try {
            jet = eval(f, seed(pt), &stats);
        } catch (const Error&) {
            continue;
        }
        if (stats.min_division_margin < spec.reject_margin) continue;
        ++accepted;
        double norm = 1.0 + partial_scale(jet, 1);
        for (const auto& op : ops) {
            double res = max_abs(apply(op, jet)) / norm;
            verdict.residuals[op.name] = std::max(verdict.residuals[op.name], res);
        }
    }
    verdict.points = accepted;
    verdict.pass = true;
    for (const auto& [name, res] : verdict.residuals)
        if (!(res < spec.tol)) verdict.pass = false;
    return verdict;
}

namespace {

struct PairingEntry {
    std::string op;
    Mat<Rational> dvar; // direction -> conjugate-coordinate differential
};

Mat<Rational> pick_matrix(int n, std::vector<std::tuple<int, int, int>> entries) {
    Mat<Rational> m(n, n);
    for (auto [i, j, s] : entries) m(i, j) = s;
    return m;
}

std::vector<PairingEntry> pairing_table(const AlgebraPtr& alg) {
    const std::string& a = alg->name();
    const int n = alg->dim();
    auto identity = [&] {
        Mat<Rational> m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    };
    auto conj_matrix = [&](const std::string& name) { return alg->conjugation(name).matrix; };
    if (a == "complex") return {{"dz", identity()}, {"dzbar", conj_matrix("bar")}};
    if (a == "hyperbolic_complex") return {{"dz", identity()}, {"dzstar", conj_matrix("star")}};
    if (a == "four_real_hyperbolic")
        return {{"dalpha", pick_matrix(n, {{0, 0, 1}, {2, 2, 1}})},
                {"dbeta", pick_matrix(n, {{0, 1, 1}, {2, 3, 1}})},
                {"dalphastar", pick_matrix(n, {{0, 0, 1}, {2, 2, -1}})},
                {"dbetastar", pick_matrix(n, {{0, 1, 1}, {2, 3, -1}})}};
    if (a == "bicomplex" || a == "hyperbolic_bicomplex")
        return {{"dalpha", identity()}, {"dalphastar", conj_matrix("star")}};
    if (a == "double_complex")
        return {{"dalpha", identity()}, {"dalphastar", conj_matrix("star")}};
    if (a == "hyperbolic_double_complex")
        return {{"dq", identity()}, {"dqstar", conj_matrix("star")}};
    return {};
}

} // namespace

bool has_differential_pairing(const AlgebraPtr& alg) { return !pairing_table(alg).empty(); }

double differential_decomposition_check(const AlgebraPtr& alg, const ExprPtr& f,
                                        const Element<double>& point,
                                        const Element<double>& direction) {
    auto table = pairing_table(alg);
    if (table.empty())
        throw UnknownOperator("no differential pairing registered for '" + alg->name() + "'");
    JetElement jet = eval(f, seed(point));

    Element<double> df = zero_element<double>(alg);
    for (int k = 0; k < alg->dim(); ++k)
        df = df + direction.c[k] * jet_partial(jet, k);

    Element<double> pairing = zero_element<double>(alg);
    for (const auto& entry : table) {
        Element<double> dvar = zero_element<double>(alg);
        for (int i = 0; i < alg->dim(); ++i)
            for (int j = 0; j < alg->dim(); ++j)
                if (entry.dvar(i, j) != 0) dvar.c[i] += to_double(entry.dvar(i, j)) * direction.c[j];
        pairing = pairing + apply(dbar(alg, entry.op), jet) * dvar;
    }
    return max_abs(df - pairing);
}

} // namespace hypercx
