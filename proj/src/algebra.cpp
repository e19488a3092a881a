#include "hypercx/algebra.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <mutex>

namespace hypercx {

namespace {

Mat<Rational> diag_matrix(const std::vector<int>& signs) {
    Mat<Rational> m(static_cast<int>(signs.size()), static_cast<int>(signs.size()));
    for (std::size_t i = 0; i < signs.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = signs[i];
    return m;
}

} // namespace

Algebra::Algebra(std::string name, int dim, std::vector<std::string> basis_labels,
                 std::vector<Rational> table, bool commutative, int unit_index)
    : name_(std::move(name)),
      dim_(dim),
      basis_labels_(std::move(basis_labels)),
      table_(std::move(table)),
      commutative_(commutative),
      unit_index_(unit_index) {
    if (dim_ <= 0) throw InvalidDimension("algebra dimension must be positive");
    if (basis_labels_.size() != static_cast<std::size_t>(dim_) ||
        table_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
        throw InvalidDimension("descriptor sizes do not match dim");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int m = 0; m < dim_; ++m) {
                const Rational& r = this->table(i, j, m);
                if (r != 0) sparse_.push_back({i, j, m, r, to_double(r)});
            }
}

const Conjugation& Algebra::conjugation(const std::string& name) const {
    for (const auto& c : conjugations_)
        if (c.name == name) return c;
    throw UnknownConjugation("no conjugation '" + name + "' on algebra '" + name_ + "'");
}

bool Algebra::has_conjugation(const std::string& name) const {
    for (const auto& c : conjugations_)
        if (c.name == name) return true;
    return false;
}

void Algebra::add_conjugation(Conjugation c) { conjugations_.push_back(std::move(c)); }

void Algebra::add_unit_symbol(const std::string& sym, int index) { unit_symbols_[sym] = index; }

bool Algebra::same_structure(const Algebra& other) const {
    return name_ == other.name_ && dim_ == other.dim_ && table_ == other.table_;
}

void Algebra::validate() const {
    const int n = dim_;
    auto mul_basis = [&](const std::vector<Rational>& a, int q) {
        std::vector<Rational> out(n, Rational(0));
        for (int p = 0; p < n; ++p) {
            if (a[p] == 0) continue;
            for (int m = 0; m < n; ++m) out[m] += a[p] * table(p, q, m);
        }
        return out;
    };
    auto basis_vec = [&](int p) {
        std::vector<Rational> v(n, Rational(0));
        v[p] = 1;
        return v;
    };
    // associativity over all basis triples
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ab = mul_basis(basis_vec(a), b);
            for (int c = 0; c < n; ++c) {
                auto left = mul_basis(ab, c);
                auto bc = mul_basis(basis_vec(b), c);
                std::vector<Rational> right(n, Rational(0));
                for (int m = 0; m < n; ++m)
                    for (int p = 0; p < n; ++p)
                        if (bc[p] != 0) right[m] += bc[p] * table(a, p, m);
                if (left != right)
                    throw DomainError("table of '" + name_ + "' is not associative");
            }
        }
    // two-sided unit
    for (int a = 0; a < n; ++a)
        for (int m = 0; m < n; ++m) {
            Rational want = (m == a) ? 1 : 0;
            if (table(unit_index_, a, m) != want || table(a, unit_index_, m) != want)
                throw DomainError("basis " + std::to_string(unit_index_) +
                                  " is not a two-sided unit of '" + name_ + "'");
        }
    if (commutative_) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int m = 0; m < n; ++m)
                    if (table(a, b, m) != table(b, a, m))
                        throw DomainError("'" + name_ + "' is flagged commutative but is not");
    }
    // conjugations: involution + tagged product behaviour
    auto self = shared_from_this();
    for (const auto& conj : conjugations_) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational acc = 0;
                for (int k = 0; k < n; ++k) acc += conj.matrix(i, k) * conj.matrix(k, j);
                if (acc != ((i == j) ? 1 : 0))
                    throw DomainError("conjugation '" + conj.name + "' is not an involution");
            }
        if (conj.kind == Conjugation::Kind::Linear) continue;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto ea = basis_element<Rational>(self, a);
                auto eb = basis_element<Rational>(self, b);
                auto lhs = conjugate(ea * eb, conj.name);
                auto rhs = (conj.kind == Conjugation::Kind::Homomorphism)
                               ? conjugate(ea, conj.name) * conjugate(eb, conj.name)
                               : conjugate(eb, conj.name) * conjugate(ea, conj.name);
                if (lhs.c != rhs.c)
                    throw DomainError("conjugation '" + conj.name + "' violates its product tag");
            }
    }
}

AlgebraPtr Algebra::cyclic(int n, int sign) {
    if (n < 2) throw InvalidDimension("cyclic algebra needs n >= 2");
    if (sign != 1 && sign != -1) throw DomainError("cyclic sign must be +1 or -1");
    std::vector<std::string> labels(n);
    labels[0] = "1";
    for (int k = 1; k < n; ++k) labels[k] = (k == 1) ? "j" : "j^" + std::to_string(k);
    std::vector<Rational> table(static_cast<std::size_t>(n) * n * n, Rational(0));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            int m = (p + q) % n;
            Rational s = ((p + q) >= n && sign < 0) ? -1 : 1;
            table[(static_cast<std::size_t>(p) * n + q) * n + m] = s;
        }
    std::string name = "cyclic" + std::to_string(n) + (sign > 0 ? "p" : "m");
    auto alg = std::make_shared<Algebra>(name, n, labels, std::move(table), true, 0);
    std::vector<int> star(n);
    for (int k = 0; k < n; ++k) star[k] = (k % 2 == 0) ? 1 : -1;
    // j -> -j is a ring map only when (-j)^n = j^n, i.e. n even
    alg->add_conjugation({"star", diag_matrix(star),
                          n % 2 == 0 ? Conjugation::Kind::Homomorphism
                                     : Conjugation::Kind::Linear});
    alg->add_unit_symbol("j", 1);
    return alg;
}

namespace {

AlgebraPtr make_bicomplex_like(const std::string& name, int square) {
    // basis 1, j1, j2, j1j2 with j1^2 = j2^2 = square, commuting
    const int n = 4;
    auto idx = [](int a, int b) { return a + 2 * b; }; // j1^a j2^b
    std::vector<Rational> table(n * n * n, Rational(0));
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    int p = idx(a1, b1), q = idx(a2, b2);
                    int m = idx((a1 + a2) % 2, (b1 + b2) % 2);
                    Rational s = 1;
                    if (a1 + a2 >= 2) s *= square;
                    if (b1 + b2 >= 2) s *= square;
                    table[(static_cast<std::size_t>(p) * n + q) * n + m] = s;
                }
    auto alg = std::make_shared<Algebra>(name, n,
                                         std::vector<std::string>{"1", "j1", "j2", "j1j2"},
                                         std::move(table), true, 0);
    alg->add_conjugation({"star", diag_matrix({1, 1, -1, -1}), Conjugation::Kind::Homomorphism});
    alg->add_unit_symbol("j1", 1);
    alg->add_unit_symbol("j2", 2);
    alg->set_grouping(PairGrouping{square, {{{0, 1}, {2, 3}}}, {{{0, 1}, {2, 3}}}});
    return alg;
}

AlgebraPtr make_coquaternion() {
    // basis 1, i, j, k with i^2 = -1, j^2 = k^2 = +1, ij = k = -ji
    const int n = 4;
    std::vector<Rational> table(n * n * n, Rational(0));
    auto set = [&](int p, int q, int m, int s) {
        table[(static_cast<std::size_t>(p) * n + q) * n + m] = s;
    };
    for (int p = 0; p < n; ++p) {
        set(0, p, p, 1);
        if (p != 0) set(p, 0, p, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, 1);
    set(3, 3, 0, 1);
    set(1, 2, 3, 1);  // ij = k
    set(2, 1, 3, -1); // ji = -k
    set(2, 3, 1, -1); // jk = -i
    set(3, 2, 1, 1);  // kj = i
    set(3, 1, 2, 1);  // ki = j
    set(1, 3, 2, -1); // ik = -j
    auto alg = std::make_shared<Algebra>("coquaternion", n,
                                         std::vector<std::string>{"1", "i", "j", "k"},
                                         std::move(table), false, 0);
    alg->add_conjugation({"star", diag_matrix({1, 1, -1, -1}), Conjugation::Kind::Homomorphism});
    alg->add_conjugation({"bar", diag_matrix({1, -1, 1, -1}), Conjugation::Kind::Homomorphism});
    alg->add_conjugation({"barstar", diag_matrix({1, -1, -1, 1}), Conjugation::Kind::Homomorphism});
    alg->add_conjugation(
        {"conj", diag_matrix({1, -1, -1, -1}), Conjugation::Kind::AntiHomomorphism});
    alg->add_unit_symbol("i", 1);
    alg->add_unit_symbol("j", 2);
    alg->add_unit_symbol("k", 3);
    alg->set_grouping(PairGrouping{-1, {{{0, 1}, {2, 3}}}, {{{0, 1}, {2, 3}}}});
    return alg;
}

std::vector<Rational> copy_table(const AlgebraPtr& base) {
    const int n = base->dim();
    std::vector<Rational> table;
    table.reserve(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) table.push_back(base->table(i, j, m));
    return table;
}

AlgebraPtr build_preset(const std::string& name) {
    if (name == "complex") {
        auto alg = std::make_shared<Algebra>("complex", 2, std::vector<std::string>{"1", "i"},
                                             copy_table(Algebra::cyclic(2, -1)), true, 0);
        alg->add_conjugation({"bar", diag_matrix({1, -1}), Conjugation::Kind::Homomorphism});
        alg->add_unit_symbol("i", 1);
        return alg;
    }
    if (name == "hyperbolic_complex") {
        auto alg = std::make_shared<Algebra>("hyperbolic_complex", 2,
                                             std::vector<std::string>{"1", "j"},
                                             copy_table(Algebra::cyclic(2, 1)), true, 0);
        alg->add_conjugation({"star", diag_matrix({1, -1}), Conjugation::Kind::Homomorphism});
        alg->add_unit_symbol("j", 1);
        return alg;
    }
    auto renamed_cyclic = [&](int n, int sign) {
        auto base = Algebra::cyclic(n, sign);
        auto alg = std::make_shared<Algebra>(name, n, base->basis_labels(), copy_table(base),
                                             true, 0);
        std::vector<int> star(n);
        for (int k = 0; k < n; ++k) star[k] = (k % 2 == 0) ? 1 : -1;
        alg->add_conjugation({"star", diag_matrix(star), Conjugation::Kind::Homomorphism});
        alg->add_unit_symbol("j", 1);
        return alg;
    };
    if (name == "four_real_hyperbolic") return renamed_cyclic(4, 1);
    if (name == "four_real_elliptic") return renamed_cyclic(4, -1);
    if (name == "four_complex") {
        auto alg = renamed_cyclic(8, -1);
        alg->add_unit_symbol("i", 4); // j^4 = i
        return alg;
    }
    if (name == "double_complex") {
        auto alg = renamed_cyclic(4, -1);
        alg->add_unit_symbol("i", 2); // j^2 = i
        alg->set_grouping(PairGrouping{-1, {{{0, 2}, {1, 3}}}, {{{0, 2}, {1, 3}}}});
        return alg;
    }
    if (name == "hyperbolic_double_complex") {
        auto alg = renamed_cyclic(4, 1);
        alg->set_grouping(PairGrouping{1, {{{0, 2}, {1, 3}}}, {{{0, 2}, {1, 3}}}});
        return alg;
    }
    if (name == "bicomplex") return make_bicomplex_like("bicomplex", -1);
    if (name == "hyperbolic_bicomplex") return make_bicomplex_like("hyperbolic_bicomplex", 1);
    if (name == "coquaternion") return make_coquaternion();
    throw UnknownPreset("unknown algebra preset '" + name + "'");
}

} // namespace

AlgebraPtr Algebra::preset(const std::string& name) {
    static std::mutex mutex;
    static std::map<std::string, AlgebraPtr> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    auto alg = build_preset(name);
    cache[name] = alg;
    return alg;
}

const std::vector<std::string>& Algebra::preset_names() {
    static const std::vector<std::string> names = {
        "complex",          "hyperbolic_complex",      "four_real_hyperbolic",
        "four_real_elliptic", "four_complex",          "bicomplex",
        "double_complex",   "hyperbolic_bicomplex",    "hyperbolic_double_complex",
        "coquaternion"};
    return names;
}

nlohmann::json Algebra::to_json() const {
    nlohmann::json doc;
    doc["name"] = name_;
    doc["dim"] = dim_;
    doc["basis"] = basis_labels_;
    nlohmann::json table = nlohmann::json::array();
    for (int i = 0; i < dim_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < dim_; ++j) {
            nlohmann::json cell = nlohmann::json::array();
            for (int m = 0; m < dim_; ++m) cell.push_back(rational_to_string(this->table(i, j, m)));
            row.push_back(cell);
        }
        table.push_back(row);
    }
    doc["table"] = table;
    doc["commutative"] = commutative_;
    doc["unit_index"] = unit_index_;
    nlohmann::json conjs = nlohmann::json::array();
    for (const auto& c : conjugations_) {
        nlohmann::json entry;
        entry["name"] = c.name;
        nlohmann::json mat = nlohmann::json::array();
        for (int i = 0; i < dim_; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < dim_; ++j) row.push_back(rational_to_string(c.matrix(i, j)));
            mat.push_back(row);
        }
        entry["matrix"] = mat;
        entry["kind"] = c.kind == Conjugation::Kind::Homomorphism        ? "homomorphism"
                        : c.kind == Conjugation::Kind::AntiHomomorphism ? "anti_homomorphism"
                                                                        : "linear";
        conjs.push_back(entry);
    }
    doc["conjugations"] = conjs;
    return doc;
}

AlgebraPtr Algebra::from_json(const nlohmann::json& doc) {
    const int n = doc.at("dim").get<int>();
    std::vector<Rational> table;
    table.reserve(static_cast<std::size_t>(n) * n * n);
    for (const auto& row : doc.at("table"))
        for (const auto& cell : row)
            for (const auto& v : cell) table.push_back(parse_rational(v.get<std::string>()));
    auto alg = std::make_shared<Algebra>(doc.at("name").get<std::string>(), n,
                                         doc.at("basis").get<std::vector<std::string>>(),
                                         std::move(table), doc.at("commutative").get<bool>(),
                                         doc.at("unit_index").get<int>());
    for (const auto& entry : doc.value("conjugations", nlohmann::json::array())) {
        Conjugation c;
        c.name = entry.at("name").get<std::string>();
        c.matrix = Mat<Rational>(n, n);
        const auto& mat = entry.at("matrix");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                c.matrix(i, j) = parse_rational(mat[i][j].get<std::string>());
        std::string kind = entry.at("kind").get<std::string>();
        c.kind = kind == "homomorphism"        ? Conjugation::Kind::Homomorphism
                 : kind == "anti_homomorphism" ? Conjugation::Kind::AntiHomomorphism
                                               : Conjugation::Kind::Linear;
        alg->add_conjugation(std::move(c));
    }
    alg->validate();
    return alg;
}

bool is_zero_divisor(const Element<Rational>& a) { return rep_determinant(a) == 0; }

bool is_zero_divisor(const Element<double>& a) {
    double det = rep_determinant(a);
    double scale = 1.0 + std::pow(norm2(a), a.dim());
    return std::fabs(det) < 1e-10 * scale;
}

namespace {

Element<double> apply_map(const Element<double>& a, const AlgebraPtr& target,
                          const double m[4][4]) {
    Element<double> out = zero_element<double>(target);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.c[i] += m[i][j] * a.c[j];
    return out;
}

} // namespace

Element<double> bc_dc_isomorphism(const Element<double>& a) {
    auto dc = Algebra::preset("double_complex");
    if (!a.alg->same_structure(*dc))
        throw AlgebraMismatch("bc_dc_isomorphism expects a double_complex element");
    // column k = image of dc basis k: 1 -> 1, j -> s(j2 - j1j2), j^2 -> j1,
    // j^3 -> s(j2 + j1j2), with s = sqrt(1/2) solving -c^2 = i for c = e^{-i pi/4}.
    const double s = std::sqrt(0.5);
    const double m[4][4] = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, s, 0, s}, {0, -s, 0, s}};
    return apply_map(a, Algebra::preset("bicomplex"), m);
}

Element<double> bc_dc_isomorphism_inverse(const Element<double>& a) {
    auto bc = Algebra::preset("bicomplex");
    if (!a.alg->same_structure(*bc))
        throw AlgebraMismatch("bc_dc_isomorphism_inverse expects a bicomplex element");
    const double s = std::sqrt(0.5);
    const double m[4][4] = {{1, 0, 0, 0}, {0, 0, s, -s}, {0, 1, 0, 0}, {0, 0, s, s}};
    return apply_map(a, Algebra::preset("double_complex"), m);
}

double scalar_product_h4(const Element<double>& x, const Element<double>& y) {
    if (x.dim() != 4 || y.dim() != 4)
        throw AlgebraMismatch("scalar_product_h4 expects dim-4 elements");
    check_same_algebra(x, y);
    return std::fabs(x.c[0] * y.c[0] - x.c[1] * y.c[1] + x.c[2] * y.c[2] - x.c[3] * y.c[3]);
}

std::pair<double, double> minkowski_intervals(const Element<double>& dx) {
    if (dx.dim() != 4) throw AlgebraMismatch("minkowski_intervals expects a dim-4 element");
    return {dx.c[0] * dx.c[0] - dx.c[2] * dx.c[2], dx.c[1] * dx.c[1] - dx.c[3] * dx.c[3]};
}

Element<double> to_double_element(const Element<Rational>& a) {
    Element<double> out(a.alg, std::vector<double>(a.dim(), 0.0));
    for (int k = 0; k < a.dim(); ++k) out.c[k] = to_double(a.c[k]);
    return out;
}

Element<Rational> element_from_strings(const AlgebraPtr& alg,
                                       const std::vector<std::string>& coeffs) {
    if (static_cast<int>(coeffs.size()) != alg->dim())
        throw InvalidDimension("expected " + std::to_string(alg->dim()) + " coefficients");
    Element<Rational> out = zero_element<Rational>(alg);
    for (int k = 0; k < alg->dim(); ++k) out.c[k] = parse_rational(coeffs[k]);
    return out;
}

} // namespace hypercx
