#include "hypercx/expr.hpp"

#include <cctype>
#include <optional>

namespace hypercx {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, "", start};
            return;
        }
        char c = text_[pos_];
        auto one = [&](Token::Kind k) {
            ++pos_;
            current_ = {k, std::string(1, c), start};
        };
        switch (c) {
        case '+': return one(Token::Kind::Plus);
        case '-': return one(Token::Kind::Minus);
        case '*': return one(Token::Kind::Star);
        case '/': return one(Token::Kind::Slash);
        case '^': return one(Token::Kind::Caret);
        case '(': return one(Token::Kind::LParen);
        case ')': return one(Token::Kind::RParen);
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos_;
            bool seen_dot = false;
            while (end < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[end])) ||
                    (!seen_dot && text_[end] == '.'))) {
                if (text_[end] == '.') seen_dot = true;
                ++end;
            }
            current_ = {Token::Kind::Number, text_.substr(pos_, end - pos_), start};
            pos_ = end;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            current_ = {Token::Kind::Ident, text_.substr(pos_, end - pos_), start};
            pos_ = end;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, "", 0};
};

const char* kFunctionNames[] = {"exp", "cos", "sin", "cosh", "sinh", "C", "S"};

bool is_function_name(const std::string& name) {
    for (const char* f : kFunctionNames)
        if (name == f) return true;
    return false;
}

std::optional<int> coordinate_index(const std::string& name, int dim) {
    if (name.size() < 2 || name[0] != 'x') return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    int idx = std::stoi(name.substr(1));
    if (idx >= dim) return std::nullopt;
    return idx;
}

Rational rational_pow(Rational base, long long exp) {
    bool invert = exp < 0;
    if (invert) exp = -exp;
    Rational acc = 1;
    while (exp > 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return invert ? Rational(1) / acc : acc;
}

class Parser {
public:
    Parser(const std::string& text, AlgebraPtr algebra)
        : lexer_(text), algebra_(std::move(algebra)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        const Token& t = lexer_.peek();
        if (t.kind != Token::Kind::End)
            throw SyntaxError("unexpected trailing input '" + t.text + "'", t.pos);
        return e;
    }

private:
    /// Constant rational subtrees collapse to literals so that "1/2" or
    /// "-3^2" denote numbers, with the operator precedence intact.
    static ExprPtr node(Expr n) {
        auto is_num = [](const ExprPtr& e) { return e && e->kind == Expr::Kind::Number; };
        switch (n.kind) {
        case Expr::Kind::Neg:
            if (is_num(n.a)) return number(-n.a->number);
            break;
        case Expr::Kind::Add:
            if (is_num(n.a) && is_num(n.b)) return number(n.a->number + n.b->number);
            break;
        case Expr::Kind::Sub:
            if (is_num(n.a) && is_num(n.b)) return number(n.a->number - n.b->number);
            break;
        case Expr::Kind::Mul:
            if (is_num(n.a) && is_num(n.b)) return number(n.a->number * n.b->number);
            break;
        case Expr::Kind::Div:
            if (is_num(n.a) && is_num(n.b) && n.b->number != 0)
                return number(n.a->number / n.b->number);
            break;
        case Expr::Kind::Pow:
            if (is_num(n.a) && (n.a->number != 0 || n.exponent >= 0))
                return number(rational_pow(n.a->number, n.exponent));
            break;
        default:
            break;
        }
        return std::make_shared<Expr>(std::move(n));
    }

    static ExprPtr number(Rational r) {
        Expr n;
        n.kind = Expr::Kind::Number;
        n.number = std::move(r);
        return std::make_shared<Expr>(std::move(n));
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (true) {
            Token::Kind k = lexer_.peek().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) return left;
            lexer_.take();
            ExprPtr right = parse_term();
            Expr n;
            n.kind = (k == Token::Kind::Plus) ? Expr::Kind::Add : Expr::Kind::Sub;
            n.a = left;
            n.b = right;
            left = node(std::move(n));
        }
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        while (true) {
            Token::Kind k = lexer_.peek().kind;
            if (k != Token::Kind::Star && k != Token::Kind::Slash) return left;
            lexer_.take();
            ExprPtr right = parse_factor();
            Expr n;
            n.kind = (k == Token::Kind::Star) ? Expr::Kind::Mul : Expr::Kind::Div;
            n.a = left;
            n.b = right;
            left = node(std::move(n));
        }
    }

    ExprPtr parse_factor() {
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.take();
            Expr n;
            n.kind = Expr::Kind::Neg;
            n.a = parse_factor();
            return node(std::move(n));
        }
        ExprPtr base = parse_atom();
        if (lexer_.peek().kind == Token::Kind::Caret) {
            lexer_.take();
            bool negative = false;
            if (lexer_.peek().kind == Token::Kind::Minus) {
                lexer_.take();
                negative = true;
            }
            Token t = lexer_.take();
            if (t.kind != Token::Kind::Number || t.text.find('.') != std::string::npos)
                throw SyntaxError("exponent must be an integer", t.pos);
            Expr n;
            n.kind = Expr::Kind::Pow;
            n.a = base;
            n.exponent = std::stoll(t.text);
            if (negative) n.exponent = -n.exponent;
            return node(std::move(n));
        }
        return base;
    }

    ExprPtr parse_atom() {
        Token t = lexer_.take();
        switch (t.kind) {
        case Token::Kind::Number: {
            Expr n;
            n.kind = Expr::Kind::Number;
            n.number = parse_rational(t.text);
            return node(std::move(n));
        }
        case Token::Kind::LParen: {
            ExprPtr inner = parse_expr();
            Token close = lexer_.take();
            if (close.kind != Token::Kind::RParen)
                throw SyntaxError("expected ')'", close.pos);
            return inner;
        }
        case Token::Kind::Ident: {
            if (lexer_.peek().kind == Token::Kind::LParen) {
                if (!is_function_name(t.text))
                    throw UnknownSymbol("unknown function '" + t.text + "'");
                lexer_.take();
                ExprPtr arg = parse_expr();
                Token close = lexer_.take();
                if (close.kind != Token::Kind::RParen)
                    throw SyntaxError("expected ')' after function argument", close.pos);
                Expr n;
                n.kind = Expr::Kind::Call;
                n.name = t.text;
                n.a = arg;
                return node(std::move(n));
            }
            return resolve_ident(t);
        }
        default:
            throw SyntaxError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    ExprPtr resolve_ident(const Token& t) {
        if (t.text == "v") {
            Expr n;
            n.kind = Expr::Kind::Var;
            return node(std::move(n));
        }
        if (auto coord = coordinate_index(t.text, algebra_->dim())) {
            Expr n;
            n.kind = Expr::Kind::Coord;
            n.index = *coord;
            n.name = t.text;
            return node(std::move(n));
        }
        auto it = algebra_->unit_symbols().find(t.text);
        if (it != algebra_->unit_symbols().end()) {
            Expr n;
            n.kind = Expr::Kind::Unit;
            n.index = it->second;
            n.name = t.text;
            return node(std::move(n));
        }
        const auto& labels = algebra_->basis_labels();
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == t.text) {
                Expr n;
                n.kind = Expr::Kind::Unit;
                n.index = static_cast<int>(k);
                n.name = t.text;
                return node(std::move(n));
            }
        throw UnknownSymbol("unknown symbol '" + t.text + "' in algebra '" + algebra_->name() +
                            "'");
    }

    Lexer lexer_;
    AlgebraPtr algebra_;
};

int precedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Number:
        // "p/q" literals reparse through the division rule and negative ones
        // through unary minus; report the loosest operator in the spelling
        if (denominator(e.number) != 1) return 2;
        return e.number < 0 ? 3 : 5;
    default: return 5;
    }
}

void print(const ExprPtr& e, std::string& out, int parent_prec, bool right_side) {
    int prec = precedence(*e);
    bool parens = prec < parent_prec || (prec == parent_prec && right_side);
    if (parens) out += "(";
    switch (e->kind) {
    case Expr::Kind::Number: out += rational_to_string(e->number); break;
    case Expr::Kind::Unit:
    case Expr::Kind::Coord: out += e->name; break;
    case Expr::Kind::Var: out += "v"; break;
    case Expr::Kind::Neg:
        out += "-";
        print(e->a, out, prec, true);
        break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        print(e->a, out, prec, false);
        out += (e->kind == Expr::Kind::Add) ? " + " : " - ";
        print(e->b, out, prec, true);
        break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        print(e->a, out, prec, false);
        out += (e->kind == Expr::Kind::Mul) ? "*" : "/";
        print(e->b, out, prec, true);
        break;
    case Expr::Kind::Pow:
        print(e->a, out, prec + 1, false);
        out += "^";
        if (e->exponent < 0) {
            out += "-" + std::to_string(-e->exponent);
        } else {
            out += std::to_string(e->exponent);
        }
        break;
    case Expr::Kind::Call:
        out += e->name;
        out += "(";
        print(e->a, out, 0, false);
        out += ")";
        break;
    }
    if (parens) out += ")";
}

} // namespace

ExprPtr parse(const std::string& text, const AlgebraPtr& algebra) {
    return Parser(text, algebra).run();
}

std::string pretty(const ExprPtr& e) {
    std::string out;
    print(e, out, 0, false);
    return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->number != b->number || a->index != b->index ||
        a->name != b->name || a->exponent != b->exponent)
        return false;
    if ((a->a == nullptr) != (b->a == nullptr) || (a->b == nullptr) != (b->b == nullptr))
        return false;
    if (a->a && !expr_equal(a->a, b->a)) return false;
    if (a->b && !expr_equal(a->b, b->b)) return false;
    return true;
}

namespace detail {

namespace {

constexpr double kPairTolerance = 1e-9;

// The C/S argument must sit in the z-plane of double_complex (components
// 1 and j^2 = i only).
void require_dc_complex_argument(const AlgebraPtr& alg, double off_plane, double scale) {
    if (alg->name() != "double_complex")
        throw DomainError("C/S are defined on the double_complex algebra only");
    if (off_plane > kPairTolerance * (1.0 + scale))
        throw DomainError("C/S argument must be a complex number (no j components)");
}

} // namespace

Element<double> eval_cs(bool cosine, const Element<double>& arg) {
    double off = std::max(std::fabs(arg.c[1]), std::fabs(arg.c[3]));
    require_dc_complex_argument(arg.alg, off, max_abs(arg));
    std::complex<double> w(arg.c[0], arg.c[2]);
    std::complex<double> r = cosine ? C_closed(w) : S_closed(w);
    Element<double> out = zero_element<double>(arg.alg);
    out.c[0] = r.real();
    out.c[2] = r.imag();
    return out;
}

Element<Jet<double>> eval_cs(bool cosine, const Element<Jet<double>>& arg) {
    double off = std::max(jet_mag(arg.c[1]), jet_mag(arg.c[3]));
    double scale = 0;
    for (const auto& j : arg.c) scale = std::max(scale, jet_mag(j));
    require_dc_complex_argument(arg.alg, off, scale);

    using CJ = Jet<std::complex<double>>;
    const int m = std::max(arg.c[0].vars(), arg.c[2].vars());
    CJ w(std::complex<double>(arg.c[0].v, arg.c[2].v), m);
    for (int k = 0; k < m; ++k) {
        double re = arg.c[0].vars() ? arg.c[0].g[k] : 0.0;
        double im = arg.c[2].vars() ? arg.c[2].g[k] : 0.0;
        w.g[k] = {re, im};
    }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            double re = arg.c[0].vars() ? arg.c[0].hess(k, l) : 0.0;
            double im = arg.c[2].vars() ? arg.c[2].hess(k, l) : 0.0;
            w.hess(k, l) = {re, im};
        }

    const std::complex<double> i(0, 1);
    const std::complex<double> u = (1.0 - i) / std::sqrt(2.0); // C(w) = cos(u w)
    CJ uw = u * w;
    CJ r = cosine ? cos(uw) : ((1.0 + i) / std::sqrt(2.0)) * sin(uw);

    Element<Jet<double>> out = zero_element<Jet<double>>(arg.alg);
    Jet<double> re(r.v.real(), m), im(r.v.imag(), m);
    for (int k = 0; k < m; ++k) {
        re.g[k] = r.g[k].real();
        im.g[k] = r.g[k].imag();
    }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            re.hess(k, l) = r.hess(k, l).real();
            im.hess(k, l) = r.hess(k, l).imag();
        }
    out.c[0] = re;
    out.c[2] = im;
    return out;
}

} // namespace detail

} // namespace hypercx
