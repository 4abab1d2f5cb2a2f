#include "fallcalc/expr.hpp"

#include <cctype>

namespace fallcalc {

ExprPtr Expr::number(GaussianRational v) {
    auto e = std::make_shared<Expr>();
    e->node = Node::number;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::variable() {
    auto e = std::make_shared<Expr>();
    e->node = Node::variable;
    return e;
}

ExprPtr Expr::unary(Node n, ExprPtr inner) {
    auto e = std::make_shared<Expr>();
    e->node = n;
    e->a = std::move(inner);
    return e;
}

ExprPtr Expr::binary(Node n, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->node = n;
    e->a = std::move(lhs);
    e->b = std::move(rhs);
    return e;
}

ExprPtr Expr::withCount(Node n, ExprPtr inner, int count) {
    auto e = std::make_shared<Expr>();
    e->node = n;
    e->a = std::move(inner);
    e->k = count;
    return e;
}

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };
    Kind kind;
    size_t offset;
    std::string text;     // ident
    Rat value;            // number magnitude
    bool imaginary = false;
    bool integral = false;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        size_t start = pos_;
        if (pos_ >= s_.size()) return {Token::Kind::end, start, "", Rat(0), false, false};
        char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Kind::plus, start, "+", Rat(0), false, false};
            case '-': ++pos_; return {Token::Kind::minus, start, "-", Rat(0), false, false};
            case '*': ++pos_; return {Token::Kind::star, start, "*", Rat(0), false, false};
            case '/': ++pos_; return {Token::Kind::slash, start, "/", Rat(0), false, false};
            case '^': ++pos_; return {Token::Kind::caret, start, "^", Rat(0), false, false};
            case '(': ++pos_; return {Token::Kind::lparen, start, "(", Rat(0), false, false};
            case ')': ++pos_; return {Token::Kind::rparen, start, ")", Rat(0), false, false};
            case ',': ++pos_; return {Token::Kind::comma, start, ",", Rat(0), false, false};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            bool dot = false;
            while (end < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[end])) || (s_[end] == '.' && !dot))) {
                if (s_[end] == '.') dot = true;
                ++end;
            }
            std::string lit = s_.substr(pos_, end - pos_);
            if (lit.back() == '.')
                throw SyntaxError(end - 1, {"digit"}, "dangling decimal point");
            pos_ = end;
            bool imag = false;
            if (pos_ < s_.size() && s_[pos_] == 'i') {
                imag = true;
                ++pos_;
            }
            return {Token::Kind::number, start, lit, ratFromString(lit), imag, !dot};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
            std::string ident = s_.substr(pos_, end - pos_);
            pos_ = end;
            return {Token::Kind::ident, start, ident, Rat(0), false, false};
        }
        throw SyntaxError(start, {"expression"}, std::string("unexpected character '") + c + "'");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { advance(); }

    ExprPtr parse() {
        ExprPtr e = sum();
        if (tok_.kind != Token::Kind::end)
            throw SyntaxError(tok_.offset, {"operator", "end of input"}, "trailing input");
        return e;
    }

private:
    Lexer lex_;
    Token tok_;

    void advance() { tok_ = lex_.next(); }

    bool accept(Token::Kind k) {
        if (tok_.kind != k) return false;
        advance();
        return true;
    }

    ExprPtr sum() {
        ExprPtr e = term();
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            Expr::Node n = tok_.kind == Token::Kind::plus ? Expr::Node::add : Expr::Node::sub;
            advance();
            e = Expr::binary(n, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (tok_.kind == Token::Kind::star || tok_.kind == Token::Kind::slash) {
            Expr::Node n = tok_.kind == Token::Kind::star ? Expr::Node::mul : Expr::Node::div;
            advance();
            e = Expr::binary(n, e, unary());
        }
        return e;
    }

    ExprPtr unary() {
        if (accept(Token::Kind::minus)) return Expr::unary(Expr::Node::neg, unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr e = atom();
        while (accept(Token::Kind::caret)) {
            if (tok_.kind != Token::Kind::number || !tok_.integral || tok_.imaginary)
                throw SyntaxError(tok_.offset, {"nonnegative integer exponent"}, "bad exponent");
            int k = static_cast<int>(numerator(tok_.value).convert_to<long>());
            advance();
            e = Expr::withCount(Expr::Node::pow, e, k);
        }
        return e;
    }

    int integerArg(const char* what) {
        bool neg = accept(Token::Kind::minus);
        if (tok_.kind != Token::Kind::number || !tok_.integral || tok_.imaginary || neg)
            throw SyntaxError(tok_.offset, {what}, std::string("expected ") + what);
        int k = static_cast<int>(numerator(tok_.value).convert_to<long>());
        advance();
        return k;
    }

    ExprPtr atom() {
        if (tok_.kind == Token::Kind::number) {
            GaussianRational v = tok_.imaginary ? GaussianRational(Rat(0), tok_.value)
                                                : GaussianRational(tok_.value);
            advance();
            return Expr::number(v);
        }
        if (tok_.kind == Token::Kind::ident) {
            std::string id = tok_.text;
            size_t off = tok_.offset;
            advance();
            if (id == "z") return Expr::variable();
            if (id == "i") return Expr::number(GaussianRational::iUnit());
            if (id == "fall" || id == "shift" || id == "delta") {
                if (!accept(Token::Kind::lparen))
                    throw SyntaxError(tok_.offset, {"("}, "call needs an argument list");
                ExprPtr inner = sum();
                ExprPtr result;
                if (id == "fall") {
                    if (!accept(Token::Kind::comma))
                        throw SyntaxError(tok_.offset, {","}, "fall takes an extent");
                    result = Expr::withCount(Expr::Node::fall, inner, integerArg("nonnegative integer extent"));
                } else if (id == "shift") {
                    if (!accept(Token::Kind::comma))
                        throw SyntaxError(tok_.offset, {","}, "shift takes an offset");
                    result = Expr::binary(Expr::Node::shift, inner, sum());
                } else {
                    int order = 1;
                    if (accept(Token::Kind::comma)) order = integerArg("nonnegative integer order");
                    result = Expr::withCount(Expr::Node::delta, inner, order);
                }
                if (!accept(Token::Kind::rparen))
                    throw SyntaxError(tok_.offset, {")"}, "unterminated call");
                return result;
            }
            throw SyntaxError(off, {"z", "i", "fall", "shift", "delta"},
                              "unknown identifier '" + id + "'");
        }
        if (accept(Token::Kind::lparen)) {
            ExprPtr e = sum();
            if (!accept(Token::Kind::rparen))
                throw SyntaxError(tok_.offset, {")"}, "unbalanced parenthesis");
            return e;
        }
        throw SyntaxError(tok_.offset, {"number", "z", "i", "(", "fall", "shift", "delta"},
                          "expected an operand");
    }
};

int nodePrecedence(Expr::Node n) {
    switch (n) {
        case Expr::Node::add:
        case Expr::Node::sub: return 1;
        case Expr::Node::mul:
        case Expr::Node::div: return 2;
        case Expr::Node::neg: return 3;
        case Expr::Node::pow: return 4;
        default: return 5;
    }
}

void printInto(const ExprPtr& e, std::string& out) {
    auto wrap = [&out](const ExprPtr& sub, int minPrec) {
        bool parens = nodePrecedence(sub->node) < minPrec;
        if (parens) out += "(";
        printInto(sub, out);
        if (parens) out += ")";
    };
    switch (e->node) {
        case Expr::Node::number: {
            const GaussianRational& v = e->value;
            if (v.im == 0) {
                if (v.re < 0) {
                    out += "-";
                    out += ratToString(-v.re);
                } else {
                    out += ratToString(v.re);
                }
            } else if (v.re == 0) {
                if (v.im == 1) out += "i";
                else if (v.im < 0) { out += "-"; out += ratToString(-v.im); out += "i"; }
                else { out += ratToString(v.im); out += "i"; }
            } else {
                // mixed literals only arise from folded input; print as a sum
                out += "(";
                out += ratToString(v.re);
                out += v.im > 0 ? "+" : "-";
                Rat m = v.im > 0 ? v.im : Rat(-v.im);
                if (m != 1) out += ratToString(m);
                out += "i)";
            }
            break;
        }
        case Expr::Node::variable: out += "z"; break;
        case Expr::Node::neg:
            out += "-";
            wrap(e->a, 3);
            break;
        case Expr::Node::add:
            wrap(e->a, 1);
            out += " + ";
            wrap(e->b, 2);
            break;
        case Expr::Node::sub:
            wrap(e->a, 1);
            out += " - ";
            wrap(e->b, 2);
            break;
        case Expr::Node::mul:
            wrap(e->a, 2);
            out += "*";
            wrap(e->b, 3);
            break;
        case Expr::Node::div:
            wrap(e->a, 2);
            out += "/";
            wrap(e->b, 3);
            break;
        case Expr::Node::pow:
            wrap(e->a, 5);
            out += "^";
            out += std::to_string(e->k);
            break;
        case Expr::Node::fall:
            out += "fall(";
            printInto(e->a, out);
            out += ", ";
            out += std::to_string(e->k);
            out += ")";
            break;
        case Expr::Node::shift:
            out += "shift(";
            printInto(e->a, out);
            out += ", ";
            printInto(e->b, out);
            out += ")";
            break;
        case Expr::Node::delta:
            out += "delta(";
            printInto(e->a, out);
            if (e->k != 1) {
                out += ", ";
                out += std::to_string(e->k);
            }
            out += ")";
            break;
    }
}

}  // namespace

ExprPtr parseExpr(const std::string& text) { return Parser(text).parse(); }

std::string printExpr(const ExprPtr& e) {
    std::string out;
    printInto(e, out);
    return out;
}

bool structurallyEqual(const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    if (x->node != y->node || x->k != y->k) return false;
    if (x->node == Expr::Node::number && !(x->value == y->value)) return false;
    return structurallyEqual(x->a, y->a) && structurallyEqual(x->b, y->b);
}

RationalFunction evalExpr(const ExprPtr& e) {
    switch (e->node) {
        case Expr::Node::number: return RationalFunction::constant(e->value);
        case Expr::Node::variable: return RationalFunction::variable();
        case Expr::Node::neg: return -evalExpr(e->a);
        case Expr::Node::add: return evalExpr(e->a) + evalExpr(e->b);
        case Expr::Node::sub: return evalExpr(e->a) - evalExpr(e->b);
        case Expr::Node::mul: return evalExpr(e->a) * evalExpr(e->b);
        case Expr::Node::div: return evalExpr(e->a) / evalExpr(e->b);
        case Expr::Node::pow: return evalExpr(e->a).pow(e->k);
        case Expr::Node::fall: {
            RationalFunction f = evalExpr(e->a);
            RationalFunction acc = RationalFunction::constant(GaussianRational(1));
            for (int k = 0; k < e->k; ++k)
                acc = acc * f.shifted(GaussianRational(-static_cast<long>(k)));
            return acc;
        }
        case Expr::Node::shift: {
            RationalFunction f = evalExpr(e->a);
            RationalFunction c = evalExpr(e->b);
            if (!c.isConstant()) throw std::domain_error("shift offset must be constant");
            GaussianRational c0 = c.num().coeff(0) / c.den().coeff(0);
            return f.shifted(c0);
        }
        case Expr::Node::delta: return evalExpr(e->a).delta(e->k);
    }
    throw std::logic_error("unhandled expression node");
}

GaussianRational parseConstant(const std::string& text) {
    RationalFunction f = evalExpr(parseExpr(text));
    if (!f.isConstant()) throw std::domain_error("expected a constant expression: " + text);
    return f.num().coeff(0) / f.den().coeff(0);
}

}  // namespace fallcalc
