#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fallcalc/ratfun.hpp"

namespace fallcalc {

// Position-tagged parse failure with the token set the parser would accept.
struct SyntaxError : std::runtime_error {
    size_t offset;
    std::vector<std::string> expected;

    SyntaxError(size_t off, std::vector<std::string> exp, const std::string& what)
        : std::runtime_error(what), offset(off), expected(std::move(exp)) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Grammar, loosest to tightest: + -  |  * /  |  unary -  |  ^  with literal
// nonnegative integer exponents; calls fall(f, n), shift(f, c), delta(f[, n]);
// atoms are rationals (12, 7/3, 2.5, with optional i suffix), i, and z.
struct Expr {
    enum class Node { number, variable, neg, add, sub, mul, div, pow, fall, shift, delta };

    Node node;
    GaussianRational value;  // number
    ExprPtr a, b;            // operands; b is the shift amount for `shift`
    int k = 0;               // pow exponent, fall extent, delta order

    static ExprPtr number(GaussianRational v);
    static ExprPtr variable();
    static ExprPtr unary(Node n, ExprPtr inner);
    static ExprPtr binary(Node n, ExprPtr lhs, ExprPtr rhs);
    static ExprPtr withCount(Node n, ExprPtr inner, int count);
};

ExprPtr parseExpr(const std::string& text);

// Canonical text; parsing it back yields a structurally equal tree.
std::string printExpr(const ExprPtr& e);

bool structurallyEqual(const ExprPtr& x, const ExprPtr& y);

RationalFunction evalExpr(const ExprPtr& e);

// Parses and evaluates, requiring a constant; used for points and values.
GaussianRational parseConstant(const std::string& text);

}  // namespace fallcalc
