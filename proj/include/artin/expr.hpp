#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "artin/errors.hpp"

// Expression grammar shared by every textual input (field elements, series,
// polynomials over series):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   exponent := ['-'] int | '(' ['-'] int ['/' int] ')'
//   atom   := int | identifier | '(' expr ')'
namespace artin::expr {

struct Node {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind = Kind::Number;
    std::int64_t number = 0;
    std::string symbol;
    std::int64_t exp_num = 1;
    std::int64_t exp_den = 1;
    std::vector<Node> args;
    std::size_t offset = 0;  // byte offset of the node in the source text
};

// Throws ParseError with line 1 and a 1-based column.
Node parse(std::string_view text);

[[noreturn]] inline void fail_at(const Node& n, const std::string& what) {
    throw ParseError(what, 1, n.offset + 1);
}

// Algebra must provide value_type and
//   number(int64, node), symbol(name, node), add/sub/mul/div(a, b, node),
//   neg(a, node), pow(a, num, den, node).
template <class Algebra>
typename Algebra::value_type evaluate(const Node& n, const Algebra& alg) {
    using K = Node::Kind;
    switch (n.kind) {
    case K::Number:
        return alg.number(n.number, n);
    case K::Symbol:
        return alg.symbol(n.symbol, n);
    case K::Neg:
        return alg.neg(evaluate(n.args[0], alg), n);
    case K::Pow:
        return alg.pow(evaluate(n.args[0], alg), n.exp_num, n.exp_den, n);
    case K::Add:
        return alg.add(evaluate(n.args[0], alg), evaluate(n.args[1], alg), n);
    case K::Sub:
        return alg.sub(evaluate(n.args[0], alg), evaluate(n.args[1], alg), n);
    case K::Mul:
        return alg.mul(evaluate(n.args[0], alg), evaluate(n.args[1], alg), n);
    case K::Div:
        return alg.div(evaluate(n.args[0], alg), evaluate(n.args[1], alg), n);
    }
    fail_at(n, "malformed expression");
}

// Returns k when d == p^k, or -1.
int log_p(std::int64_t d, std::int64_t p);

}  // namespace artin::expr
