#include "artin/expr.hpp"

#include <cctype>
#include <limits>

namespace artin::expr {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Node run() {
        Node n = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected character");
        return n;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        throw ParseError(what, 1, pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int d = text_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) error("integer too large");
            v = v * 10 + d;
            ++pos_;
        }
        if (pos_ == start) error("expected integer");
        return v;
    }

    static Node binary(Node::Kind k, Node a, Node b, std::size_t at) {
        Node n;
        n.kind = k;
        n.offset = at;
        n.args.push_back(std::move(a));
        n.args.push_back(std::move(b));
        return n;
    }

    Node parse_expr() {
        Node lhs = parse_term();
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('+'))
                lhs = binary(Node::Kind::Add, std::move(lhs), parse_term(), at);
            else if (accept('-'))
                lhs = binary(Node::Kind::Sub, std::move(lhs), parse_term(), at);
            else
                return lhs;
        }
    }

    Node parse_term() {
        Node lhs = parse_unary();
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('*'))
                lhs = binary(Node::Kind::Mul, std::move(lhs), parse_unary(), at);
            else if (accept('/'))
                lhs = binary(Node::Kind::Div, std::move(lhs), parse_unary(), at);
            else
                return lhs;
        }
    }

    Node parse_unary() {
        skip_ws();
        std::size_t at = pos_;
        if (accept('-')) {
            Node n;
            n.kind = Node::Kind::Neg;
            n.offset = at;
            n.args.push_back(parse_unary());
            return n;
        }
        return parse_power();
    }

    Node parse_power() {
        Node base = parse_atom();
        skip_ws();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        Node n;
        n.kind = Node::Kind::Pow;
        n.offset = at;
        if (accept('(')) {
            bool negative = accept('-');
            n.exp_num = parse_int();
            if (negative) n.exp_num = -n.exp_num;
            if (accept('/')) {
                n.exp_den = parse_int();
                if (n.exp_den == 0) error("zero exponent denominator");
            }
            expect(')');
        } else {
            bool negative = accept('-');
            n.exp_num = parse_int();
            if (negative) n.exp_num = -n.exp_num;
        }
        n.args.push_back(std::move(base));
        return n;
    }

    Node parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) error("unexpected end of expression");
        Node n;
        n.offset = pos_;
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Node inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            n.kind = Node::Kind::Number;
            n.number = parse_int();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            n.kind = Node::Kind::Symbol;
            n.symbol = std::string(text_.substr(start, pos_ - start));
            return n;
        }
        error(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Node parse(std::string_view text) { return Parser(text).run(); }

int log_p(std::int64_t d, std::int64_t p) {
    if (d <= 0) return -1;
    int k = 0;
    while (d % p == 0) {
        d /= p;
        ++k;
    }
    return d == 1 ? k : -1;
}

}  // namespace artin::expr
