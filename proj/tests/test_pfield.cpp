#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/pfield.hpp"

using namespace artin;

namespace {

PElem random_elem(std::mt19937_64& rng, const FieldPtr& k) {
    const Coeff p = k->p();
    const std::size_t nv = k->nvars();
    auto rpoly = [&](unsigned terms) {
        std::vector<Exp> e;
        std::vector<Coeff> c;
        for (unsigned t = 0; t < terms; ++t) {
            for (std::size_t v = 0; v < nv; ++v) e.push_back(static_cast<Exp>(rng() % 3));
            c.push_back(static_cast<Coeff>(rng() % p));
        }
        return Poly::from_terms(p, nv, std::move(e), std::move(c));
    };
    Poly den = rpoly(1 + rng() % 2);
    if (den.is_zero()) den = Poly::constant(p, nv, 1);
    return PElem::from_fraction(k, static_cast<unsigned>(rng() % 2), rpoly(1 + rng() % 3), den);
}

}  // namespace

TEST_CASE("inverse Frobenius square") {
    auto k = Field::make(2, {"x"});
    PElem r = PElem::parse(k, "x^(1/2)");
    CHECK(r.scale() == 1);
    CHECK(r * r == PElem::variable(k, "x"));
    CHECK(pf_arith(ArithOp::Mul, r, r).to_string() == "x");
}

TEST_CASE("additive Frobenius in characteristic 3") {
    auto k = Field::make(3, {"x", "y"});
    PElem s = PElem::parse(k, "x^(1/3) + y^(1/3)");
    CHECK(s * s * s == PElem::parse(k, "x + y"));
}

TEST_CASE("quotient normal form against an exponent-clearing oracle") {
    auto k = Field::make(2, {"x", "y"});
    PElem a = PElem::parse(k, "x^(1/2)*y + x");
    PElem q = pf_arith(ArithOp::Div, a, PElem::variable(k, "x"));
    // Oracle: at scale 1 with X = x^(1/2), Y = y^(1/2), the quotient is
    // (X Y^2 + X^2) / X^2. The denominator is a monomial, so the gcd is
    // X^(least X-exponent in the numerator) = X, leaving (Y^2 + X) / X.
    Poly X = Poly::variable(2, 2, 0), Y = Poly::variable(2, 2, 1);
    CHECK(q.scale() == 1);
    CHECK(q.num() == Y * Y + X);
    CHECK(q.den() == X);
    CHECK(q.to_string() == "(y + x^(1/2))/(x^(1/2))");
    CHECK(q == PElem::parse(k, "(y + x^(1/2))/x^(1/2)"));
}

TEST_CASE("division by zero") {
    auto k = Field::make(5, {"x"});
    PElem x = PElem::variable(k, "x");
    CHECK_THROWS_AS(pf_arith(ArithOp::Div, x, x - x), DivisionByZero);
}

TEST_CASE("frobenius examples") {
    auto k2 = Field::make(2, {"x", "y"});
    CHECK(pf_frobenius(PElem::parse(k2, "x^(1/2)"), 1) == PElem::variable(k2, "x"));
    CHECK(pf_frobenius(PElem::parse(k2, "x + y"), -1) == PElem::parse(k2, "x^(1/2) + y^(1/2)"));
    auto k3 = Field::make(3, {"x"});
    for (int c = 0; c < 3; ++c)
        for (int e = -3; e <= 3; ++e) CHECK(pf_frobenius(PElem::constant(k3, c), e) == PElem::constant(k3, c));
}

TEST_CASE("frobenius round trip and field identities on random elements") {
    std::mt19937_64 rng(3);
    for (Coeff p : {2u, 3u, 5u}) {
        auto k = Field::make(p, {"a", "b"});
        for (int i = 0; i < 40; ++i) {
            PElem x = random_elem(rng, k), y = random_elem(rng, k), z = random_elem(rng, k);
            int e = static_cast<int>(rng() % 5) - 2;
            CHECK(x.frobenius(e).frobenius(-e) == x);
            CHECK(x.frobenius(1) == x.pow(p));
            CHECK((x + y) * z == x * z + y * z);
            CHECK((x - y) + y == x);
            if (!y.is_zero()) CHECK((x / y) * y == x);
            CHECK(((x - y).is_zero()) == (x == y));
        }
    }
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(5);
    for (Coeff p : {2u, 3u, 5u}) {
        auto k = Field::make(p, {"x", "u1", "u2"});
        for (int i = 0; i < 30; ++i) {
            PElem a = random_elem(rng, k).frobenius(-static_cast<int>(rng() % 3));
            CHECK(PElem::parse(k, a.to_string()) == a);
        }
    }
}

TEST_CASE("embedding and substitution") {
    auto k = Field::make(3, {"x"});
    auto big = k->extended({"u"});
    PElem a = PElem::parse(k, "(x^(1/3) + 1)/x");
    PElem e = a.embedded(big);
    CHECK(e.field()->nvars() == 2);
    CHECK(e.to_string() == a.to_string());
    // x -> u^3 sends (x^(1/3)+1)/x to (u+1)/u^3
    std::vector<PElem> vals{PElem::parse(big, "u^3")};
    CHECK(a.substitute(big, vals) == PElem::parse(big, "(u+1)/u^3"));
    CHECK_THROWS_AS(PElem::variable(big, "x") + PElem::variable(k, "x"), FieldMismatch);
}
