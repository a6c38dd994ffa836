#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/spoly.hpp"

using namespace artin;

namespace {

const std::string Y = "y";

LSeries ser(const FieldPtr& k, std::string_view text) { return LSeries::parse(k, Y, text); }
SPoly poly(const FieldPtr& k, std::string_view text, std::int64_t prec = 16) {
    return SPoly::parse(k, Y, "T", text, prec);
}

// Cofactor expansion along the first row.
LSeries laplace(const SMatrix& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    LSeries acc = LSeries::zero(a[0][0].field(), Y);
    for (std::size_t j = 0; j < n; ++j) {
        SMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LSeries> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(row);
        }
        LSeries term = a[0][j] * laplace(minor);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(31);
    for (Coeff p : {2u, 3u, 5u}) {
        auto k = Field::make(p, {"x"});
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int rep = 0; rep < 5; ++rep) {
                SMatrix a(n, std::vector<LSeries>(n));
                for (auto& row : a)
                    for (auto& e : row) {
                        std::vector<PElem> cs;
                        for (int j = 0; j < 3; ++j)
                            cs.push_back(PElem::constant(k, static_cast<std::int64_t>(rng() % p)) *
                                         PElem::variable(k, 0).pow(rng() % 2));
                        e = LSeries::from_coefficients(k, Y, static_cast<std::int64_t>(rng() % 3) - 1, cs,
                                                       LSeries::kExact);
                    }
                CHECK(determinant(a) == laplace(a));
            }
        }
    }
}

TEST_CASE("norms and discriminants") {
    auto k = Field::make(3, {"x"});
    SPoly m = poly(k, "T^2 - y");
    CHECK(norm_mod(poly(k, "T"), m) == ser(k, "-y"));
    LSeries res = norm_mod(poly(k, "-2*T"), m);
    CHECK(res.valuation() == 1);
    CHECK(discriminant(m) == ser(k, "4*y"));
    CHECK(discriminant(poly(k, "T^3 + x*T + y")) == ser(k, "-4*x^3 - 27*y^2"));
    auto k2 = Field::make(2, {"x"});
    CHECK(discriminant(poly(k2, "T^2 + T + x")) == ser(k2, "1"));
    // N(a + bT) mod T^2 - d is a^2 - d b^2
    auto k5 = Field::make(5, {"x"});
    CHECK(norm_mod(poly(k5, "x + y*T"), poly(k5, "T^2 - x*y")) == ser(k5, "x^2 - x*y^3"));
}

TEST_CASE("reduction and composition") {
    auto k = Field::make(3, {"x"});
    SPoly m = poly(k, "T^3 - y");
    CHECK(poly(k, "T^4").mod(m).to_string("T") == poly(k, "y*T").to_string("T"));
    // T -> 2T = -T is not an automorphism of T^3 - y, but is one of T^2 - y.
    CHECK_FALSE(m.compose_mod(poly(k, "2*T"), m).is_zero_to_precision());
    SPoly q = poly(k, "T^2 - y");
    CHECK(q.compose_mod(poly(k, "2*T"), q).is_zero_to_precision());
    CHECK(m.evaluate(ser(k, "y")) == ser(k, "y^3 - y"));
}

TEST_CASE("linear solve") {
    auto k = Field::make(5, {"x"});
    SMatrix a{{ser(k, "y"), ser(k, "1")}, {ser(k, "1"), ser(k, "x")}};
    std::vector<LSeries> b{ser(k, "1 + y"), ser(k, "x*y")};
    auto sol = solve_linear(a, b, 12);
    for (std::size_t i = 0; i < 2; ++i) {
        LSeries lhs = a[i][0] * sol[0] + a[i][1] * sol[1];
        CHECK(equal_to_precision(lhs, b[i]));
    }
    SMatrix singular{{ser(k, "0 ;; prec=3"), ser(k, "1")}, {ser(k, "0 ;; prec=3"), ser(k, "x")}};
    CHECK_THROWS_AS(solve_linear(singular, b, 12), PrecisionExhausted);
}
