#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/perfection.hpp"

using namespace artin;

namespace {

LSeries random_element(std::mt19937_64& rng, const BaseRing& base) {
    const FieldPtr& k = base.field();
    auto rpoly = [&] {
        PElem acc(k);
        for (int t = 0; t < 2; ++t) {
            PElem m = PElem::constant(k, static_cast<std::int64_t>(rng() % k->p()));
            for (std::size_t v = 0; v < k->nvars(); ++v) m = m * PElem::variable(k, v).pow(rng() % 3);
            acc = acc + m;
        }
        return acc;
    };
    std::int64_t start = static_cast<std::int64_t>(rng() % 4) - 2;
    std::vector<PElem> cs;
    for (int i = 0; i < 3; ++i) {
        PElem den = rpoly();
        if (den.is_zero()) den = PElem::constant(k, 1);
        cs.push_back(rpoly() / den);
    }
    if (cs[0].is_zero()) cs[0] = PElem::constant(k, 1);
    return LSeries::from_coefficients(k, base.uniformizer(), start, cs, LSeries::kExact);
}

}  // namespace

TEST_CASE("base ring text") {
    BaseRing b = BaseRing::parse("F_2(x)[[y]]");
    CHECK(b.p() == 2);
    CHECK(b.pbasis() == std::vector<std::string>{"x"});
    CHECK(b.uniformizer() == "y");
    CHECK(BaseRing::parse("F_3((y))").residue_perfect());
    CHECK(BaseRing::parse("F_5(x1, x2)[[t]]").pbasis().size() == 2);
    CHECK(b.to_string() == "F_2(x)[[y]]");
    CHECK_THROWS_AS(BaseRing::parse("F_4(x)[[y]]"), ParseError);
    CHECK_THROWS_AS(BaseRing::parse("F_2(y)[[y]]"), ParseError);
    CHECK_THROWS_AS(BaseRing::parse("Q(x)[[y]]"), ParseError);
}

TEST_CASE("universal jet of F_p(x)[[y]]") {
    for (Coeff p : {2u, 3u}) {
        BaseRing b = BaseRing::make(p, {"x"}, "y");
        JetMap j = universal_jet(b, 2);
        CHECK(j.target()->names() == std::vector<std::string>{"xbar", "u1", "u2"});
        CHECK(j.images()[0].to_string() == "xbar + u1*y + u2*y^2 ;; prec=3");
        CHECK(apply_jet(j, b.parse_element("y")) == LSeries::parse(j.target(), "y", "y"));
        CHECK(apply_jet(j, b.parse_element("x/y^2")).to_string() == "xbar*y^-2 + u1*y^-1 + u2 ;; prec=1");
        LSeries inv = apply_jet(j, b.parse_element("1/x"));
        LSeries x = apply_jet(j, b.parse_element("x"));
        CHECK(equal_to_precision(inv * x, LSeries::parse(j.target(), "y", "1")));
        CHECK((inv * x).prec() == 3);
    }
}

TEST_CASE("perfect residue field gives the identity jet") {
    BaseRing b = BaseRing::parse("F_3((y))");
    for (std::int64_t n : {0, 1, 5}) {
        JetMap j = universal_jet(b, n);
        CHECK(j.target()->nvars() == 0);
        LSeries f = b.parse_element("y^-2 + 2*y + y^7");
        CHECK(apply_jet(j, f) == f);
    }
}

TEST_CASE("two basis elements get independent transcendentals") {
    BaseRing b = BaseRing::make(3, {"x1", "x2"}, "y");
    JetMap j = universal_jet(b, 1);
    CHECK(j.target()->names() == std::vector<std::string>{"x1bar", "x2bar", "u_x1_1", "u_x2_1"});
    CHECK(j.images()[0].to_string() == "x1bar + u_x1_1*y ;; prec=2");
    CHECK(j.images()[1].to_string() == "x2bar + u_x2_1*y ;; prec=2");
}

TEST_CASE("apply_jet is a ring homomorphism") {
    std::mt19937_64 rng(53);
    for (Coeff p : {2u, 3u}) {
        BaseRing b = BaseRing::make(p, {"x", "z"}, "y");
        JetMap j = universal_jet(b, 3);
        for (int i = 0; i < 8; ++i) {
            LSeries f = random_element(rng, b), g = random_element(rng, b);
            CHECK(equal_to_precision(apply_jet(j, f * g), apply_jet(j, f) * apply_jet(j, g)));
            CHECK(equal_to_precision(apply_jet(j, f + g), apply_jet(j, f) + apply_jet(j, g)));
            // nonzero elements stay nonzero, with the same valuation
            LSeries image = apply_jet(j, f);
            REQUIRE(image.has_valuation());
            CHECK(image.valuation() == f.valuation());
        }
    }
}

TEST_CASE("jets at different levels are compatible") {
    BaseRing b = BaseRing::make(2, {"x", "z"}, "y");
    JetMap big = universal_jet(b, 5);
    for (std::int64_t n = 0; n <= 5; ++n) {
        JetMap small = universal_jet(b, n);
        REQUIRE(small.target()->is_prefix_of(*big.target()));
        for (std::size_t t = 0; t < 2; ++t)
            CHECK(big.images()[t].truncated(n + 1) == small.images()[t].embedded(big.target()));
    }
}

TEST_CASE("extending by a new basis element") {
    BaseRing b = BaseRing::make(3, {"x"}, "y");
    JetMap j = universal_jet(b, 2);
    JetMap e = extend_jet(j, JetExtension{{"w"}, std::nullopt, false});
    CHECK(j.target()->is_prefix_of(*e.target()));
    CHECK(e.base().pbasis() == std::vector<std::string>{"x", "w"});
    CHECK(e.images()[1].to_string() == "wbar + u_w_1*y + u_w_2*y^2 ;; prec=3");
    LSeries f = b.parse_element("(x + 1)/y");
    CHECK(apply_jet(e, f.embedded(e.base().field())) == apply_jet(j, f).embedded(e.target()));
    JetMap same = extend_jet(j, JetExtension{});
    CHECK(same.target()->same_as(*j.target()));
    CHECK(same.images() == j.images());
    CHECK_THROWS_AS(extend_jet(j, JetExtension{{}, std::nullopt, true}), NotResiduallySeparable);
}

TEST_CASE("etale quadratic stays etale after pullback") {
    BaseRing b = BaseRing::make(2, {"x"}, "y");
    JetMap j = universal_jet(b, 3);
    SPoly poly = SPoly::parse(b.field(), "y", "t", "t^2 + t + x", 8);
    LSeries d = discriminant(apply_jet(j, poly));
    CHECK(d.valuation() == 0);
    JetMap e = extend_jet(j, JetExtension{{}, poly, false});
    CHECK(e.images() == j.images());
    SPoly ramified = SPoly::parse(b.field(), "y", "t", "t^2 + y*t + y", 8);
    CHECK_THROWS_AS(extend_jet(j, JetExtension{{}, ramified, false}), NotResiduallySeparable);
}
