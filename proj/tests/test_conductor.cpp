#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/conductor.hpp"
#include "artin/errors.hpp"
#include "json.hpp"

using namespace artin;

namespace {

LSeries elem(const BaseRing& b, const std::string& text) { return b.parse_element(text); }

}  // namespace

TEST_CASE("invariant dimensions") {
    auto g = FiniteGroup::cyclic(3);
    CHECK(invariants_dim(CharRep::trivial(g), g->whole()) == 1);
    CHECK(invariants_dim(CharRep::regular(g), g->whole()) == 1);
    CHECK(invariants_dim(CharRep::linear(g, {1}), g->whole()) == 0);
}

TEST_CASE("naive conductor of Artin-Schreier characters") {
    for (Coeff p : {2u, 3u, 5u}) {
        Ground g{Field::make(p, {}), "y", true};
        auto one = PElem::constant(g.field, 1);
        for (std::int64_t m = 1; m <= 7; ++m) {
            if (m % p == 0) continue;
            Filtration f = ram_filtration(ExtSpec::artin_schreier(g, LSeries::monomial(one, -m, "y")));
            const std::int64_t pm1 = static_cast<std::int64_t>(p) - 1;
            CHECK(naive_artin(f, CharRep::trivial(f.group)) == Rational(0));
            CHECK(naive_artin(f, CharRep::linear(f.group, {1})) == Rational(m + 1));
            CHECK(naive_artin(f, CharRep::regular(f.group)) == Rational((m + 1) * pm1));
            for (const CharRep& rep : {CharRep::trivial(f.group), CharRep::linear(f.group, {1}),
                                       CharRep::regular(f.group)}) {
                BreakFormula bf = break_formula_check(f, rep);
                CHECK(bf.equal);
                CHECK(bf.lhs == bf.rhs);
            }
        }
    }
}

TEST_CASE("Artin-Schreier reduction") {
    BaseRing b = BaseRing::parse("F_2(x)[[y]]");
    LSeries f = elem(b, "x/y^2");
    ASReduction r = as_reduce(f);
    CHECK(r.swan == 1);
    CHECK(r.reduced.valuation() == -1);
    CHECK(r.reduced.leading_coefficient() == PElem::variable(b.field(), "x").frobenius(-1));
    // f - reduced = h^2 - h.
    CHECK(equal_to_precision(f - r.reduced, r.correction.pow(2) - r.correction));
    BaseRing b3 = BaseRing::parse("F_3((y))");
    CHECK(as_reduce(elem(b3, "1/y^2")).swan == 2);
    CHECK(as_reduce(elem(b3, "1/y^3 - 1/y")).swan == 0);
    CHECK(as_reduce(elem(b3, "1/y^9 + 1/y^2")).swan == 2);
    CHECK(as_reduce(elem(b3, "1/y^9")).swan == 1);
    CHECK_THROWS_AS(as_reduce(LSeries::zero(b3.field(), "y", -2)), PrecisionExhausted);
    CHECK(as_reduce(LSeries::zero(b3.field(), "y", 1)).swan == 0);
}

TEST_CASE("conductors through the generic residual perfection") {
    for (Coeff p : {2u, 3u}) {
        BaseRing b = BaseRing::make(p, {"x"}, "y");
        const Ground g = ground_of(b);
        for (std::int64_t m = 1; m <= 4; ++m) {
            if (m % p == 0) continue;
            ExtSpec ext = ExtSpec::artin_schreier(g, elem(b, "x/y^" + std::to_string(m)));
            ConductorReport r = artin_conductor(b, ext, CharRep::linear(ext.group(), {1}));
            CHECK(r.value == m + 1);
        }
        ExtSpec fer = ExtSpec::artin_schreier(g, elem(b, "x/y^" + std::to_string(p)));
        CHECK(artin_conductor(b, fer, CharRep::linear(fer.group(), {1})).value == static_cast<std::int64_t>(p));
        ExtSpec un = ExtSpec::unramified(g, 2);
        CHECK(artin_conductor(b, un, CharRep::regular(un.group())).value == 0);
    }
}

TEST_CASE("stabilization and perfect bases") {
    BaseRing b = BaseRing::parse("F_3((y))");
    ExtSpec ext = ExtSpec::artin_schreier(ground_of(b), elem(b, "1/y^2"));
    ConductorReport r = artin_conductor(b, ext, CharRep::linear(ext.group(), {1}));
    CHECK(r.value == 3);
    CHECK(r.stabilized_at == 0);
    CHECK(r.naive_by_level.size() == 1);
    BaseRing bx = BaseRing::parse("F_2(x)[[y]]");
    ExtSpec e2 = ExtSpec::artin_schreier(ground_of(bx), elem(bx, "x/y^3"));
    ConductorReport r2 = artin_conductor(bx, e2, CharRep::linear(e2.group(), {1}));
    CHECK(r2.value == 4);
    for (std::int64_t k : {1, 2, 4}) {
        StabilizationPolicy pol;
        pol.start = r2.stabilized_at * k;
        CHECK(artin_conductor(bx, e2, CharRep::linear(e2.group(), {1}), pol).value == 4);
    }
    StabilizationPolicy tight;
    tight.start = 1;
    tight.max_level = 1;
    CHECK_THROWS_AS(artin_conductor(bx, e2, CharRep::linear(e2.group(), {1}), tight), NoStabilization);
}

TEST_CASE("report JSON shape") {
    BaseRing b = BaseRing::parse("F_2(x)[[y]]");
    ExtSpec ext = ExtSpec::artin_schreier(ground_of(b), elem(b, "x/y^3"));
    ConductorReport r = artin_conductor(b, ext, CharRep::linear(ext.group(), {1}));
    auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["conductor"] == 4);
    CHECK(j["stabilized_at"] == r.stabilized_at);
    CHECK(j["naive_by_level"][std::to_string(r.stabilized_at)] == "4/1");
    CHECK(j["breaks"] == nlohmann::json::parse("[[3,1,1]]"));
    CHECK(j["filtration"] == nlohmann::json::parse("[[0,2],[1,2],[2,2],[3,2],[4,1]]"));
}

TEST_CASE("induced characters") {
    auto g = FiniteGroup::cyclic(4);
    auto h = subgroup_as_group(g, g->generated({2}));
    CharRep ind = induce_character(g, h, CharRep::linear(h.group, {1}));
    CHECK(ind.with_root_order(4) == (CharRep::linear(g, {1}) + CharRep::linear(g, {3})));
    auto whole = subgroup_as_group(g, g->whole());
    CharRep chi = CharRep::linear(whole.group, {1});
    CHECK(induce_character(g, whole, chi) == CharRep::linear(g, {1}));
}
