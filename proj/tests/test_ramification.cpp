#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/conductor.hpp"
#include "artin/errors.hpp"

using namespace artin;

namespace {

constexpr std::int64_t kPrec = 24;

Ground perfect_ground(Coeff p) { return {Field::make(p, {}), "y", true}; }

SPoly spoly(const Ground& g, const std::string& text) { return SPoly::parse(g.field, g.uniformizer, "T", text, kPrec); }

// Inverse of z modulo the monic m, from the multiplication matrix.
SPoly inverse_mod(const SPoly& z, const SPoly& m) {
    const int n = m.degree();
    const Ground g{m.field(), m.uniformizer(), true};
    SMatrix a(n, std::vector<LSeries>(n));
    SPoly col = z.mod(m);
    const SPoly t = SPoly::variable(g.field, g.uniformizer);
    for (int k = 0; k < n; ++k) {
        for (int r = 0; r < n; ++r) a[r][k] = col.coeff(r);
        col = (col * t).mod(m);
    }
    std::vector<LSeries> b(n, LSeries::zero(g.field, g.uniformizer));
    b[0] = LSeries::constant(PElem::constant(g.field, 1), g.uniformizer);
    std::vector<LSeries> x = solve_linear(a, b, kPrec);
    return SPoly::from_coefficients(g.field, g.uniformizer, x);
}

// Eisenstein model of t^p - t = y^{-m} (p not dividing m) in a uniformizer
// s = y^b t^a with p b - m a = 1, for the four small cases below.
ExtSpec as_eisenstein_model(Coeff p, std::int64_t m) {
    Ground g = perfect_ground(p);
    auto group = FiniteGroup::cyclic(p);
    SPoly poly;
    std::vector<SPoly> action;
    const SPoly t = SPoly::variable(g.field, g.uniformizer);
    if (m == 1) {
        // s = 1/t: y - y s^{p-1} = s^p; sigma^k(s) = s / (1 + k s).
        poly = spoly(g, "T^" + std::to_string(p) + " + y*T^" + std::to_string(p - 1) + " - y");
        for (Coeff k = 0; k < p; ++k) {
            SPoly den = spoly(g, "1 + " + std::to_string(k) + "*T");
            action.push_back((t * inverse_mod(den, poly)).mod(poly));
        }
    } else if (p == 2 && m == 3) {
        // s = y^2 t.
        poly = spoly(g, "T^2 - y^2*T - y");
        action = {t, spoly(g, "T + y^2")};
    } else if (p == 3 && m == 2) {
        // s = y t.
        poly = spoly(g, "T^3 - y^2*T - y");
        action = {t, spoly(g, "T + y"), spoly(g, "T + 2*y")};
    } else {
        throw std::logic_error("no model");
    }
    return ExtSpec::eisenstein(g, poly, group, action);
}

}  // namespace

TEST_CASE("tame quadratic Eisenstein model") {
    Ground g = perfect_ground(3);
    auto ext = ExtSpec::eisenstein(g, spoly(g, "T^2 - y"), FiniteGroup::cyclic(2),
                                   {SPoly::variable(g.field, "y"), spoly(g, "-T")});
    CHECK(i_lower(ext, 1) == 1);
    CHECK_THROWS_AS(i_lower(ext, 0), InvalidArgument);
    Filtration f = ram_filtration(ext);
    REQUIRE(f.lower.size() == 2);
    CHECK(f.lower[0].size() == 2);
    CHECK(f.lower[1].size() == 1);
    CHECK(f.different() == 1);
    CHECK(different_by_norm(ext) == 1);
}

TEST_CASE("bad Eisenstein data is rejected") {
    Ground g = perfect_ground(3);
    auto c2 = FiniteGroup::cyclic(2);
    const SPoly t = SPoly::variable(g.field, "y");
    CHECK_THROWS_AS(ExtSpec::eisenstein(g, spoly(g, "T^2 - y^2"), c2, {t, spoly(g, "-T")}), InvalidArgument);
    CHECK_THROWS_AS(ExtSpec::eisenstein(g, spoly(g, "T^2 - y"), c2, {t, spoly(g, "T + 1")}), InvalidArgument);
    CHECK_THROWS_AS(ExtSpec::eisenstein(g, spoly(g, "T^2 - y"), c2, {t}), InvalidArgument);
}

TEST_CASE("Artin-Schreier filtration agrees with Eisenstein models") {
    const std::vector<std::pair<Coeff, std::int64_t>> cases{{2, 1}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [p, m] : cases) {
        CAPTURE(p);
        CAPTURE(m);
        ExtSpec model = as_eisenstein_model(p, m);
        for (Elem s = 1; s < p; ++s) CHECK(i_lower(model, s) == m + 1);
        Ground g = perfect_ground(p);
        ExtSpec as = ExtSpec::artin_schreier(g, LSeries::monomial(PElem::constant(g.field, 1), -m, "y"));
        Filtration a = ram_filtration(as), b = ram_filtration(model);
        CHECK(a == b);
        CHECK(a.different() == (m + 1) * static_cast<std::int64_t>(p - 1));
        CHECK(different_by_norm(model) == a.different());
        CHECK(a.discriminant() == a.different());
    }
}

TEST_CASE("built-in kinds") {
    Ground g = perfect_ground(3);
    auto one = PElem::constant(g.field, 1);
    Filtration k4 = ram_filtration(ExtSpec::kummer(g, 4, LSeries::monomial(one, 1, "y"), 2));
    REQUIRE(k4.lower.size() == 2);
    CHECK(k4.lower[0].size() == 4);
    CHECK(k4.different() == 3);
    Filtration k4b = ram_filtration(ExtSpec::kummer(g, 4, LSeries::monomial(one, 2, "y"), 2));
    CHECK(k4b.lower[0] == Subgroup{0, 2});
    CHECK(k4b.e == 2);
    CHECK(k4b.f == 2);
    Filtration u = ram_filtration(ExtSpec::unramified(g, 2));
    CHECK(u.lower == std::vector<Subgroup>{{0}});
    CHECK(u.f == 2);
    CHECK(u.different() == 0);
    CHECK_THROWS_AS(ExtSpec::kummer(g, 4, LSeries::monomial(one, 1, "y"), 1), InvalidArgument);
    CHECK_THROWS_AS(ExtSpec::kummer(g, 3, LSeries::monomial(one, 1, "y")), InvalidArgument);
    Filtration as = ram_filtration(ExtSpec::artin_schreier(g, LSeries::monomial(one, -1, "y")));
    CHECK(as.lower.size() == 3);
    CHECK(as.different() == 4);
    Ground imperfect{Field::make(3, {"x"}), "y", false};
    auto x = PElem::variable(imperfect.field, "x");
    CHECK_THROWS_AS(ram_filtration(ExtSpec::artin_schreier(imperfect, LSeries::monomial(x, -3, "y"))),
                    NotPerfectResidue);
}

TEST_CASE("Herbrand functions") {
    Ground g = perfect_ground(3);
    auto one = PElem::constant(g.field, 1);
    Filtration trivial = ram_filtration(ExtSpec::unramified(g, 1));
    CHECK(herbrand_phi(trivial, Rational(7, 3)) == Rational(7, 3));
    for (std::int64_t m : {1, 2, 4}) {
        Filtration f = ram_filtration(ExtSpec::artin_schreier(g, LSeries::monomial(one, -m, "y")));
        CHECK(herbrand_phi(f, Rational(m)) == Rational(m));
        CHECK(herbrand_phi(f, Rational(m - 1, 2)) == Rational(m - 1, 2));
        // Integral of 1/3 beyond the break.
        CHECK(herbrand_phi(f, Rational(m) + Rational(5, 2)) == Rational(m) + Rational(5, 6));
    }
    Filtration tame = ram_filtration(ExtSpec::kummer(g, 4, LSeries::monomial(one, 1, "y"), 2));
    CHECK(herbrand_phi(tame, Rational(3)) == Rational(3, 4));
    std::mt19937_64 rng(5);
    Filtration wild = ram_filtration(ExtSpec::artin_schreier(g, LSeries::monomial(one, -5, "y")));
    for (const Filtration* f : {&trivial, &tame, &wild}) {
        Rational last = -1;
        for (int i = 0; i < 200; ++i) {
            Rational u(static_cast<std::int64_t>(rng() % 200), static_cast<std::int64_t>(rng() % 12 + 1));
            CHECK(herbrand(*f, HerbrandDir::Psi, herbrand(*f, HerbrandDir::Phi, u)) == u);
            CHECK(herbrand_phi(*f, herbrand_psi(*f, u)) == u);
        }
        for (int i = 0; i <= 60; ++i) {
            Rational v = herbrand_phi(*f, Rational(i, 6));
            CHECK(v > last);
            last = v;
        }
    }
    CHECK_THROWS_AS(herbrand_phi(trivial, Rational(-1)), InvalidArgument);
}

TEST_CASE("upper breaks") {
    for (Coeff p : {2u, 3u}) {
        Ground g = perfect_ground(p);
        auto one = PElem::constant(g.field, 1);
        for (std::int64_t m : {1, 2, 5}) {
            if (m % p == 0) continue;
            Filtration f = ram_filtration(ExtSpec::artin_schreier(g, LSeries::monomial(one, -m, "y")));
            CHECK(upper_breaks(f, CharRep::trivial(f.group)) == std::vector<UpperBreak>{{Rational(0), 1}});
            CHECK(upper_breaks(f, CharRep::linear(f.group, {1})) == std::vector<UpperBreak>{{Rational(m), 1}});
            CHECK(upper_breaks(f, CharRep::regular(f.group)) ==
                  std::vector<UpperBreak>{{Rational(0), 1}, {Rational(m), static_cast<std::int64_t>(p) - 1}});
        }
    }
}

TEST_CASE("restriction to subgroups") {
    Ground g = perfect_ground(5);
    auto one = PElem::constant(g.field, 1);
    Filtration f = ram_filtration(ExtSpec::kummer(g, 4, LSeries::monomial(one, 1, "y")));
    auto whole = subgroup_as_group(f.group, f.group->whole());
    Filtration same = restrict_filtration(f, whole);
    CHECK(same.lower == f.lower);
    CHECK(same.e == 4);
    Filtration one_h = restrict_filtration(f, subgroup_as_group(f.group, f.group->trivial_subgroup()));
    CHECK(one_h.lower == std::vector<Subgroup>{{0}});
    auto h = subgroup_as_group(f.group, f.group->generated({2}));
    Filtration r = restrict_filtration(f, h);
    CHECK(r.lower == std::vector<Subgroup>{{0, 1}, {0}});
    CHECK(r.e == 2);
    CHECK(r.different() == 1);
}
