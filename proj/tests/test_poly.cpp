#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "artin/poly.hpp"
#include "gfq.hpp"

using namespace artin;

namespace {

Poly random_poly(std::mt19937_64& rng, Coeff p, std::size_t nv, unsigned max_deg, unsigned terms) {
    std::vector<Exp> exps;
    std::vector<Coeff> cs;
    for (unsigned t = 0; t < terms; ++t) {
        for (std::size_t v = 0; v < nv; ++v) exps.push_back(static_cast<Exp>(rng() % (max_deg + 1)));
        cs.push_back(static_cast<Coeff>(rng() % p));
    }
    return Poly::from_terms(p, nv, std::move(exps), std::move(cs));
}

// Univariate Euclid over F_p on dense coefficient vectors (low to high).
std::vector<Coeff> dense_gcd(std::vector<Coeff> a, std::vector<Coeff> b, Coeff p) {
    auto trim = [](std::vector<Coeff>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Coeff f = fp::mul(a.back(), fp::inv(b.back(), p), p);
            std::size_t sh = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + sh] = fp::sub(a[i + sh], fp::mul(f, b[i], p), p);
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    Coeff li = fp::inv(a.back(), p);
    for (Coeff& c : a) c = fp::mul(c, li, p);
    return a;
}

std::vector<Coeff> to_dense(const Poly& f) {
    std::vector<Coeff> d(f.is_zero() ? 0 : f.degree_in(0) + 1, 0);
    for (std::size_t t = 0; t < f.size(); ++t) d[f.exponents(t)[0]] = f.coeff(t);
    return d;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    Poly x = Poly::variable(3, 2, 0), y = Poly::variable(3, 2, 1);
    Poly one = Poly::constant(3, 2, 1);
    CHECK((x + y) * (x + y) == x * x + y * y + (x * y).scaled(2));
    // (x + y)^3 = x^3 + y^3 in characteristic 3
    CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));
    CHECK((x - x).is_zero());
    CHECK((one + one + one).is_zero());
    CHECK(((x * y + one) * (x - y)).divide_exact(x - y) == x * y + one);
    CHECK_FALSE((x * x + one).divide_exact(x + y).has_value());
}

TEST_CASE("terms stay in descending graded order") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Poly f = random_poly(rng, 5, 3, 4, 6) * random_poly(rng, 5, 3, 4, 6);
        for (std::size_t t = 1; t < f.size(); ++t)
            CHECK(compare_monomials(f.exponents(t - 1), f.exponents(t)) > 0);
    }
}

TEST_CASE("univariate gcd agrees with dense Euclid") {
    std::mt19937_64 rng(11);
    for (Coeff p : {2u, 3u, 5u, 7u}) {
        for (int i = 0; i < 40; ++i) {
            Poly a = random_poly(rng, p, 1, 8, 5), b = random_poly(rng, p, 1, 8, 5);
            Poly c = random_poly(rng, p, 1, 4, 3);
            a = a * c;
            b = b * c;
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(to_dense(gcd(a, b)) == dense_gcd(to_dense(a), to_dense(b), p));
        }
    }
}

TEST_CASE("multivariate gcd contains planted factor and leaves coprime cofactors") {
    std::mt19937_64 rng(13);
    for (Coeff p : {2u, 3u, 5u}) {
        for (int i = 0; i < 40; ++i) {
            Poly a = random_poly(rng, p, 3, 3, 4), b = random_poly(rng, p, 3, 3, 4);
            Poly c = random_poly(rng, p, 3, 2, 3);
            if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
            Poly g = gcd(a * c, b * c);
            REQUIRE((a * c).divide_exact(g).has_value());
            REQUIRE((b * c).divide_exact(g).has_value());
            CHECK(g.divide_exact(c.monic()).has_value());
            Poly ca = *(a * c).divide_exact(g), cb = *(b * c).divide_exact(g);
            CHECK(gcd(ca, cb).is_one());
        }
    }
}

TEST_CASE("gcd of p-th powers and deflated exponents") {
    Poly x = Poly::variable(2, 2, 0), y = Poly::variable(2, 2, 1);
    Poly one = Poly::constant(2, 2, 1);
    CHECK(gcd(x.pow(4) + y.pow(4), x + y) == x + y);
    CHECK(gcd(x.pow(6) + one, x.pow(4) + one) == x.pow(2) + one);
    CHECK(gcd(x * y, x.pow(3) + x * y).is_one() == false);
    CHECK(gcd(x * y, x.pow(3) + x * y) == x);
}

namespace {

// Schoolbook product through an ordered map keyed by exponent vectors.
Poly naive_product(const Poly& a, const Poly& b) {
    const Coeff p = a.prime();
    std::map<std::vector<Exp>, Coeff> acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::vector<Exp> e(a.nvars());
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = a.exponents(i)[v] + b.exponents(j)[v];
            Coeff& c = acc[e];
            c = fp::add(c, fp::mul(a.coeff(i), b.coeff(j), p), p);
        }
    std::vector<Exp> exps;
    std::vector<Coeff> cs;
    for (const auto& [e, c] : acc) {
        exps.insert(exps.end(), e.begin(), e.end());
        cs.push_back(c);
    }
    return Poly::from_terms(p, a.nvars(), std::move(exps), std::move(cs));
}

Poly shifted_up(const Poly& f, Exp k) {
    std::vector<Exp> m(f.nvars(), k);
    return f.times_monomial(m, 1);
}

}  // namespace

TEST_CASE("products agree with schoolbook multiplication") {
    std::mt19937_64 rng(17);
    for (Coeff p : {2u, 5u}) {
        for (std::size_t nv : {1u, 3u, 7u}) {
            for (int i = 0; i < 20; ++i) {
                Poly a = random_poly(rng, p, nv, 6, 5), b = random_poly(rng, p, nv, 6, 5);
                CHECK(a * b == naive_product(a, b));
                // exponents too large for a packed word take the general path
                Poly A = shifted_up(a, 70000), B = shifted_up(b, 70000);
                CHECK(A * B == naive_product(A, B));
            }
        }
    }
}

TEST_CASE("exact division recovers factors and rejects remainders") {
    std::mt19937_64 rng(19);
    for (Coeff p : {3u, 7u}) {
        for (int i = 0; i < 30; ++i) {
            Poly a = random_poly(rng, p, 3, 5, 6), b = random_poly(rng, p, 3, 3, 3);
            if (b.is_zero() || b.is_constant()) continue;
            CHECK((a * b).divide_exact(b) == a);
            Poly big = shifted_up(a, 70000);
            CHECK((big * b).divide_exact(b) == big);
            Poly off = a * b + Poly::constant(p, 3, 1);
            CHECK_FALSE(off.divide_exact(b).has_value());
        }
    }
}

TEST_CASE("monomial factors split off before the remainder sequence") {
    Poly x = Poly::variable(2, 2, 0), y = Poly::variable(2, 2, 1);
    Poly s = x.pow(6) + y.pow(6);
    Poly b = x.pow(36) * y.pow(3) * s;
    Poly a = x * y.pow(7) * s * (x.pow(40) + y.pow(33) + x * y);
    CHECK(gcd(a, b) == x * y.pow(3) * s);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        Poly c = random_poly(rng, 3, 2, 3, 3);
        Poly u = random_poly(rng, 3, 2, 4, 4), v = random_poly(rng, 3, 2, 4, 4);
        if (c.is_zero() || u.is_zero() || v.is_zero()) continue;
        Poly xx = Poly::variable(3, 2, 0), yy = Poly::variable(3, 2, 1);
        Poly f = xx.pow(i % 5) * yy.pow(3) * c * u, g = xx.pow(2) * yy.pow(i % 4) * c * v;
        Poly h = gcd(f, g);
        REQUIRE(f.divide_exact(h).has_value());
        REQUIRE(g.divide_exact(h).has_value());
        CHECK(h.divide_exact(c.monic()).has_value());
        CHECK(h.divide_exact(xx.pow(std::min(i % 5, 2)) * yy.pow(std::min(3, i % 4))).has_value());
    }
}

TEST_CASE("evaluation fields") {
    for (Coeff p : {2u, 3u, 5u, 251u, 65537u}) {
        const auto& k = detail::EvalField::for_prime(p);
        CAPTURE(p);
        CHECK(k.order() % p == 0);
        CHECK(k.order() <= (p > 65536 ? p : 65536));
        // the prime field embeds as a ring
        for (Coeff a = 0; a < std::min<Coeff>(p, 40); ++a)
            for (Coeff b = 0; b < std::min<Coeff>(p, 40); ++b) {
                CHECK(k.add(k.from_fp(a), k.from_fp(b)) == k.from_fp(fp::add(a, b, p)));
                CHECK(k.mul(k.from_fp(a), k.from_fp(b)) == k.from_fp(fp::mul(a, b, p)));
                CHECK(k.sub(k.from_fp(a), k.from_fp(b)) == k.from_fp(fp::sub(a, b, p)));
            }
        std::mt19937_64 rng(29);
        for (int i = 0; i < 300; ++i) {
            auto x = k.nonzero(1 + rng() % (k.order() - 1)), y = k.nonzero(1 + rng() % (k.order() - 1));
            auto z = k.nonzero(1 + rng() % (k.order() - 1));
            CHECK(k.mul(x, k.inv(x)) == k.one());
            CHECK(k.add(x, k.neg(x)) == k.zero());
            CHECK(k.mul(k.add(x, y), z) == k.add(k.mul(x, z), k.mul(y, z)));
            CHECK(k.add(k.add(x, y), z) == k.add(x, k.add(y, z)));
            CHECK(k.pow(x, k.order() - 1) == k.one());
            // Frobenius is additive
            CHECK(k.pow(k.add(x, y), p) == k.add(k.pow(x, p), k.pow(y, p)));
        }
    }
    // the nonzero elements are enumerated without repeats
    const auto& f2 = detail::EvalField::for_prime(2);
    std::set<detail::EvalField::Elem> seen;
    for (std::uint64_t i = 1; i < f2.order(); ++i) seen.insert(f2.nonzero(i));
    CHECK(seen.size() == f2.order() - 1);
    CHECK_FALSE(seen.count(f2.zero()));
}

TEST_CASE("univariate gcd degree over an evaluation field") {
    std::mt19937_64 rng(31);
    for (Coeff p : {2u, 3u, 7u}) {
        const auto& k = detail::EvalField::for_prime(p);
        for (int i = 0; i < 30; ++i) {
            Poly a = random_poly(rng, p, 1, 8, 5) * random_poly(rng, p, 1, 3, 3);
            Poly b = random_poly(rng, p, 1, 8, 5) * random_poly(rng, p, 1, 3, 3);
            if (a.is_zero() || b.is_zero()) continue;
            auto lift = [&](const Poly& f) {
                std::vector<detail::EvalField::Elem> out;
                for (Coeff c : to_dense(f)) out.push_back(k.from_fp(c));
                return out;
            };
            // gcds over F_p do not grow in an extension
            CHECK(detail::univariate_gcd_degree(k, lift(a), lift(b)) + 1 ==
                  dense_gcd(to_dense(a), to_dense(b), p).size());
        }
    }
}
