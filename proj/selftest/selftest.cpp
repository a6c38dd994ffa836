#include "artin/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "artin/conductor.hpp"
#include "artin/errors.hpp"
#include "artin/specfile.hpp"
#include "artin/witt.hpp"

namespace artin {

namespace {

// Collects failed checks; the first few descriptions end up in the report.
class Checker {
public:
    void operator()(bool ok, const std::string& what) {
        ++count_;
        if (ok) return;
        if (failures_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        if (ok()) return std::to_string(count_) + " checks";
        return std::to_string(failures_) + "/" + std::to_string(count_) + " failed: " + detail_;
    }

private:
    int count_ = 0;
    int failures_ = 0;
    std::string detail_;
};

// ---- random generators -------------------------------------------------

Poly random_poly(std::mt19937_64& rng, Coeff p, std::size_t nv, unsigned terms) {
    std::vector<Exp> e;
    std::vector<Coeff> c;
    for (unsigned t = 0; t < terms; ++t) {
        unsigned budget = 4;
        for (std::size_t v = 0; v < nv; ++v) {
            Exp k = static_cast<Exp>(rng() % (budget + 1));
            budget -= k;
            e.push_back(k);
        }
        c.push_back(static_cast<Coeff>(rng() % p));
    }
    return Poly::from_terms(p, nv, std::move(e), std::move(c));
}

// Fraction of polynomials of degree <= 4, at scale 0, 1 or 2.
PElem random_pelem(std::mt19937_64& rng, const FieldPtr& k, unsigned max_scale = 2) {
    const std::size_t nv = k->nvars();
    Poly den = random_poly(rng, k->p(), nv, 1 + static_cast<unsigned>(rng() % 2));
    if (den.is_zero()) den = Poly::constant(k->p(), nv, 1);
    return PElem::from_fraction(k, static_cast<unsigned>(rng() % (max_scale + 1)),
                                random_poly(rng, k->p(), nv, 1 + static_cast<unsigned>(rng() % 3)), den);
}

PElem random_nonzero(std::mt19937_64& rng, const FieldPtr& k, unsigned max_scale) {
    PElem a = random_pelem(rng, k, max_scale);
    while (a.is_zero()) a = random_pelem(rng, k, max_scale);
    return a;
}

// Element of K = F_p(T)((y)) with rational coefficients, known to prec.
LSeries random_series(std::mt19937_64& rng, const BaseRing& b, std::int64_t start, int terms, std::int64_t prec) {
    std::vector<PElem> cs;
    for (int i = 0; i < terms; ++i) cs.push_back(random_pelem(rng, b.field(), 0));
    cs[0] = random_nonzero(rng, b.field(), 0);
    return LSeries::from_coefficients(b.field(), b.uniformizer(), start, cs, prec);
}

WittVec random_witt(std::mt19937_64& rng, const FieldPtr& k, std::size_t n) {
    std::vector<PElem> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(random_pelem(rng, k, 1));
    return WittVec::from_entries(e);
}

Rational random_rational(std::mt19937_64& rng) {
    return Rational(static_cast<std::int64_t>(rng() % 400), static_cast<std::int64_t>(rng() % 24 + 1));
}

// ---- extension families ------------------------------------------------

struct Case {
    std::string label;
    BaseRing base;
    ExtSpec ext;
};

std::string as_rhs(int a, int b) { return std::string(a ? "x" : "1") + "/y^" + std::to_string(b); }

// t^p - t = x^a / y^b for p in {2, 3}, a in {0, 1}, b in 1..6.
std::vector<Case> as_grid() {
    std::vector<Case> out;
    for (Coeff p : {2u, 3u}) {
        BaseRing base = BaseRing::make(p, {"x"}, "y");
        for (int a : {0, 1})
            for (int b = 1; b <= 6; ++b) {
                std::string rhs = as_rhs(a, b);
                out.push_back({"p=" + std::to_string(p) + " " + rhs, base,
                               ExtSpec::artin_schreier(ground_of(base), base.parse_element(rhs))});
            }
    }
    return out;
}

// Closed forms from reducing the pole part by hand.
std::int64_t as_grid_oracle(Coeff p, int a, int b) {
    if (b % static_cast<int>(p) != 0) return b + 1;
    if (a == 1) return b;
    while (b % static_cast<int>(p) == 0) b /= static_cast<int>(p);
    return b + 1;
}

// Unramified Artin-Schreier data, tame Kummer and unramified kinds.
std::vector<Case> extra_cases() {
    std::vector<Case> out;
    for (Coeff p : {2u, 3u}) {
        BaseRing base = BaseRing::make(p, {"x"}, "y");
        const std::string ps = std::to_string(p);
        for (std::string rhs : {std::string("x"), std::string("x*y"), "1/y^" + ps + " - 1/y",
                                "x^" + ps + "/y^" + ps + " - x/y"})
            out.push_back({"p=" + ps + " AS " + rhs, base,
                           ExtSpec::artin_schreier(ground_of(base), base.parse_element(rhs))});
        out.push_back({"p=" + ps + " unramified 2", base, ExtSpec::unramified(ground_of(base), 2)});
    }
    BaseRing b3 = BaseRing::make(3, {"x"}, "y");
    for (std::string rhs : {"x*y", "x", "x*y^3"})
        out.push_back({"p=3 kummer 2 " + rhs, b3, ExtSpec::kummer(ground_of(b3), 2, b3.parse_element(rhs))});
    BaseRing b5 = BaseRing::make(5, {"x"}, "y");
    for (std::string rhs : {"x*y", "x*y^2", "x", "x*y^3"})
        out.push_back({"p=5 kummer 4 " + rhs, b5, ExtSpec::kummer(ground_of(b5), 4, b5.parse_element(rhs))});
    return out;
}

std::vector<CharRep> reps_for(const GroupPtr& g) {
    std::vector<CharRep> out;
    for (std::uint32_t k = 0; k < g->order(); ++k) out.push_back(CharRep::linear(g, {k}));
    out.push_back(CharRep::regular(g));
    return out;
}

// Inertia subgroup over A itself, without the jet construction. For
// Artin-Schreier data, poles are reduced only with p-th roots that already
// exist in F_p(T); a pole that survives means B/A is not unramified, and
// since |G| = p the inertia group is everything.
Subgroup inertia_over_base(const ExtSpec& ext) {
    const GroupPtr& g = ext.group();
    switch (ext.kind()) {
        case ExtKind::Unramified: return g->trivial_subgroup();
        case ExtKind::Kummer: {
            const std::int64_t n = ext.n();
            const std::int64_t v = ((ext.rhs().valuation() % n) + n) % n;
            // Ramification index: smallest e > 0 with v e = 0 mod n.
            std::int64_t e = 1;
            while ((v * e) % n != 0) ++e;
            Subgroup s;
            for (Elem k = 0; k < n; ++k)
                if ((static_cast<std::int64_t>(k) * e) % n == 0) s.push_back(k);
            return s;
        }
        case ExtKind::ArtinSchreier: {
            const std::int64_t p = ext.ground().field->p();
            LSeries cur = ext.rhs();
            const std::string& y = cur.uniformizer();
            while (cur.has_valuation() && cur.valuation() < 0) {
                const std::int64_t j = -cur.valuation();
                const PElem a = cur.leading_coefficient();
                const PElem root = a.frobenius(-1);
                if (j % p != 0 || root.scale() != 0) return g->whole();
                cur = cur - LSeries::monomial(a, -j, y) + LSeries::monomial(root, -j / p, y);
            }
            return g->trivial_subgroup();
        }
        case ExtKind::Eisenstein: return g->whole();
    }
    return g->whole();
}

Subgroup p_part(const GroupPtr& g, const Subgroup& h, std::int64_t p) {
    Subgroup s;
    for (Elem x : h) {
        std::int64_t o = g->element_order(x);
        while (o % p == 0) o /= p;
        if (o == 1) s.push_back(x);
    }
    return s;
}

// ---- criteria ----------------------------------------------------------

void pfield_axioms(Checker& check) {
    std::mt19937_64 rng(1001);
    const std::vector<std::vector<std::string>> names{{"a"}, {"a", "b"}, {"a", "b", "c"}};
    for (int inst = 0; inst < 1000; ++inst) {
        const Coeff p = std::vector<Coeff>{2, 3, 5}[inst % 3];
        auto k = Field::make(p, names[(inst / 3) % 3]);
        PElem a = random_pelem(rng, k), b = random_pelem(rng, k), c = random_pelem(rng, k);
        const std::string tag = "instance " + std::to_string(inst);
        check((a + b) + c == a + (b + c), tag + " additive associativity");
        check(a + b == b + a, tag + " additive commutativity");
        check((a * b) * c == a * (b * c), tag + " multiplicative associativity");
        check(a * b == b * a, tag + " multiplicative commutativity");
        check(a * (b + c) == a * b + a * c, tag + " distributivity");
        check((a - a).is_zero(), tag + " additive inverse");
        check(a * PElem::constant(k, 1) == a, tag + " unit");
        if (!b.is_zero()) check((a / b) * b == a && b * b.inverse() == PElem::constant(k, 1), tag + " inverse");
        check(pf_frobenius(pf_frobenius(a, 1), -1) == a && pf_frobenius(pf_frobenius(a, -1), 1) == a,
              tag + " Frobenius round trip");
        check(pf_frobenius(a, 1) == a.pow(p), tag + " Frobenius is the p-th power");
        // Injectivity on the sample: distinct inputs have distinct images.
        check((a == b) == (pf_frobenius(a, 1) == pf_frobenius(b, 1)), tag + " Frobenius injective");
        check(((a - b).is_zero()) == (a.to_string() == b.to_string()), tag + " canonical normal form");
    }
}

void witt_soundness(Checker& check) {
    for (Coeff p : {2u, 3u})
        for (std::size_t n = 1; n <= 4; ++n)
            check(verify_ghost_identities(*witt_structure_polys(p, n)),
                  "ghost identities p=" + std::to_string(p) + " n=" + std::to_string(n));
    std::mt19937_64 rng(2002);
    for (int i = 0; i < 200; ++i) {
        const Coeff p = i % 2 ? 3 : 2;
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        auto k = Field::make(p, {"a", "b"});
        WittVec x = random_witt(rng, k, n), y = random_witt(rng, k, n), z = random_witt(rng, k, n);
        const std::string tag = "sample " + std::to_string(i);
        check((x + y) + z == x + (y + z) && x + y == y + x, tag + " addition");
        check((x * y) * z == x * (y * z) && x * y == y * x, tag + " multiplication");
        check((x + y) * z == x * z + y * z, tag + " distributivity");
        check(x + WittVec::zero(k, n) == x && x * WittVec::one(k, n) == x, tag + " identities");
        check(x + (-x) == WittVec::zero(k, n), tag + " negation");
        PElem a = random_pelem(rng, k, 1), b = random_pelem(rng, k, 1);
        check(WittVec::teichmuller(a, n) * WittVec::teichmuller(b, n) == WittVec::teichmuller(a * b, n),
              tag + " Teichmuller multiplicativity");
    }
    for (Coeff p : {2u, 3u}) {
        auto k = Field::make(p, {"xbar", "u1", "u2"});
        for (int i = 0; i < 5; ++i) {
            PElem x = random_pelem(rng, k, 1), u1 = random_pelem(rng, k, 1), u2 = random_pelem(rng, k, 1);
            WittVec lhs = WittVec::teichmuller(x, 3) + WittVec::teichmuller(u1, 3).times(p) +
                          WittVec::teichmuller(u2, 3).times(p * p);
            check(lhs == WittVec::from_entries({x, u1.frobenius(1), u2.frobenius(2)}),
                  "presentation identity p=" + std::to_string(p));
        }
    }
}

void coefficient_compatibility(Checker& check) {
    std::mt19937_64 rng(3003);
    for (int i = 0; i < 200; ++i) {
        const Coeff p = i % 2 ? 3 : 2;
        BaseRing base = BaseRing::make(p, i % 4 < 2 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "z"},
                                       "y");
        const std::int64_t level = 3;
        JetMap jet = universal_jet(base, level);
        const std::int64_t start = static_cast<std::int64_t>(rng() % 4) - 2;
        LSeries f = random_series(rng, base, start, 3, start + 4);
        LSeries g = random_series(rng, base, 0, 2, 4);
        LSeries image = apply_jet(jet, f);
        const std::string tag = "element " + std::to_string(i);

        // Specializing every u to 0 and tbar to t is the section of the
        // residue map; it must return the coefficients of f.
        std::vector<PElem> values;
        const auto& bnames = base.pbasis();
        for (const std::string& name : jet.target()->names()) {
            auto it = std::find_if(bnames.begin(), bnames.end(), [&](const std::string& t) { return t + "bar" == name; });
            values.push_back(it == bnames.end() ? PElem(base.field()) : PElem::variable(base.field(), *it));
        }
        Coefficients fc = coefficients(f), ic = coefficients(image);
        bool same = fc.start == ic.start || ic.values.empty();
        for (std::size_t j = 0; same && j < ic.values.size(); ++j) {
            const std::int64_t idx = ic.start + static_cast<std::int64_t>(j);
            same = ic.values[j].substitute(base.field(), values) == f.coefficient(idx);
        }
        check(same && image.prec() == f.prec(), tag + " specialization to the section");

        // Frobenius of the coefficient field against the p-th power in K.
        LSeries image_p = apply_jet(jet, f.pow(p));
        const std::int64_t window = std::min(image_p.prec(), static_cast<std::int64_t>(p) * image.prec());
        bool frob = true;
        for (std::int64_t j = static_cast<std::int64_t>(p) * image.valuation(); frob && j < window; ++j) {
            const PElem expect = j % static_cast<std::int64_t>(p) == 0
                                     ? image.coefficient(j / static_cast<std::int64_t>(p)).frobenius(1)
                                     : PElem(jet.target());
            frob = image_p.coefficient(j) == expect;
        }
        check(frob, tag + " Frobenius compatibility");
        check(equal_to_precision(apply_jet(jet, f * g), image * apply_jet(jet, g)), tag + " multiplicativity");
    }
}

void conductor_grid(Checker& check) {
    for (const Case& c : as_grid()) {
        const Coeff p = c.base.p();
        const int a = c.label.find(" x/") != std::string::npos ? 1 : 0;
        const int b = std::stoi(c.label.substr(c.label.rfind('^') + 1));
        ConductorReport r = artin_conductor(c.base, c.ext, CharRep::linear(c.ext.group(), {1}));
        check(r.value == as_grid_oracle(p, a, b) && r.value >= 0,
              c.label + ": got " + std::to_string(r.value) + ", expected " + std::to_string(as_grid_oracle(p, a, b)));
        for (const auto& [n, v] : r.naive_by_level)
            if (n >= r.stabilized_at) check(v.denominator() == 1 && v >= 0, c.label + " non-integral naive value");
    }
}

void conductor_properties(Checker& check) {
    std::vector<Case> cases = as_grid();
    for (Case& c : extra_cases()) cases.push_back(std::move(c));
    for (const Case& c : cases) {
        const GroupPtr& g = c.ext.group();
        std::vector<CharRep> reps = reps_for(g);
        std::vector<std::int64_t> ar;
        for (const CharRep& rep : reps) ar.push_back(artin_conductor(c.base, c.ext, rep).value);
        // Additivity.
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i; j < reps.size(); ++j)
                check(artin_conductor(c.base, c.ext, reps[i] + reps[j]).value == ar[i] + ar[j],
                      c.label + " additivity");
        const Subgroup g0 = inertia_over_base(c.ext);
        const Subgroup wild = p_part(g, g0, c.base.p());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const std::int64_t dim = reps[i].dim();
            const bool unramified = invariants_dim(reps[i], g0) == dim;
            const bool tame = invariants_dim(reps[i], wild) == dim;
            const std::int64_t codim = dim - invariants_dim(reps[i], g0);
            const std::string tag = c.label + " rep " + std::to_string(i);
            check((ar[i] == 0) == unramified, tag + " unramified criterion");
            check((ar[i] == codim) == tame, tag + " tameness criterion");
            if (ar[i] <= codim) check(tame, tag + " small conductor implies tame");
        }
        // Direct computation over A for the monogenic tame and unramified kinds.
        if (c.ext.kind() == ExtKind::Kummer || c.ext.kind() == ExtKind::Unramified) {
            Filtration over_a = ram_filtration(c.ext);
            StableFiltration over_ag = stable_filtration(c.base, c.ext);
            for (std::size_t i = 0; i < reps.size(); ++i)
                check(naive_artin(over_a, reps[i]) == Rational(ar[i]), c.label + " monogenic agreement");
            // e = 1 for A^g / A, so G_i = G'_i for every i.
            check(over_a.lower == over_ag.filtration.lower && over_a.e == over_ag.filtration.e,
                  c.label + " lower filtrations over A and A^g");
        }
    }
}

void break_formula(Checker& check) {
    std::vector<Case> cases = as_grid();
    for (Case& c : extra_cases()) cases.push_back(std::move(c));
    for (const Case& c : cases) {
        for (const CharRep& rep : reps_for(c.ext.group())) {
            ConductorReport r = artin_conductor(c.base, c.ext, rep);
            BreakFormula bf = break_formula_check(r.filtration, rep);
            check(bf.equal && bf.lhs == Rational(r.value),
                  c.label + ": " + to_string(bf.lhs) + " vs " + to_string(bf.rhs));
        }
    }
}

void induction_formula(Checker& check) {
    for (Coeff p : {3u, 5u}) {
        const std::uint32_t d = p == 3 ? 2 : 1;
        const std::string ps = std::to_string(p);
        // B = A[t]/(t^4 - y) with group Z/4, A' = A[s]/(s^2 - y) = F((s)) the
        // fixed field of H = 2Z/4, and B = A'[t]/(t^2 - s).
        BaseRing a = BaseRing::make(p, {}, "y");
        ExtSpec b_over_a = ExtSpec::kummer(ground_of(a), 4, a.parse_element("y"), d);
        const GroupPtr& g = b_over_a.group();
        SubgroupView h = subgroup_as_group(g, g->generated({2}));
        CharRep chi = CharRep::linear(h.group, {1});
        CharRep induced = induce_character(g, h, chi);
        const std::int64_t lhs = artin_conductor(a, b_over_a, induced).value;

        BaseRing a_prime = BaseRing::make(p, {}, "s");
        ExtSpec b_over_a_prime = ExtSpec::kummer(ground_of(a_prime), 2, a_prime.parse_element("s"));
        const std::int64_t ar_prime = artin_conductor(a_prime, b_over_a_prime, CharRep::linear(b_over_a_prime.group(), {1})).value;
        Filtration a_prime_over_a = ram_filtration(ExtSpec::kummer(ground_of(a), 2, a.parse_element("y")));
        const std::int64_t rhs = a_prime_over_a.f * ar_prime + chi.dim() * a_prime_over_a.discriminant();
        check(lhs == rhs && lhs == 2, "p=" + ps + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
        // Restricting the Z/4 filtration to H gives the filtration of B/A'.
        Filtration restricted = restrict_filtration(ram_filtration(b_over_a), h);
        check(restricted.lower == ram_filtration(b_over_a_prime).lower, "p=" + ps + " restricted filtration");
    }
}

void stabilization(Checker& check) {
    for (const Case& c : as_grid()) {
        for (const CharRep& rep : {CharRep::linear(c.ext.group(), {1}), CharRep::regular(c.ext.group())}) {
            ConductorReport r = artin_conductor(c.base, c.ext, rep);
            for (std::int64_t n : {r.stabilized_at, 2 * r.stabilized_at}) {
                Rational v = naive_artin(ram_filtration(pull_back(c.ext, universal_jet(c.base, n))), rep);
                check(v == Rational(r.value), c.label + " level " + std::to_string(n));
            }
        }
    }
    BaseRing perfect = BaseRing::make(3, {}, "y");
    JetMap id = universal_jet(perfect, 0);
    check(id.images().empty() && id.target()->nvars() == 0, "identity jet over a perfect residue field");
    ExtSpec ext = ExtSpec::artin_schreier(ground_of(perfect), perfect.parse_element("1/y^2"));
    ConductorReport r = artin_conductor(perfect, ext, CharRep::linear(ext.group(), {1}));
    check(r.stabilized_at == 0 && r.naive_by_level.size() == 1 && r.value == 3, "perfect base short-circuits");
}

void etale_shadow(Checker& check) {
    std::mt19937_64 rng(9009);
    int done = 0, tries = 0;
    while (done < 50 && tries < 1000) {
        ++tries;
        const Coeff p = std::vector<Coeff>{2, 3, 5}[tries % 3];
        BaseRing base = BaseRing::make(p, {"x"}, "y");
        LSeries a = random_series(rng, base, 0, 2, LSeries::kExact);
        LSeries b = random_series(rng, base, static_cast<std::int64_t>(rng() % 2), 2, LSeries::kExact);
        SPoly poly = SPoly::from_coefficients(base.field(), "y",
                                              {b, a, LSeries::constant(PElem::constant(base.field(), 1), "y")});
        LSeries disc = discriminant(poly);
        if (!disc.has_valuation() || disc.valuation() != 0) continue;
        ++done;
        JetMap jet = universal_jet(base, 3);
        LSeries pulled = discriminant(apply_jet(jet, poly));
        check(pulled.has_valuation() && pulled.valuation() == 0 && pulled.prec() >= 1,
              "spec " + std::to_string(done) + ": " + pulled.to_string());
        try {
            JetMap e = extend_jet(jet, JetExtension{{}, poly, false});
            check(e.images() == jet.images(), "spec " + std::to_string(done) + " changed the jet");
        } catch (const NotResiduallySeparable&) {
            check(false, "spec " + std::to_string(done) + " rejected");
        }
    }
    check(done == 50, "only " + std::to_string(done) + " etale specs generated");
}

void herbrand_round_trip(Checker& check) {
    std::mt19937_64 rng(10010);
    std::vector<Case> cases = as_grid();
    for (Case& c : extra_cases()) cases.push_back(std::move(c));
    for (const Case& c : cases) {
        Filtration f = stable_filtration(c.base, c.ext).filtration;
        for (int i = 0; i < 100; ++i) {
            Rational u = random_rational(rng);
            check(herbrand_psi(f, herbrand_phi(f, u)) == u, c.label + " at " + to_string(u));
        }
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

void golden(Checker& check, const std::string& dir) {
    namespace fs = std::filesystem;
    if (dir.empty() || !fs::is_directory(dir)) {
        check(false, "golden directory '" + dir + "' not found");
        return;
    }
    std::vector<fs::path> specs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".spec") specs.push_back(entry.path());
    std::sort(specs.begin(), specs.end());
    int compared = 0;
    for (const fs::path& spec : specs) {
        const std::string stem = spec.stem().string();
        for (const auto& [suffix, run] :
             std::vector<std::pair<std::string, std::function<std::string(const std::string&)>>>{
                 {".conductor.json", conductor_output}, {".ram.json", ram_output}}) {
            const fs::path expected = spec.parent_path() / (stem + suffix);
            if (!fs::exists(expected)) continue;
            ++compared;
            const std::string first = run(spec.string()), second = run(spec.string());
            check(first == read_file(expected), stem + suffix + " differs from the committed output");
            check(first == second, stem + suffix + " is not deterministic");
        }
    }
    check(compared > 0, "no golden outputs found");
}

struct Criterion {
    int id;
    std::string suite;
    std::string name;
    double limit;
    std::function<void(Checker&, const SelftestOptions&)> run;
};

std::vector<Criterion> criteria() {
    return {
        {1, "pfield", "field axioms and Frobenius bijectivity", 10, [](Checker& c, auto&) { pfield_axioms(c); }},
        {2, "witt", "ghost identities, ring axioms, presentation identity", 30,
         [](Checker& c, auto&) { witt_soundness(c); }},
        {3, "perfection", "coefficients commute with the jet map", 10,
         [](Checker& c, auto&) { coefficient_compatibility(c); }},
        {4, "conductor", "Artin-Schreier conductor grid", 30, [](Checker& c, auto&) { conductor_grid(c); }},
        {5, "conductor", "additivity, unramified, monogenic and tame criteria", 30,
         [](Checker& c, auto&) { conductor_properties(c); }},
        {6, "conductor", "break formula", 30, [](Checker& c, auto&) { break_formula(c); }},
        {7, "conductor", "induction formula", 30, [](Checker& c, auto&) { induction_formula(c); }},
        {8, "conductor", "stabilization", 30, [](Checker& c, auto&) { stabilization(c); }},
        {9, "perfection", "etale quadratics stay etale", 30, [](Checker& c, auto&) { etale_shadow(c); }},
        {10, "ramification", "Herbrand round trip", 30, [](Checker& c, auto&) { herbrand_round_trip(c); }},
        {11, "cli", "golden outputs and determinism", 30,
         [](Checker& c, const SelftestOptions& o) { golden(c, o.golden_dir); }},
    };
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& options) {
    if (options.corrupt_witt_cache) testing::corrupt_witt_cache(2, 4);
    std::vector<CriterionResult> out;
    for (const Criterion& c : criteria()) {
        if (!options.filter.empty() && c.suite.find(options.filter) == std::string::npos &&
            c.name.find(options.filter) == std::string::npos && options.filter != std::to_string(c.id))
            continue;
        CriterionResult r{c.id, c.suite, c.name, false, 0, c.limit, ""};
        Checker check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(check, options);
            r.detail = check.summary();
            r.pass = check.ok();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > r.limit_seconds) {
            r.pass = false;
            r.detail += "; over the time limit";
        }
        out.push_back(std::move(r));
    }
    if (options.corrupt_witt_cache) testing::clear_witt_cache();
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.suite << ": " << r.name << " (" << r.seconds
       << " s / limit " << r.limit_seconds << " s) " << r.detail;
    return os.str();
}

std::string conductor_output(const std::string& spec_path) {
    SpecFile spec = load_spec(spec_path);
    if (!spec.representation) throw InvalidArgument("spec file has no [representation] section");
    return report_json(artin_conductor(spec.base, spec.extension, *spec.representation, spec.policy));
}

std::string ram_output(const std::string& spec_path) {
    SpecFile spec = load_spec(spec_path);
    return ram_json(stable_filtration(spec.base, spec.extension, spec.policy), spec.extension);
}

}  // namespace artin
