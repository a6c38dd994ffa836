#include "artin/witt.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace artin {

IntPoly IntPoly::constant(std::size_t nvars, const mpz_class& c) {
    IntPoly r(nvars);
    r.add_term(std::vector<Exp>(nvars, 0), c);
    return r;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t var) {
    IntPoly r(nvars);
    std::vector<Exp> e(nvars, 0);
    e[var] = 1;
    r.add_term(e, 1);
    return r;
}

void IntPoly::add_term(const std::vector<Exp>& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.nvars_);
    std::vector<Exp> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
    IntPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

IntPoly IntPoly::pow(std::uint64_t e) const {
    IntPoly result = constant(nvars_, 1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

IntPoly IntPoly::divided_exactly(const mpz_class& d) const {
    IntPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("inexact division in Witt polynomial recursion");
        r.terms_.emplace(e, c / d);
    }
    return r;
}

Poly IntPoly::reduced_mod(Coeff p) const {
    std::vector<Exp> exps;
    std::vector<Coeff> cs;
    const mpz_class mp(p);
    for (const auto& [e, c] : terms_) {
        mpz_class r = c % mp;
        if (r < 0) r += mp;
        exps.insert(exps.end(), e.begin(), e.end());
        cs.push_back(static_cast<Coeff>(r.get_ui()));
    }
    return Poly::from_terms(p, nvars_, std::move(exps), std::move(cs));
}

std::string IntPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (any) mono << "*";
            any = true;
            mono << names[v];
            if (e[v] > 1) mono << "^" << e[v];
        }
        if (!any)
            os << mag.get_str();
        else if (mag == 1)
            os << mono.str();
        else
            os << mag.get_str() << "*" << mono.str();
    }
    return os.str();
}

std::vector<std::string> WittPolys::variable_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i));
    return names;
}

namespace {

mpz_class ipow(Coeff p, std::size_t k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

// w_i(Z) with Z_j = vars[j].
IntPoly ghost(Coeff p, std::size_t i, const std::vector<IntPoly>& vars) {
    IntPoly w(vars.front().nvars());
    for (std::size_t j = 0; j <= i; ++j) {
        std::uint64_t e = ipow(p, i - j).get_ui();
        w = w + vars[j].pow(e).scaled(ipow(p, j));
    }
    return w;
}

std::shared_ptr<WittPolys> generate(Coeff p, std::size_t n) {
    auto polys = std::make_shared<WittPolys>();
    polys->p = p;
    polys->n = n;
    const std::size_t nv = 2 * n;
    std::vector<IntPoly> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(IntPoly::variable(nv, i));
        ys.push_back(IntPoly::variable(nv, n + i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        IntPoly wx = ghost(p, i, xs), wy = ghost(p, i, ys);
        IntPoly s = wx + wy, m = wx * wy;
        for (std::size_t j = 0; j < i; ++j) {
            std::uint64_t e = ipow(p, i - j).get_ui();
            s = s - polys->S[j].pow(e).scaled(ipow(p, j));
            m = m - polys->P[j].pow(e).scaled(ipow(p, j));
        }
        polys->S.push_back(s.divided_exactly(ipow(p, i)));
        polys->P.push_back(m.divided_exactly(ipow(p, i)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        polys->S_mod_p.push_back(polys->S[i].reduced_mod(p));
        polys->P_mod_p.push_back(polys->P[i].reduced_mod(p));
    }
    return polys;
}

struct Cache {
    std::mutex mutex;
    std::map<std::pair<Coeff, std::size_t>, std::shared_ptr<const WittPolys>> entries;
};

Cache& cache() {
    static Cache c;
    return c;
}

std::atomic<std::size_t> g_length_bound{5};

}  // namespace

void set_witt_length_bound(std::size_t n) { g_length_bound = n; }
std::size_t witt_length_bound() { return g_length_bound; }

std::shared_ptr<const WittPolys> witt_structure_polys(Coeff p, std::size_t n) {
    if (!is_prime(p)) throw InvalidArgument("Witt vectors need a prime p");
    if (n == 0) throw InvalidArgument("Witt vectors need length at least 1");
    if (n > g_length_bound) throw LengthBound("Witt length " + std::to_string(n) + " exceeds the bound");
    Cache& c = cache();
    std::lock_guard lock(c.mutex);
    auto key = std::make_pair(p, n);
    auto it = c.entries.find(key);
    if (it != c.entries.end()) return it->second;
    auto polys = generate(p, n);
    if (!verify_ghost_identities(*polys)) throw std::logic_error("Witt ghost identities failed");
    return c.entries.emplace(key, std::move(polys)).first->second;
}

bool verify_ghost_identities(const WittPolys& polys) {
    const std::size_t n = polys.n, nv = 2 * n;
    if (polys.S.size() != n || polys.P.size() != n) return false;
    std::vector<IntPoly> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(IntPoly::variable(nv, i));
        ys.push_back(IntPoly::variable(nv, n + i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        IntPoly wx = ghost(polys.p, i, xs), wy = ghost(polys.p, i, ys);
        if (!(ghost(polys.p, i, polys.S) == wx + wy)) return false;
        if (!(ghost(polys.p, i, polys.P) == wx * wy)) return false;
        if (!(polys.S[i].reduced_mod(polys.p) == polys.S_mod_p[i])) return false;
        if (!(polys.P[i].reduced_mod(polys.p) == polys.P_mod_p[i])) return false;
    }
    return true;
}

namespace testing {

void corrupt_witt_cache(Coeff p, std::size_t n) {
    auto good = witt_structure_polys(p, n);
    auto bad = std::make_shared<WittPolys>(*good);
    IntPoly x0 = IntPoly::variable(2 * n, 0);
    bad->S.back() = bad->S.back() + x0;
    bad->S_mod_p.back() = bad->S.back().reduced_mod(p);
    Cache& c = cache();
    std::lock_guard lock(c.mutex);
    c.entries[{p, n}] = std::move(bad);
}

void clear_witt_cache() {
    Cache& c = cache();
    std::lock_guard lock(c.mutex);
    c.entries.clear();
}

}  // namespace testing

WittVec WittVec::from_entries(std::vector<PElem> entries) {
    if (entries.empty()) throw InvalidArgument("Witt vector needs length at least 1");
    WittVec w;
    w.field_ = entries.front().field();
    for (const PElem& e : entries)
        if (!e.field()->same_as(*w.field_)) throw FieldMismatch("Witt entries over different fields");
    w.entries_ = std::move(entries);
    return w;
}

WittVec WittVec::zero(FieldPtr field, std::size_t n) {
    return from_entries(std::vector<PElem>(n, PElem(std::move(field))));
}

WittVec WittVec::one(FieldPtr field, std::size_t n) {
    return teichmuller(PElem::constant(std::move(field), 1), n);
}

WittVec WittVec::teichmuller(const PElem& a, std::size_t n) {
    std::vector<PElem> e(n, PElem(a.field()));
    if (n == 0) throw InvalidArgument("Witt vector needs length at least 1");
    e[0] = a;
    return from_entries(std::move(e));
}

namespace {

WittVec apply(const std::vector<Poly>& polys, const WittVec& a, const WittVec& b) {
    if (a.length() != b.length()) throw InvalidArgument("Witt vectors of different lengths");
    if (!a.field()->same_as(*b.field())) throw FieldMismatch("Witt vectors over different fields");
    std::vector<PElem> values = a.entries();
    values.insert(values.end(), b.entries().begin(), b.entries().end());
    std::vector<PElem> out;
    for (const Poly& f : polys) out.push_back(evaluate_poly(f, values, a.field()));
    return WittVec::from_entries(std::move(out));
}

}  // namespace

WittVec operator+(const WittVec& a, const WittVec& b) {
    return apply(witt_structure_polys(a.p(), a.length())->S_mod_p, a, b);
}

WittVec operator*(const WittVec& a, const WittVec& b) {
    return apply(witt_structure_polys(a.p(), a.length())->P_mod_p, a, b);
}

WittVec WittVec::times(std::uint64_t k) const {
    WittVec result = zero(field_, length()), base = *this;
    while (k) {
        if (k & 1) result = result + base;
        k >>= 1;
        if (k) base = base + base;
    }
    return result;
}

WittVec WittVec::operator-() const {
    // p^n x = 0 in W_n, so -x = (p^n - 1) x.
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < length(); ++i) pn *= p();
    return times(pn - 1);
}

std::string WittVec::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ", ";
        out += entries_[i].to_string();
    }
    return out + ")";
}

WittVec witt_arith(WittOp op, const WittVec& a, const WittVec& b) {
    return op == WittOp::Add ? a + b : a * b;
}

WittVec verschiebung(const WittVec& x, std::size_t target_length) {
    std::vector<PElem> e(target_length, PElem(x.field()));
    for (std::size_t i = 0; i + 1 < target_length && i < x.length(); ++i) e[i + 1] = x[i];
    return WittVec::from_entries(std::move(e));
}

WittVec frobenius_lift(const WittVec& x) {
    std::vector<PElem> e;
    for (const PElem& a : x.entries()) e.push_back(a.frobenius(1));
    return WittVec::from_entries(std::move(e));
}

}  // namespace artin
