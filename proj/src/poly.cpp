#include "artin/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "gfq.hpp"

namespace artin {

namespace {

Exp checked_mul(Exp a, Exp k) {
    std::uint64_t r = std::uint64_t{a} * k;
    if (r > std::numeric_limits<Exp>::max()) throw InvalidArgument("exponent overflow");
    return static_cast<Exp>(r);
}

Exp checked_add(Exp a, Exp b) {
    std::uint64_t r = std::uint64_t{a} + b;
    if (r > std::numeric_limits<Exp>::max()) throw InvalidArgument("exponent overflow");
    return static_cast<Exp>(r);
}

void require_compatible(const Poly& a, const Poly& b) {
    if (a.prime() != b.prime() || a.nvars() != b.nvars())
        throw FieldMismatch("polynomials over different rings");
}

// Monomials packed into one word as [total degree | e_0 | e_1 | ...], so that
// integer order is graded-lex order and multiplication is addition, as long
// as every field stays below 2^bits.
struct Packing {
    std::size_t nvars;
    unsigned bits;

    std::uint64_t pack(std::span<const Exp> e) const {
        std::uint64_t total = 0;
        for (Exp x : e) total += x;
        std::uint64_t key = total;
        for (Exp x : e) key = (key << bits) | x;
        return key;
    }
    void unpack(std::uint64_t key, Exp* out) const {
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        for (std::size_t v = nvars; v-- > 0;) {
            out[v] = static_cast<Exp>(key & mask);
            key >>= bits;
        }
    }
    // Field-wise a >= b, for keys of valid monomials.
    bool divides(std::uint64_t b, std::uint64_t a) const {
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        for (std::size_t v = 0; v < nvars; ++v, a >>= bits, b >>= bits)
            if ((a & mask) < (b & mask)) return false;
        return true;
    }
};

// A packing able to hold monomials of total degree up to `max_total`.
std::optional<Packing> packing_for(std::size_t nvars, std::uint64_t max_total) {
    if (nvars == 0) return std::nullopt;
    const unsigned bits = static_cast<unsigned>(64 / (nvars + 1));
    if (bits < 4 || max_total >= (std::uint64_t{1} << bits)) return std::nullopt;
    return Packing{nvars, bits};
}

}  // namespace

int compare_monomials(std::span<const Exp> a, std::span<const Exp> b) {
    std::uint64_t da = 0, db = 0;
    for (Exp e : a) da += e;
    for (Exp e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void Poly::push(std::span<const Exp> e, Coeff c) {
    exps_.insert(exps_.end(), e.begin(), e.end());
    coeffs_.push_back(c);
}

Poly Poly::constant(Coeff p, std::size_t nvars, std::int64_t c) {
    Poly r(p, nvars);
    Coeff v = fp::reduce(c, p);
    if (v != 0) {
        r.exps_.assign(nvars, 0);
        r.coeffs_.push_back(v);
    }
    return r;
}

Poly Poly::variable(Coeff p, std::size_t nvars, std::size_t var, Exp e) {
    if (var >= nvars) throw InvalidArgument("variable index out of range");
    Poly r(p, nvars);
    r.exps_.assign(nvars, 0);
    r.exps_[var] = e;
    r.coeffs_.push_back(1 % p);
    return r;
}

Poly Poly::monomial(Coeff p, std::span<const Exp> exps, Coeff c) {
    Poly r(p, exps.size());
    if (c % p != 0) r.push(exps, c % p);
    return r;
}

Poly Poly::from_terms(Coeff p, std::size_t nvars, std::vector<Exp> exps,
                      std::vector<Coeff> coeffs) {
    const std::size_t n = coeffs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto at = [&](std::size_t i) { return std::span<const Exp>(exps.data() + i * nvars, nvars); };
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return compare_monomials(at(i), at(j)) > 0;
    });
    Poly r(p, nvars);
    std::size_t i = 0;
    while (i < n) {
        std::uint64_t acc = 0;
        std::size_t j = i;
        while (j < n && compare_monomials(at(order[i]), at(order[j])) == 0) {
            acc += coeffs[order[j]] % p;
            ++j;
        }
        Coeff c = static_cast<Coeff>(acc % p);
        if (c != 0) r.push(at(order[i]), c);
        i = j;
    }
    return r;
}

Poly Poly::from_sorted_terms(Coeff p, std::size_t nvars, std::vector<Exp> exps,
                             std::vector<Coeff> coeffs) {
    Poly r(p, nvars);
    r.exps_ = std::move(exps);
    r.coeffs_ = std::move(coeffs);
    return r;
}

bool Poly::is_constant() const noexcept {
    if (coeffs_.empty()) return true;
    if (coeffs_.size() > 1) return false;
    return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e == 0; });
}

bool Poly::is_one() const noexcept { return is_constant() && !is_zero() && coeffs_[0] == 1; }

Coeff Poly::leading_coeff() const {
    if (is_zero()) throw InvalidArgument("leading coefficient of zero polynomial");
    return coeffs_[0];
}

Coeff Poly::constant_term() const {
    if (is_zero()) return 0;
    // The constant monomial is the smallest in graded order.
    auto last = exponents(size() - 1);
    if (std::all_of(last.begin(), last.end(), [](Exp e) { return e == 0; }))
        return coeffs_.back();
    return 0;
}

Exp Poly::degree_in(std::size_t var) const {
    Exp d = 0;
    for (std::size_t t = 0; t < size(); ++t) d = std::max(d, exps_[t * nvars_ + var]);
    return d;
}

std::uint64_t Poly::total_degree() const {
    return is_zero() ? 0 : [&] {
        std::uint64_t d = 0;
        for (Exp e : exponents(0)) d += e;
        return d;
    }();
}

std::vector<bool> Poly::support() const {
    std::vector<bool> s(nvars_, false);
    for (std::size_t t = 0; t < size(); ++t)
        for (std::size_t v = 0; v < nvars_; ++v)
            if (exps_[t * nvars_ + v] != 0) s[v] = true;
    return s;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Coeff& c : r.coeffs_) c = fp::neg(c, p_);
    return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
    require_compatible(a, b);
    const Coeff p = a.prime();
    std::vector<Exp> exps;
    std::vector<Coeff> coeffs;
    exps.reserve((a.size() + b.size()) * a.nvars());
    coeffs.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto emit = [&](std::span<const Exp> e, Coeff c) {
        if (c == 0) return;
        exps.insert(exps.end(), e.begin(), e.end());
        coeffs.push_back(c);
    };
    while (i < a.size() || j < b.size()) {
        int cmp;
        if (i == a.size())
            cmp = -1;
        else if (j == b.size())
            cmp = 1;
        else
            cmp = compare_monomials(a.exponents(i), b.exponents(j));
        if (cmp > 0) {
            emit(a.exponents(i), a.coeff(i));
            ++i;
        } else if (cmp < 0) {
            Coeff c = subtract ? fp::neg(b.coeff(j), p) : b.coeff(j);
            emit(b.exponents(j), c);
            ++j;
        } else {
            Coeff c = subtract ? fp::sub(a.coeff(i), b.coeff(j), p)
                               : fp::add(a.coeff(i), b.coeff(j), p);
            emit(a.exponents(i), c);
            ++i;
            ++j;
        }
    }
    return Poly::from_sorted_terms(p, a.nvars(), std::move(exps), std::move(coeffs));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
    require_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.prime(), a.nvars());
    if (a.size() == 1) return b.times_monomial(a.exponents(0), a.coeff(0));
    if (b.size() == 1) return a.times_monomial(b.exponents(0), b.coeff(0));
    const std::size_t nv = a.nvars();
    const Coeff p = a.prime();
    if (auto pk = packing_for(nv, a.total_degree() + b.total_degree())) {
        std::vector<std::uint64_t> ka(a.size()), kb(b.size());
        for (std::size_t i = 0; i < a.size(); ++i) ka[i] = pk->pack(a.exponents(i));
        for (std::size_t j = 0; j < b.size(); ++j) kb[j] = pk->pack(b.exponents(j));
        std::vector<std::pair<std::uint64_t, Coeff>> prod;
        prod.reserve(a.size() * b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                prod.emplace_back(ka[i] + kb[j], fp::mul(a.coeff(i), b.coeff(j), p));
        std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
        std::vector<Exp> exps;
        std::vector<Coeff> coeffs;
        std::vector<Exp> e(nv);
        for (std::size_t i = 0; i < prod.size();) {
            Coeff c = 0;
            std::size_t j = i;
            for (; j < prod.size() && prod[j].first == prod[i].first; ++j) c = fp::add(c, prod[j].second, p);
            if (c != 0) {
                pk->unpack(prod[i].first, e.data());
                exps.insert(exps.end(), e.begin(), e.end());
                coeffs.push_back(c);
            }
            i = j;
        }
        return Poly::from_sorted_terms(p, nv, std::move(exps), std::move(coeffs));
    }
    std::vector<Exp> exps(a.size() * b.size() * nv);
    std::vector<Coeff> coeffs(a.size() * b.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto ea = a.exponents(i);
        for (std::size_t j = 0; j < b.size(); ++j, ++k) {
            auto eb = b.exponents(j);
            for (std::size_t v = 0; v < nv; ++v) exps[k * nv + v] = checked_add(ea[v], eb[v]);
            coeffs[k] = fp::mul(a.coeff(i), b.coeff(j), a.prime());
        }
    }
    return Poly::from_terms(a.prime(), nv, std::move(exps), std::move(coeffs));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
}

Poly Poly::scaled(Coeff c) const {
    c %= p_;
    if (c == 0) return Poly(p_, nvars_);
    Poly r = *this;
    for (Coeff& x : r.coeffs_) x = fp::mul(x, c, p_);
    return r;
}

Poly Poly::times_monomial(std::span<const Exp> e, Coeff c) const {
    c %= p_;
    if (c == 0 || is_zero()) return Poly(p_, nvars_);
    Poly r = *this;
    for (std::size_t t = 0; t < size(); ++t) {
        for (std::size_t v = 0; v < nvars_; ++v)
            r.exps_[t * nvars_ + v] = checked_add(r.exps_[t * nvars_ + v], e[v]);
        r.coeffs_[t] = fp::mul(r.coeffs_[t], c, p_);
    }
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = constant(p_, nvars_, 1);
    if (e == 0) return result;
    if (size() == 1) {
        std::vector<Exp> ex(exponents(0).begin(), exponents(0).end());
        for (Exp& x : ex) x = checked_mul(x, static_cast<Exp>(e));
        return monomial(p_, ex, fp::pow(coeffs_[0], e, p_));
    }
    // Frobenius on F_p[X]: f^p = f(X^p).
    Poly base = *this;
    while (e % p_ == 0) {
        base = base.exponents_multiplied(p_);
        e /= p_;
    }
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::monic() const {
    if (is_zero() || coeffs_[0] == 1) return *this;
    return scaled(fp::inv(coeffs_[0], p_));
}

Poly Poly::embedded(std::size_t nvars) const {
    if (nvars < nvars_) throw InvalidArgument("cannot embed into fewer variables");
    if (nvars == nvars_) return *this;
    Poly r(p_, nvars);
    r.coeffs_ = coeffs_;
    r.exps_.assign(size() * nvars, 0);
    for (std::size_t t = 0; t < size(); ++t)
        std::copy_n(exps_.begin() + t * nvars_, nvars_, r.exps_.begin() + t * nvars);
    return r;
}

Poly Poly::remapped(std::size_t nvars, std::span<const std::size_t> target) const {
    if (target.size() != nvars_) throw InvalidArgument("variable map has wrong length");
    std::vector<Exp> exps(size() * nvars, 0);
    for (std::size_t t = 0; t < size(); ++t)
        for (std::size_t v = 0; v < nvars_; ++v) {
            Exp e = exps_[t * nvars_ + v];
            if (e == 0) continue;
            if (target[v] >= nvars) throw InvalidArgument("variable map out of range");
            exps[t * nvars + target[v]] += e;
        }
    return from_terms(p_, nvars, std::move(exps), coeffs_);
}

Poly Poly::exponents_multiplied(Exp k) const {
    Poly r = *this;
    for (Exp& e : r.exps_) e = checked_mul(e, k);
    return r;
}

bool Poly::exponents_divisible_by(Exp k) const {
    return std::all_of(exps_.begin(), exps_.end(), [k](Exp e) { return e % k == 0; });
}

Poly Poly::exponents_divided(Exp k) const {
    Poly r = *this;
    for (Exp& e : r.exps_) {
        if (e % k != 0) throw InvalidArgument("exponent not divisible");
        e /= k;
    }
    return r;
}

Poly Poly::deflated(std::span<const Exp> k) const {
    Poly r = *this;
    for (std::size_t t = 0; t < size(); ++t)
        for (std::size_t v = 0; v < nvars_; ++v)
            if (k[v] > 1) r.exps_[t * nvars_ + v] /= k[v];
    // Per-variable scaling does not preserve graded order in general.
    return from_terms(p_, nvars_, std::move(r.exps_), std::move(r.coeffs_));
}

Poly Poly::inflated(std::span<const Exp> k) const {
    Poly r = *this;
    for (std::size_t t = 0; t < size(); ++t)
        for (std::size_t v = 0; v < nvars_; ++v)
            if (k[v] > 1) r.exps_[t * nvars_ + v] = checked_mul(r.exps_[t * nvars_ + v], k[v]);
    return from_terms(p_, nvars_, std::move(r.exps_), std::move(r.coeffs_));
}

Poly Poly::coefficient_in(std::size_t var, Exp d) const {
    Poly r(p_, nvars_);
    std::vector<Exp> e(nvars_);
    for (std::size_t t = 0; t < size(); ++t) {
        if (exps_[t * nvars_ + var] != d) continue;
        auto src = exponents(t);
        std::copy(src.begin(), src.end(), e.begin());
        e[var] = 0;
        r.push(e, coeffs_[t]);
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    require_compatible(*this, d);
    if (d.is_zero()) throw DivisionByZero();
    if (is_zero()) return Poly(p_, nvars_);
    if (d.is_constant()) return scaled(fp::inv(d.coeff(0), p_));
    const Coeff lc_inv = fp::inv(d.leading_coeff(), p_);
    if (auto pk = packing_for(nvars_, total_degree())) {
        if (d.total_degree() > total_degree()) return std::nullopt;
        std::vector<std::uint64_t> kd(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) kd[j] = pk->pack(d.exponents(j));
        std::map<std::uint64_t, Coeff, std::greater<>> r;
        for (std::size_t t = 0; t < size(); ++t) r.emplace(pk->pack(exponents(t)), coeffs_[t]);
        std::vector<Exp> qe, e(nvars_);
        std::vector<Coeff> qc;
        while (!r.empty()) {
            const auto [rk, rc] = *r.begin();
            if (!pk->divides(kd[0], rk)) return std::nullopt;
            const std::uint64_t shift = rk - kd[0];
            const Coeff c = fp::mul(rc, lc_inv, p_);
            pk->unpack(shift, e.data());
            qe.insert(qe.end(), e.begin(), e.end());
            qc.push_back(c);
            r.erase(r.begin());
            for (std::size_t j = 1; j < d.size(); ++j) {
                const Coeff sub = fp::mul(c, d.coeffs_[j], p_);
                auto [it, fresh] = r.try_emplace(shift + kd[j], fp::neg(sub, p_));
                if (!fresh) {
                    it->second = fp::sub(it->second, sub, p_);
                    if (it->second == 0) r.erase(it);
                }
            }
        }
        return from_sorted_terms(p_, nvars_, std::move(qe), std::move(qc));
    }
    auto lead = d.exponents(0);
    std::vector<Exp> qe;
    std::vector<Coeff> qc;
    Poly r = *this;
    std::vector<Exp> shift(nvars_);
    while (!r.is_zero()) {
        auto re = r.exponents(0);
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (re[v] < lead[v]) return std::nullopt;
            shift[v] = re[v] - lead[v];
        }
        Coeff c = fp::mul(r.leading_coeff(), lc_inv, p_);
        qe.insert(qe.end(), shift.begin(), shift.end());
        qc.push_back(c);
        r = r - d.times_monomial(shift, c);
    }
    // Quotient terms are produced in descending order.
    Poly q(p_, nvars_);
    q.exps_ = std::move(qe);
    q.coeffs_ = std::move(qc);
    return q;
}

Coeff Poly::evaluate(std::span<const Coeff> point) const {
    Coeff acc = 0;
    for (std::size_t t = 0; t < size(); ++t) {
        Coeff term = coeffs_[t];
        for (std::size_t v = 0; v < nvars_; ++v)
            term = fp::mul(term, fp::pow(point[v], exps_[t * nvars_ + v], p_), p_);
        acc = fp::add(acc, term, p_);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

Poly one_like(const Poly& a) { return Poly::constant(a.prime(), a.nvars(), 1); }

// gcd(monomial m, f): the monomial of componentwise minimum exponents.
Poly monomial_gcd(const Poly& m, const Poly& f) {
    std::vector<Exp> e(m.exponents(0).begin(), m.exponents(0).end());
    for (std::size_t t = 0; t < f.size(); ++t) {
        auto fe = f.exponents(t);
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::min(e[v], fe[v]);
    }
    return Poly::monomial(m.prime(), e, 1);
}

// Groups the terms of `a` by their exponents on the variables in `outer`,
// returning the coefficient polynomials (with those variables removed).
std::vector<Poly> coefficients_over(const Poly& a, const std::vector<bool>& outer) {
    const std::size_t nv = a.nvars();
    std::map<std::vector<Exp>, std::pair<std::vector<Exp>, std::vector<Coeff>>> groups;
    std::vector<Exp> key, inner(nv);
    for (std::size_t t = 0; t < a.size(); ++t) {
        auto e = a.exponents(t);
        key.clear();
        for (std::size_t v = 0; v < nv; ++v) {
            if (outer[v]) {
                key.push_back(e[v]);
                inner[v] = 0;
            } else {
                inner[v] = e[v];
            }
        }
        auto& g = groups[key];
        g.first.insert(g.first.end(), inner.begin(), inner.end());
        g.second.push_back(a.coeff(t));
    }
    std::vector<Poly> out;
    out.reserve(groups.size());
    for (auto& [k, g] : groups)
        out.push_back(Poly::from_terms(a.prime(), nv, std::move(g.first), std::move(g.second)));
    // Smallest first tends to shrink the running gcd fastest.
    std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
    return out;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly gcd_with_all(Poly g, const std::vector<Poly>& polys) {
    for (const Poly& c : polys) {
        g = gcd_impl(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Poly content_in(const Poly& a, std::size_t var) {
    std::vector<bool> outer(a.nvars(), false);
    outer[var] = true;
    auto coeffs = coefficients_over(a, outer);
    Poly g = coeffs.front();
    for (std::size_t i = 1; i < coeffs.size() && !g.is_constant(); ++i) g = gcd_impl(g, coeffs[i]);
    return g.monic();
}

Poly primitive_part_in(const Poly& a, std::size_t var) {
    Poly c = content_in(a, var);
    if (c.is_constant()) return a;
    return *a.divide_exact(c);
}

// lc(b)^(deg a - deg b + 1) a reduced modulo b, with respect to `var`.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
    const Exp db = b.degree_in(var);
    const Poly lcb = b.coefficient_in(var, db);
    std::vector<Exp> shift(a.nvars(), 0);
    const Exp da0 = a.degree_in(var);
    if (da0 < db) return a;
    Exp steps = 0;
    while (!a.is_zero()) {
        const Exp da = a.degree_in(var);
        if (da < db) break;
        Poly lca = a.coefficient_in(var, da);
        shift[var] = da - db;
        Poly t = (lca * b).times_monomial(shift, 1);
        a = lcb * a - t;
        ++steps;
    }
    const Exp missing = da0 - db + 1 - steps;
    if (missing > 0 && !a.is_zero()) a = a * lcb.pow(missing);
    return a;
}

// Splits off the largest monomial factor: returns the cofactor and stores
// the monomial's exponents in `m`.
Poly strip_monomial(const Poly& a, std::vector<Exp>& m) {
    const std::size_t nv = a.nvars();
    m.assign(nv, std::numeric_limits<Exp>::max());
    for (std::size_t t = 0; t < a.size(); ++t) {
        auto e = a.exponents(t);
        for (std::size_t v = 0; v < nv; ++v) m[v] = std::min(m[v], e[v]);
    }
    bool any = false;
    for (Exp x : m) any |= x > 0;
    if (!any) return a;
    std::vector<Exp> exps;
    std::vector<Coeff> coeffs;
    exps.reserve(a.size() * nv);
    for (std::size_t t = 0; t < a.size(); ++t) {
        auto e = a.exponents(t);
        for (std::size_t v = 0; v < nv; ++v) exps.push_back(e[v] - m[v]);
        coeffs.push_back(a.coeff(t));
    }
    return Poly::from_sorted_terms(a.prime(), nv, std::move(exps), std::move(coeffs));
}

// Specializes every variable but `var` to a random point of a finite
// extension and compares the univariate images. When one argument is
// primitive in `var`, both leading coefficients survive and the images are
// coprime, the arguments are coprime.
bool coprime_by_evaluation(const Poly& a, const Poly& b, std::size_t var) {
    const detail::EvalField& k = detail::EvalField::for_prime(a.prime());
    const std::size_t nv = a.nvars();
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    auto image = [&](const Poly& f, const std::vector<detail::EvalField::Elem>& point) {
        std::vector<detail::EvalField::Elem> out(f.degree_in(var) + 1, k.zero());
        for (std::size_t t = 0; t < f.size(); ++t) {
            auto e = f.exponents(t);
            detail::EvalField::Elem c = k.from_fp(f.coeff(t));
            for (std::size_t v = 0; v < nv; ++v)
                if (v != var && e[v] > 0) c = k.mul(c, k.pow(point[v], e[v]));
            out[e[var]] = k.add(out[e[var]], c);
        }
        return out;
    };
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<detail::EvalField::Elem> point(nv);
        for (auto& x : point) x = k.nonzero(1 + rng() % (k.order() - 1));
        auto ia = image(a, point), ib = image(b, point);
        if (ia.back() == k.zero() || ib.back() == k.zero()) continue;
        return detail::univariate_gcd_degree(k, std::move(ia), std::move(ib)) == 0;
    }
    return false;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return one_like(a);
    if (a.size() == 1) return monomial_gcd(a, b);
    if (b.size() == 1) return monomial_gcd(b, a);
    if (a == b) return a.monic();

    const std::size_t nv = a.nvars();
    {
        // Neither cofactor is divisible by a variable, so the monomial parts
        // split off: gcd(m a', n b') = gcd(m, n) gcd(a', b').
        std::vector<Exp> ma, mb;
        Poly ca = strip_monomial(a, ma), cb = strip_monomial(b, mb);
        bool stripped = false;
        for (std::size_t v = 0; v < nv; ++v) {
            stripped |= ma[v] > 0 || mb[v] > 0;
            ma[v] = std::min(ma[v], mb[v]);
        }
        if (stripped) return gcd_impl(ca, cb).times_monomial(ma, 1).monic();
    }
    const auto sa = a.support();
    const auto sb = b.support();

    // Variables present in only one argument cannot occur in the gcd.
    std::vector<bool> only_a(nv), only_b(nv);
    bool any_a = false, any_b = false;
    for (std::size_t v = 0; v < nv; ++v) {
        only_a[v] = sa[v] && !sb[v];
        only_b[v] = sb[v] && !sa[v];
        any_a |= only_a[v];
        any_b |= only_b[v];
    }
    if (any_a) return gcd_with_all(b, coefficients_over(a, only_a)).monic();
    if (any_b) return gcd_with_all(a, coefficients_over(b, only_b)).monic();

    // Deflate variables whose exponents share a common factor.
    std::vector<Exp> defl(nv, 0);
    bool deflate = false;
    for (const Poly* q : {&a, &b})
        for (std::size_t t = 0; t < q->size(); ++t) {
            auto e = q->exponents(t);
            for (std::size_t v = 0; v < nv; ++v) defl[v] = std::gcd(defl[v], e[v]);
        }
    for (Exp& d : defl) {
        if (d > 1) deflate = true;
        if (d == 0) d = 1;
    }
    if (deflate) return gcd_impl(a.deflated(defl), b.deflated(defl)).inflated(defl).monic();

    // Main variable: the one with smallest degree, to keep the remainder
    // sequence short.
    std::size_t var = nv;
    Exp best = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        if (!sa[v]) continue;
        Exp d = std::max(a.degree_in(v), b.degree_in(v));
        if (var == nv || d < best) {
            var = v;
            best = d;
        }
    }

    // The content of the gcd divides both contents, so when the smaller
    // argument is primitive the larger one's content never has to be found;
    // the first pseudo-remainder absorbs it.
    const bool a_small = a.size() <= b.size();
    const Poly& small = a_small ? a : b;
    const Poly& large = a_small ? b : a;
    Poly cs = content_in(small, var);
    Poly c = one_like(a);
    Poly ps = small, pl = large;
    if (!cs.is_constant()) {
        Poly cl = content_in(large, var);
        c = gcd_impl(cs, cl);
        ps = *small.divide_exact(cs);
        if (!cl.is_constant()) pl = *large.divide_exact(cl);
    }
    Poly pa = std::move(pl), pb = std::move(ps);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    if (coprime_by_evaluation(pa, pb, var)) return c.monic();
    // Subresultant remainder sequence: coefficients stay polynomial and every
    // division below is exact, so no intermediate contents are needed.
    Poly g = one_like(a), h = one_like(a);
    while (true) {
        const Exp delta = pa.degree_in(var) - pb.degree_in(var);
        Poly r = pseudo_remainder(pa, pb, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            pb = one_like(a);
            break;
        }
        pa = std::move(pb);
        pb = *r.divide_exact(g * h.pow(delta));
        g = pa.coefficient_in(var, pa.degree_in(var));
        if (delta > 0) h = *g.pow(delta).divide_exact(h.pow(delta - 1));
    }
    if (pb.is_constant()) return c.monic();
    return (c * primitive_part_in(pb, var)).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    require_compatible(a, b);
    return gcd_impl(a, b);
}

}  // namespace artin
