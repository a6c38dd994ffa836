#include "artin/character.hpp"

#include <numeric>

#include "artin/errors.hpp"

namespace artin {

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw InvalidArgument("cyclotomic order 0");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d) continue;
        std::vector<std::int64_t> div = cyclotomic_polynomial(d);
        const std::size_t dd = div.size() - 1;
        std::vector<std::int64_t> q(poly.size() - dd, 0);
        for (std::size_t i = poly.size(); i-- > dd;) {
            std::int64_t c = poly[i];
            q[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
        }
        poly = std::move(q);
    }
    return poly;
}

Cyclotomic Cyclotomic::reduce(std::uint32_t n, std::vector<std::int64_t> poly) {
    std::vector<std::int64_t> phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        std::int64_t c = poly[i];
        if (!c) continue;
        for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg, 0);
    Cyclotomic r;
    r.n_ = n;
    r.coords_ = std::move(poly);
    return r;
}

Cyclotomic Cyclotomic::integer(std::uint32_t n, std::int64_t c) { return reduce(n, {c}); }

Cyclotomic Cyclotomic::zeta_power(std::uint32_t n, std::int64_t k) {
    std::int64_t e = ((k % n) + n) % n;
    std::vector<std::int64_t> poly(static_cast<std::size_t>(e) + 1, 0);
    poly[static_cast<std::size_t>(e)] = 1;
    return reduce(n, std::move(poly));
}

bool Cyclotomic::is_integer() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i]) return false;
    return true;
}

std::int64_t Cyclotomic::integer_value() const {
    if (!is_integer()) throw InvalidArgument("cyclotomic number is not an integer");
    return coords_.empty() ? 0 : coords_[0];
}

namespace {

void require_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.root_order() != b.root_order()) throw InvalidArgument("cyclotomic numbers of different orders");
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    require_same(a, b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    require_same(a, b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    require_same(a, b);
    std::vector<std::int64_t> prod(a.coords_.size() + b.coords_.size(), 0);
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        for (std::size_t j = 0; j < b.coords_.size(); ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    return Cyclotomic::reduce(a.n_, std::move(prod));
}

std::optional<Cyclotomic> Cyclotomic::divided_exactly(std::int64_t d) const {
    Cyclotomic r = *this;
    for (std::int64_t& c : r.coords_) {
        if (c % d) return std::nullopt;
        c /= d;
    }
    return r;
}

Cyclotomic Cyclotomic::lifted(std::uint32_t m) const {
    if (m % n_) throw InvalidArgument("cyclotomic lift to a non-multiple order");
    const std::uint32_t step = m / n_;
    std::vector<std::int64_t> poly(coords_.size() * step + 1, 0);
    for (std::size_t i = 0; i < coords_.size(); ++i) poly[i * step] = coords_[i];
    return reduce(m, std::move(poly));
}

CharRep CharRep::trivial(const GroupPtr& g) {
    return from_values(g, 1, std::vector<Cyclotomic>(g->order(), Cyclotomic::integer(1, 1)));
}

CharRep CharRep::regular(const GroupPtr& g) {
    std::vector<Cyclotomic> v(g->order(), Cyclotomic::integer(1, 0));
    v[0] = Cyclotomic::integer(1, g->order());
    return from_values(g, 1, std::move(v));
}

CharRep CharRep::linear(const GroupPtr& g, const std::vector<std::int64_t>& exponents) {
    const auto& factors = g->factors();
    if (factors.empty() && g->order() != 1) throw InvalidArgument("linear characters need a product of cyclic groups");
    if (exponents.size() != factors.size()) throw InvalidArgument("one exponent per cyclic factor is needed");
    std::uint32_t n = 1;
    for (std::uint32_t f : factors) n = std::lcm(n, f);
    std::vector<Cyclotomic> v;
    for (Elem a = 0; a < g->order(); ++a) {
        auto c = g->coordinates(a);
        std::int64_t k = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            k += exponents[i] * static_cast<std::int64_t>(c[i]) * (n / factors[i]);
        v.push_back(Cyclotomic::zeta_power(n, k));
    }
    return from_values(g, n, std::move(v));
}

CharRep CharRep::from_values(const GroupPtr& g, std::uint32_t n_root, std::vector<Cyclotomic> values) {
    if (values.size() != g->order()) throw InvalidArgument("one character value per group element is needed");
    for (const Cyclotomic& c : values)
        if (c.root_order() != n_root) throw InvalidArgument("character values of mixed cyclotomic order");
    if (!values[0].is_integer() || values[0].integer_value() <= 0)
        throw InvalidArgument("character value at the identity must be a positive integer");
    for (Elem x = 0; x < g->order(); ++x)
        for (Elem h = 0; h < g->order(); ++h)
            if (!(values[g->mul(g->mul(x, h), g->inv(x))] == values[h]))
                throw InvalidArgument("character is not a class function");
    CharRep r;
    r.group_ = g;
    r.n_root_ = n_root;
    r.values_ = std::move(values);
    return r;
}

CharRep CharRep::with_root_order(std::uint32_t m) const {
    CharRep r = *this;
    r.n_root_ = m;
    for (Cyclotomic& c : r.values_) c = c.lifted(m);
    return r;
}

CharRep operator+(const CharRep& a, const CharRep& b) {
    if (!a.group_->same_as(*b.group_)) throw InvalidArgument("direct sum of characters of different groups");
    std::uint32_t m = std::lcm(a.n_root_, b.n_root_);
    CharRep x = a.with_root_order(m), y = b.with_root_order(m);
    for (std::size_t i = 0; i < x.values_.size(); ++i) x.values_[i] = x.values_[i] + y.values_[i];
    return x;
}

CharRep CharRep::restricted(const SubgroupView& h) const {
    std::vector<Cyclotomic> v;
    for (Elem e : h.embedding) v.push_back(values_.at(e));
    return from_values(h.group, n_root_, std::move(v));
}

std::int64_t invariants_dim(const CharRep& rep, const Subgroup& h) {
    Cyclotomic sum = Cyclotomic::integer(rep.root_order(), 0);
    for (Elem e : h) sum = sum + rep.value(e);
    if (!sum.is_integer()) throw NonIntegralDimension("character average is not rational");
    std::int64_t s = sum.integer_value();
    const std::int64_t order = static_cast<std::int64_t>(h.size());
    if (s % order) throw NonIntegralDimension("character average is not an integer");
    std::int64_t d = s / order;
    if (d < 0 || d > rep.dim()) throw NonIntegralDimension("invariant dimension out of range");
    return d;
}

CharRep induce_character(const GroupPtr& g, const SubgroupView& h, const CharRep& chi) {
    if (!chi.group()->same_as(*h.group)) throw InvalidArgument("character is not on the given subgroup");
    std::vector<Elem> local(g->order(), g->order());
    for (std::size_t i = 0; i < h.embedding.size(); ++i) local[h.embedding[i]] = static_cast<Elem>(i);
    std::vector<Cyclotomic> v;
    for (Elem x = 0; x < g->order(); ++x) {
        Cyclotomic sum = Cyclotomic::integer(chi.root_order(), 0);
        for (Elem t = 0; t < g->order(); ++t) {
            Elem c = g->mul(g->mul(g->inv(t), x), t);
            if (local[c] != g->order()) sum = sum + chi.value(local[c]);
        }
        auto q = sum.divided_exactly(static_cast<std::int64_t>(h.embedding.size()));
        if (!q) throw NonIntegralDimension("induced character is not integral");
        v.push_back(*q);
    }
    return CharRep::from_values(g, chi.root_order(), std::move(v));
}

}  // namespace artin
