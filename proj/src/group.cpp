#include "artin/group.hpp"

#include <algorithm>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(std::uint32_t n) {
    auto g = abelian({n});
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::abelian(std::vector<std::uint32_t> orders) {
    std::uint64_t total = 1;
    for (std::uint32_t n : orders) {
        if (n == 0) throw InvalidArgument("cyclic factor of order 0");
        total *= n;
        if (total > 4096) throw InvalidArgument("group too large");
    }
    std::vector<std::vector<Elem>> table(total, std::vector<Elem>(total));
    auto coords = [&](std::uint64_t a) {
        std::vector<std::uint32_t> c(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) {
            c[i] = static_cast<std::uint32_t>(a % orders[i]);
            a /= orders[i];
        }
        return c;
    };
    for (std::uint64_t a = 0; a < total; ++a) {
        auto ca = coords(a);
        for (std::uint64_t b = 0; b < total; ++b) {
            auto cb = coords(b);
            std::uint64_t idx = 0;
            for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + (ca[i] + cb[i]) % orders[i];
            table[a][b] = static_cast<Elem>(idx);
        }
    }
    std::string desc;
    for (std::size_t i = 0; i < orders.size(); ++i) desc += (i ? " x Z/" : "Z/") + std::to_string(orders[i]);
    if (orders.empty()) desc = "1";
    auto g = build(std::move(table), desc, false);
    g->factors_ = std::move(orders);
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::vector<std::vector<Elem>> table,
                                                           std::string description) {
    return build(std::move(table), std::move(description), true);
}

std::shared_ptr<FiniteGroup> FiniteGroup::build(std::vector<std::vector<Elem>> table, std::string description,
                                                bool check_associativity) {
    const std::size_t n = table.size();
    if (n == 0) throw InvalidArgument("empty group table");
    for (const auto& row : table) {
        if (row.size() != n) throw InvalidArgument("group table is not square");
        for (Elem e : row)
            if (e >= n) throw InvalidArgument("group table entry out of range");
    }
    for (Elem a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a) throw InvalidArgument("element 0 is not the identity");
    auto g = std::make_shared<FiniteGroup>();
    g->inverse_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        auto it = std::find(table[a].begin(), table[a].end(), 0u);
        if (it == table[a].end()) throw InvalidArgument("group table lacks inverses");
        Elem b = static_cast<Elem>(it - table[a].begin());
        if (table[b][a] != 0) throw InvalidArgument("group table lacks two-sided inverses");
        g->inverse_[a] = b;
    }
    if (check_associativity)
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (table[table[a][b]][c] != table[a][table[b][c]])
                        throw InvalidArgument("group table is not associative");
    g->table_ = std::move(table);
    g->description_ = std::move(description);
    return g;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
    if (k < 0) return pow(inv(a), -k);
    Elem r = 0;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::uint32_t FiniteGroup::element_order(Elem a) const {
    std::uint32_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
        for (Elem b = 0; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::uint32_t> FiniteGroup::coordinates(Elem a) const {
    std::vector<std::uint32_t> c(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        c[i] = a % factors_[i];
        a /= factors_[i];
    }
    return c;
}

Subgroup FiniteGroup::whole() const {
    Subgroup s(order());
    std::iota(s.begin(), s.end(), 0u);
    return s;
}

Subgroup FiniteGroup::generated(const std::vector<Elem>& gens) const {
    std::vector<bool> in(order(), false);
    in[0] = true;
    std::vector<Elem> frontier{0};
    while (!frontier.empty()) {
        Elem x = frontier.back();
        frontier.pop_back();
        for (Elem g : gens) {
            Elem y = mul(x, g);
            if (!in[y]) {
                in[y] = true;
                frontier.push_back(y);
            }
        }
    }
    Subgroup s;
    for (Elem a = 0; a < order(); ++a)
        if (in[a]) s.push_back(a);
    return s;
}

bool FiniteGroup::is_subgroup(const Subgroup& h) const {
    if (h.empty() || h.front() != 0 || !std::is_sorted(h.begin(), h.end())) return false;
    for (Elem a : h) {
        if (a >= order()) return false;
        for (Elem b : h)
            if (!std::binary_search(h.begin(), h.end(), mul(a, inv(b)))) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const Subgroup& h) const {
    for (Elem g = 0; g < order(); ++g)
        for (Elem a : h)
            if (!std::binary_search(h.begin(), h.end(), mul(mul(g, a), inv(g)))) return false;
    return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SubgroupView subgroup_as_group(const GroupPtr& g, const Subgroup& h) {
    if (!g->is_subgroup(h)) throw InvalidArgument("not a subgroup");
    const std::size_t n = h.size();
    // Cyclic subgroups keep the standard cyclic numbering so linear
    // characters can be written down by exponent.
    for (Elem x : h) {
        if (g->element_order(x) != n) continue;
        std::vector<Elem> embedding;
        for (std::size_t k = 0; k < n; ++k) embedding.push_back(g->pow(x, static_cast<std::int64_t>(k)));
        return {FiniteGroup::cyclic(static_cast<std::uint32_t>(n)), std::move(embedding)};
    }
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem prod = g->mul(h[i], h[j]);
            table[i][j] = static_cast<Elem>(std::lower_bound(h.begin(), h.end(), prod) - h.begin());
        }
    return {FiniteGroup::from_table(std::move(table), "subgroup of " + g->description()), h};
}

}  // namespace artin
