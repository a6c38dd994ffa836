#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace artin {

using Elem = std::uint32_t;
// Sorted list of element indices, always containing the identity 0.
using Subgroup = std::vector<Elem>;

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
public:
    // Element k is the k-th power of a generator.
    static std::shared_ptr<const FiniteGroup> cyclic(std::uint32_t n);
    // Z/n_1 x ... x Z/n_r; element index is mixed radix with the last factor
    // varying fastest.
    static std::shared_ptr<const FiniteGroup> abelian(std::vector<std::uint32_t> orders);
    // Validates closure, identity, inverses and associativity.
    static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<Elem>> table,
                                                         std::string description = "explicit");

    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
    Elem mul(Elem a, Elem b) const { return table_[a][b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem pow(Elem a, std::int64_t k) const;
    std::uint32_t element_order(Elem a) const;
    bool is_abelian() const;
    // Same multiplication table.
    bool same_as(const FiniteGroup& other) const noexcept { return table_ == other.table_; }
    const std::string& description() const noexcept { return description_; }
    // Orders of the cyclic factors for groups built by cyclic/abelian.
    const std::vector<std::uint32_t>& factors() const noexcept { return factors_; }
    // Coordinates of an element in the cyclic factors.
    std::vector<std::uint32_t> coordinates(Elem a) const;

    Subgroup trivial_subgroup() const { return {0}; }
    Subgroup whole() const;
    Subgroup generated(const std::vector<Elem>& gens) const;
    bool is_subgroup(const Subgroup& h) const;
    bool is_normal(const Subgroup& h) const;

private:
    static std::shared_ptr<FiniteGroup> build(std::vector<std::vector<Elem>> table, std::string description,
                                              bool check_associativity);

    std::vector<std::vector<Elem>> table_;
    std::vector<Elem> inverse_;
    std::vector<std::uint32_t> factors_;
    std::string description_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

Subgroup intersect(const Subgroup& a, const Subgroup& b);

// A subgroup H <= G as a group in its own right; embedding[h] is the element
// of G corresponding to element h of H.
struct SubgroupView {
    GroupPtr group;
    std::vector<Elem> embedding;
};

SubgroupView subgroup_as_group(const GroupPtr& g, const Subgroup& h);

}  // namespace artin
