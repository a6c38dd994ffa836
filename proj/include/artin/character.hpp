#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/group.hpp"

namespace artin {

// Element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
class Cyclotomic {
public:
    Cyclotomic() = default;
    static Cyclotomic integer(std::uint32_t n, std::int64_t c);
    static Cyclotomic zeta_power(std::uint32_t n, std::int64_t k);

    std::uint32_t root_order() const noexcept { return n_; }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    bool is_integer() const;
    std::int64_t integer_value() const;  // requires is_integer()

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.coords_ == b.coords_;
    }
    std::optional<Cyclotomic> divided_exactly(std::int64_t d) const;
    // Same number in Z[zeta_m] for a multiple m of n.
    Cyclotomic lifted(std::uint32_t m) const;

private:
    static Cyclotomic reduce(std::uint32_t n, std::vector<std::int64_t> poly);

    std::uint32_t n_ = 1;
    std::vector<std::int64_t> coords_;
};

// Coefficients of the n-th cyclotomic polynomial, degree 0 first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

// Character of a representation of a finite group with values in Z[zeta_n].
class CharRep {
public:
    static CharRep trivial(const GroupPtr& g);
    static CharRep regular(const GroupPtr& g);
    // For a product of cyclic groups Z/n_i: chi(a) = prod zeta_{n_i}^{k_i a_i}.
    static CharRep linear(const GroupPtr& g, const std::vector<std::int64_t>& exponents);
    // Validates class-function property and an integral positive degree.
    static CharRep from_values(const GroupPtr& g, std::uint32_t n_root, std::vector<Cyclotomic> values);

    const GroupPtr& group() const noexcept { return group_; }
    std::uint32_t root_order() const noexcept { return n_root_; }
    std::int64_t dim() const { return values_[0].integer_value(); }
    const Cyclotomic& value(Elem g) const { return values_[g]; }
    const std::vector<Cyclotomic>& values() const noexcept { return values_; }

    friend CharRep operator+(const CharRep& a, const CharRep& b);
    friend bool operator==(const CharRep& a, const CharRep& b) {
        return a.group_->same_as(*b.group_) && a.n_root_ == b.n_root_ && a.values_ == b.values_;
    }
    CharRep with_root_order(std::uint32_t m) const;
    CharRep restricted(const SubgroupView& h) const;

private:
    GroupPtr group_;
    std::uint32_t n_root_ = 1;
    std::vector<Cyclotomic> values_;
};

// dim V^H by averaging the character over H. Throws NonIntegralDimension
// when the average is not an integer in [0, dim].
std::int64_t invariants_dim(const CharRep& rep, const Subgroup& h);

// Ind_H^G chi for chi a character of the subgroup view.
CharRep induce_character(const GroupPtr& g, const SubgroupView& h, const CharRep& chi);

}  // namespace artin
