#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/poly.hpp"

namespace artin {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Registry of transcendentals for a coefficient field F_p(x_1..x_r)^{p^-inf}.
//
// Variables are only ever appended: a field obtained by `extended` contains
// the original as a prefix, so elements re-embed by padding exponents.
class Field {
public:
    static FieldPtr make(Coeff p, std::vector<std::string> names);

    Coeff p() const noexcept { return p_; }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    FieldPtr extended(const std::vector<std::string>& more) const;
    bool same_as(const Field& other) const noexcept;
    bool is_prefix_of(const Field& other) const noexcept;

    std::string describe() const;

private:
    Field(Coeff p, std::vector<std::string> names) : p_(p), names_(std::move(names)) {}

    Coeff p_;
    std::vector<std::string> names_;
};

// Element of the perfect closure of F_p(x_1..x_r).
//
// Represented as num(X)/den(X) with X_v = x_v^{1/p^scale}. Normal form:
// gcd(num, den) = 1, den monic, and scale minimal (num and den are not both
// polynomials in the X_v^p). Equal elements have identical normal forms.
// Values are immutable.
class PElem {
public:
    PElem() = default;
    explicit PElem(FieldPtr field);

    static PElem constant(FieldPtr field, std::int64_t c);
    static PElem variable(FieldPtr field, std::string_view name);
    static PElem variable(FieldPtr field, std::size_t index);
    // Normalizes an arbitrary fraction at the given scale.
    static PElem from_fraction(FieldPtr field, unsigned scale, Poly num, Poly den);
    static PElem parse(FieldPtr field, std::string_view text);

    const FieldPtr& field() const noexcept { return field_; }
    Coeff p() const noexcept { return field_->p(); }
    unsigned scale() const noexcept { return scale_; }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return scale_ == 0 && num_.is_one() && den_.is_one(); }
    // Element of F_p.
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    friend PElem operator+(const PElem& a, const PElem& b);
    friend PElem operator-(const PElem& a, const PElem& b);
    friend PElem operator*(const PElem& a, const PElem& b);
    friend PElem operator/(const PElem& a, const PElem& b);
    PElem operator-() const;
    friend bool operator==(const PElem& a, const PElem& b);

    PElem inverse() const;
    PElem pow(std::int64_t e) const;
    // a^{p^k}; negative k takes p^{|k|}-th roots.
    PElem frobenius(int k) const;
    // Same element in a field that has this element's field as a prefix.
    PElem embedded(FieldPtr larger) const;
    // Field homomorphism sending variable v to values[v]; every value lies in
    // `target`.
    PElem substitute(FieldPtr target, std::span<const PElem> values) const;

    std::string to_string() const;

private:
    PElem(FieldPtr field, unsigned scale, Poly num, Poly den)
        : field_(std::move(field)), scale_(scale), num_(std::move(num)), den_(std::move(den)) {}

    friend PElem make_coprime(FieldPtr, unsigned, Poly, Poly);

    FieldPtr field_;
    unsigned scale_ = 0;
    Poly num_;
    Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

PElem pf_arith(ArithOp op, const PElem& a, const PElem& b);
PElem pf_frobenius(const PElem& a, int k);

// Evaluates a polynomial (over poly.nvars() variables, scale 0) at field
// elements, with a single normalization at the end.
PElem evaluate_poly(const Poly& poly, std::span<const PElem> values, const FieldPtr& target);

}  // namespace artin
