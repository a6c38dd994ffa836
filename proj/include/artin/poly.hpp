#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "artin/fp.hpp"

namespace artin {

// Sparse multivariate polynomial over F_p in a fixed number of variables.
//
// Terms are kept sorted in strictly descending graded-lexicographic order
// (variable 0 is the largest), with nonzero coefficients. Exponent vectors
// are stored row-major in one flat buffer.
class Poly {
public:
    Poly() = default;
    Poly(Coeff p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    static Poly constant(Coeff p, std::size_t nvars, std::int64_t c);
    static Poly variable(Coeff p, std::size_t nvars, std::size_t var, Exp e = 1);
    static Poly monomial(Coeff p, std::span<const Exp> exps, Coeff c);
    // Sorts and combines arbitrary terms; zero coefficients are dropped.
    static Poly from_terms(Coeff p, std::size_t nvars, std::vector<Exp> exps,
                           std::vector<Coeff> coeffs);
    // Terms must already be strictly descending with nonzero coefficients.
    static Poly from_sorted_terms(Coeff p, std::size_t nvars, std::vector<Exp> exps,
                                  std::vector<Coeff> coeffs);

    Coeff prime() const noexcept { return p_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;

    std::span<const Exp> exponents(std::size_t term) const {
        return {exps_.data() + term * nvars_, nvars_};
    }
    Coeff coeff(std::size_t term) const { return coeffs_[term]; }
    Coeff leading_coeff() const;
    Coeff constant_term() const;

    Exp degree_in(std::size_t var) const;
    std::uint64_t total_degree() const;
    // Variables with a nonzero exponent in some term.
    std::vector<bool> support() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    Poly scaled(Coeff c) const;
    Poly times_monomial(std::span<const Exp> exps, Coeff c) const;
    Poly pow(std::uint64_t e) const;
    // Divides by the leading coefficient; zero stays zero.
    Poly monic() const;

    // Appends variables with exponent zero.
    Poly embedded(std::size_t nvars) const;
    // Moves variable i to position target[i] in a ring of `nvars` variables.
    Poly remapped(std::size_t nvars, std::span<const std::size_t> target) const;

    Poly exponents_multiplied(Exp k) const;
    bool exponents_divisible_by(Exp k) const;
    Poly exponents_divided(Exp k) const;
    // Per-variable exponent rescaling (divide or multiply variable v by k[v]).
    Poly deflated(std::span<const Exp> k) const;
    Poly inflated(std::span<const Exp> k) const;

    // Coefficient of var^d, as a polynomial with `var` removed (exponent 0).
    Poly coefficient_in(std::size_t var, Exp d) const;

    // Quotient when `d` divides *this exactly, otherwise nullopt.
    std::optional<Poly> divide_exact(const Poly& d) const;

    // Evaluates every variable at a constant in F_p.
    Coeff evaluate(std::span<const Coeff> point) const;

private:
    void push(std::span<const Exp> e, Coeff c);

    Coeff p_ = 2;
    std::size_t nvars_ = 0;
    std::vector<Exp> exps_;
    std::vector<Coeff> coeffs_;
};

// Graded-lex comparison of exponent vectors: negative, zero or positive.
int compare_monomials(std::span<const Exp> a, std::span<const Exp> b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace artin
