#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artin/series.hpp"

namespace artin {

// Polynomial in one variable over truncated Laurent series, coefficients
// stored from degree 0 upward. Exact-zero top coefficients are trimmed.
class SPoly {
public:
    SPoly() = default;
    SPoly(FieldPtr field, std::string uniformizer);

    static SPoly from_coefficients(FieldPtr field, std::string uniformizer, std::vector<LSeries> coeffs);
    static SPoly constant(const LSeries& c);
    static SPoly variable(FieldPtr field, std::string uniformizer);
    // Expression in `var`, the uniformizer and the field variables. Divisors
    // must be free of `var`; their quotients are expanded to `prec`.
    static SPoly parse(FieldPtr field, std::string uniformizer, const std::string& var, std::string_view text,
                       std::int64_t prec);

    const FieldPtr& field() const noexcept { return field_; }
    const std::string& uniformizer() const noexcept { return uniformizer_; }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    LSeries coeff(int i) const;
    const std::vector<LSeries>& coefficients() const noexcept { return coeffs_; }
    // Leading coefficient is 1 to its precision.
    bool is_monic() const;
    // Every coefficient vanishes to its precision.
    bool is_zero_to_precision() const;

    friend SPoly operator+(const SPoly& a, const SPoly& b);
    friend SPoly operator-(const SPoly& a, const SPoly& b);
    friend SPoly operator*(const SPoly& a, const SPoly& b);
    SPoly operator-() const;
    SPoly scaled(const LSeries& c) const;

    SPoly derivative() const;
    // Remainder modulo a monic polynomial.
    SPoly mod(const SPoly& m) const;
    // this(q) mod m.
    SPoly compose_mod(const SPoly& q, const SPoly& m) const;
    // Evaluation at a series.
    LSeries evaluate(const LSeries& x) const;
    SPoly map_coefficients(const std::function<LSeries(const LSeries&)>& f) const;

    std::string to_string(const std::string& var) const;

private:
    void trim();

    FieldPtr field_;
    std::string uniformizer_;
    std::vector<LSeries> coeffs_;
};

using SMatrix = std::vector<std::vector<LSeries>>;

// Division-free determinant (Berkowitz).
LSeries determinant(const SMatrix& a);

// Norm of z from K[T]/(m) to K, for monic m: the determinant of
// multiplication by z in the basis 1, T, ..., T^{deg m - 1}.
LSeries norm_mod(const SPoly& z, const SPoly& m);

// Discriminant of a monic polynomial, (-1)^{n(n-1)/2} N(m').
LSeries discriminant(const SPoly& m);

// Solves a x = b by Gaussian elimination with least-valuation pivots.
// Throws PrecisionExhausted when no pivot has a known valuation. `cap` bounds
// the precision of quotients, as for div.
std::vector<LSeries> solve_linear(SMatrix a, std::vector<LSeries> b,
                                  std::optional<std::int64_t> cap = std::nullopt);

}  // namespace artin
