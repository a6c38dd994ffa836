#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/pfield.hpp"

namespace artin {

// Truncated Laurent series sum_{j >= val} c_j y^j over a PElem field, known
// modulo y^prec. A series with prec == kExact is a Laurent polynomial known
// exactly.
//
// Three kinds of zero are kept apart: exact zero, zero modulo y^prec, and a
// nonzero series (leading coefficient nonzero). Only the last has a valuation.
class LSeries {
public:
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

    LSeries() = default;

    static LSeries zero(FieldPtr field, std::string uniformizer, std::int64_t prec = kExact);
    static LSeries constant(const PElem& c, std::string uniformizer, std::int64_t prec = kExact);
    static LSeries monomial(const PElem& c, std::int64_t j, std::string uniformizer,
                            std::int64_t prec = kExact);
    // Coefficients of y^start, y^(start+1), ...; trims zeros and anything at
    // or beyond prec.
    static LSeries from_coefficients(FieldPtr field, std::string uniformizer, std::int64_t start,
                                     std::vector<PElem> coeffs, std::int64_t prec);
    // Accepts the text produced by to_string, or an expression in the field
    // variables and the uniformizer followed by ";; prec=N" / ";; prec=inf".
    static LSeries parse(FieldPtr field, std::string uniformizer, std::string_view text);

    const FieldPtr& field() const noexcept { return field_; }
    const std::string& uniformizer() const noexcept { return uniformizer_; }
    std::int64_t prec() const noexcept { return prec_; }
    bool is_exact() const noexcept { return prec_ == kExact; }

    bool is_exact_zero() const noexcept { return terms_.empty() && prec_ == kExact; }
    bool is_zero_to_precision() const noexcept { return terms_.empty() && prec_ != kExact; }
    bool has_valuation() const noexcept { return !terms_.empty(); }
    // Throws UnknownValuation for either kind of zero.
    std::int64_t valuation() const;
    // Valuation when known; prec for zero-to-precision; kExact for exact zero.
    std::int64_t order_bound() const noexcept;

    // Coefficient of y^j; zero outside the support. Throws PrecisionExhausted
    // when j >= prec.
    PElem coefficient(std::int64_t j) const;
    const PElem& leading_coefficient() const;
    // Index one past the last stored nonzero coefficient.
    std::int64_t support_end() const noexcept { return val_ + static_cast<std::int64_t>(terms_.size()); }

    LSeries operator-() const;
    friend LSeries operator+(const LSeries& a, const LSeries& b);
    friend LSeries operator-(const LSeries& a, const LSeries& b);
    friend LSeries operator*(const LSeries& a, const LSeries& b);
    // Exact quotients of non-monomial exact divisors need a cap; see div.
    friend LSeries operator/(const LSeries& a, const LSeries& b);
    // Structural identity: same precision and coefficients.
    friend bool operator==(const LSeries& a, const LSeries& b);

    LSeries scaled(const PElem& c) const;
    // Multiplication by y^k.
    LSeries shifted(std::int64_t k) const;
    LSeries truncated(std::int64_t prec) const;
    LSeries pow(std::uint64_t e) const;
    // Applies a map of coefficient fields termwise (must be a field map).
    LSeries map_coefficients(FieldPtr target, const std::function<PElem(const PElem&)>& f) const;
    LSeries embedded(FieldPtr larger) const;
    // Coefficientwise Frobenius c -> c^{p^k}; y is fixed.
    LSeries frobenius_coefficients(int k) const;

    std::string to_string() const;

    // Throws FieldMismatch unless both series share field and uniformizer.
    void require_compatible(const LSeries& other) const;

private:
    static LSeries normalized(FieldPtr field, std::string uniformizer, std::int64_t start,
                              std::vector<PElem> coeffs, std::int64_t prec);

    FieldPtr field_;
    std::string uniformizer_;
    std::int64_t val_ = 0;  // exponent of terms_[0]; equals prec_ for zero-to-precision
    std::int64_t prec_ = kExact;
    std::vector<PElem> terms_;
};

enum class SeriesOp { Add, Sub, Mul, Div };

// `cap`, when given, bounds the absolute precision of a quotient. A quotient
// by an exact divisor with more than one term has no finite expansion, so it
// requires a cap or an inexact operand.
LSeries div(const LSeries& f, const LSeries& g, std::optional<std::int64_t> cap = std::nullopt);
LSeries ser_arith(SeriesOp op, const LSeries& f, const LSeries& g,
                  std::optional<std::int64_t> cap = std::nullopt);

// True when f - g vanishes to the common precision.
bool equal_to_precision(const LSeries& f, const LSeries& g);

struct Coefficients {
    std::int64_t start = 0;
    std::vector<PElem> values;  // coefficients of y^start .. y^(prec-1)
};

// For exact series the list stops after the last nonzero coefficient.
Coefficients coefficients(const LSeries& f);

// Expands the rational function c (scale 0, over a field with one variable
// per image) at images[v] for variable v. Images must have nonnegative
// valuation and lie over `target` with the given uniformizer.
LSeries compose_rational(const PElem& c, std::span<const LSeries> images, const FieldPtr& target,
                         const std::string& uniformizer,
                         std::optional<std::int64_t> cap = std::nullopt);

}  // namespace artin
