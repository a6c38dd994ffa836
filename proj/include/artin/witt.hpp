#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "artin/pfield.hpp"

namespace artin {

struct MonomialGreater {
    bool operator()(const std::vector<Exp>& a, const std::vector<Exp>& b) const {
        return compare_monomials(a, b) > 0;
    }
};

// Polynomial with integer coefficients, terms in descending graded order.
class IntPoly {
public:
    using Terms = std::map<std::vector<Exp>, mpz_class, MonomialGreater>;

    IntPoly() = default;
    explicit IntPoly(std::size_t nvars) : nvars_(nvars) {}
    static IntPoly constant(std::size_t nvars, const mpz_class& c);
    static IntPoly variable(std::size_t nvars, std::size_t var);

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }
    IntPoly scaled(const mpz_class& c) const;
    IntPoly pow(std::uint64_t e) const;
    // Divides every coefficient by d; throws std::logic_error if inexact.
    IntPoly divided_exactly(const mpz_class& d) const;
    Poly reduced_mod(Coeff p) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const std::vector<Exp>& e, const mpz_class& c);

    std::size_t nvars_ = 0;
    Terms terms_;
};

// Witt structure polynomials for length n. Variables are X_0..X_{n-1}
// (indices 0..n-1) followed by Y_0..Y_{n-1} (indices n..2n-1).
struct WittPolys {
    Coeff p = 0;
    std::size_t n = 0;
    std::vector<IntPoly> S, P;
    std::vector<Poly> S_mod_p, P_mod_p;

    std::vector<std::string> variable_names() const;
};

// Cached per (p, n). Throws LengthBound when n exceeds the configured bound.
std::shared_ptr<const WittPolys> witt_structure_polys(Coeff p, std::size_t n);
void set_witt_length_bound(std::size_t n);
std::size_t witt_length_bound();

// Recomputes the ghost components of the stored polynomials and compares
// them with w_i(X) + w_i(Y) and w_i(X) w_i(Y) over the integers.
bool verify_ghost_identities(const WittPolys& polys);

namespace testing {
// Replaces the cached polynomials for (p, n) by a copy whose last addition
// polynomial is off by X_0.
void corrupt_witt_cache(Coeff p, std::size_t n);
void clear_witt_cache();
}  // namespace testing

class WittVec {
public:
    WittVec() = default;
    static WittVec from_entries(std::vector<PElem> entries);
    static WittVec zero(FieldPtr field, std::size_t n);
    static WittVec one(FieldPtr field, std::size_t n);
    static WittVec teichmuller(const PElem& a, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    Coeff p() const noexcept { return field_->p(); }
    std::size_t length() const noexcept { return entries_.size(); }
    const std::vector<PElem>& entries() const noexcept { return entries_; }
    const PElem& operator[](std::size_t i) const { return entries_[i]; }

    friend WittVec operator+(const WittVec& a, const WittVec& b);
    friend WittVec operator*(const WittVec& a, const WittVec& b);
    friend bool operator==(const WittVec& a, const WittVec& b) { return a.entries_ == b.entries_; }
    WittVec operator-() const;
    // k-fold sum for k >= 0.
    WittVec times(std::uint64_t k) const;

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<PElem> entries_;
};

enum class WittOp { Add, Mul };
WittVec witt_arith(WittOp op, const WittVec& a, const WittVec& b);

WittVec verschiebung(const WittVec& x, std::size_t target_length);
// Entrywise p-th power; the Frobenius of W(k) for perfect k.
WittVec frobenius_lift(const WittVec& x);

}  // namespace artin
