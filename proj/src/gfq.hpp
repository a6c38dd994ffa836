#pragma once

#include <cstdint>
#include <vector>

#include "artin/fp.hpp"

namespace artin::detail {

// A finite field F_q of characteristic p, used as a pool of evaluation
// points. For p <= 2^16 it is the largest F_{p^k} with q <= 2^16, stored by
// discrete logarithms with a Zech table; larger p use F_p itself.
class EvalField {
public:
    using Elem = std::uint32_t;

    // Built on first use and cached for the life of the process.
    static const EvalField& for_prime(Coeff p);

    std::uint64_t order() const noexcept { return q_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return log_mode_ ? 1 : 1 % p_; }
    Elem from_fp(Coeff c) const;
    // The element with index i in 1..q-1; every nonzero element has one.
    Elem nonzero(std::uint64_t i) const;

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

private:
    explicit EvalField(Coeff p);

    Coeff p_;
    std::uint64_t q_ = 0;
    bool log_mode_ = false;
    // Log mode: element 0 is zero, element 1 + i is g^i.
    std::vector<std::uint32_t> log_of_code_;  // code (base-p digits) -> i
    std::vector<std::int64_t> zech_;          // i -> log(1 + g^i), -1 for zero
    Elem minus_one_ = 0;
};

// Degree of gcd(a, b) for dense coefficient vectors (index = degree).
std::size_t univariate_gcd_degree(const EvalField& k, std::vector<EvalField::Elem> a,
                                  std::vector<EvalField::Elem> b);

}  // namespace artin::detail
