#pragma once

#include <cstdint>

#include "artin/errors.hpp"

namespace artin {

using Coeff = std::uint32_t;
using Exp = std::uint32_t;

// Residues mod a small prime p, stored canonically in [0, p).
namespace fp {

inline Coeff reduce(std::int64_t v, Coeff p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Coeff>(r < 0 ? r + p : r);
}

inline Coeff add(Coeff a, Coeff b, Coeff p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p ? s - p : s);
}

inline Coeff sub(Coeff a, Coeff b, Coeff p) {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p - b);
}

inline Coeff neg(Coeff a, Coeff p) { return a == 0 ? 0 : p - a; }

inline Coeff mul(Coeff a, Coeff b, Coeff p) {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p);
}

inline Coeff pow(Coeff a, std::uint64_t e, Coeff p) {
    std::uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return static_cast<Coeff>(r);
}

inline Coeff inv(Coeff a, Coeff p) {
    if (a % p == 0) throw DivisionByZero();
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return reduce(t, p);
}

}  // namespace fp

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace artin
