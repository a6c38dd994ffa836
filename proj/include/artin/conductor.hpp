#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/character.hpp"
#include "artin/perfection.hpp"
#include "artin/rational.hpp"
#include "artin/ramification.hpp"

namespace artin {

// e^{-1} sum_{i>=0} |G_i| codim V^{G_i}, with e taken from the filtration.
Rational naive_artin(const Filtration& filt, const CharRep& rep);

struct ASReduction {
    LSeries reduced;
    std::int64_t swan = 0;
    // f = reduced + h^p - h.
    LSeries correction;
};

// Artin-Schreier reduction of the pole part over a perfect coefficient field.
// Throws PrecisionExhausted when the remaining series is zero to a negative
// precision.
ASReduction as_reduce(const LSeries& f);

struct StabilizationPolicy {
    std::optional<std::int64_t> start;
    std::int64_t max_level = 512;
};

struct ConductorReport {
    std::int64_t value = 0;
    std::int64_t stabilized_at = 0;
    std::map<std::int64_t, Rational> naive_by_level;
    std::vector<UpperBreak> breaks;
    Filtration filtration;
};

// Smallest level tried by default: max(4, pole order of the data + 1), or 0
// over a perfect residue field.
std::int64_t default_start_level(const BaseRing& base, const ExtSpec& ext);

// Pullback of ext to A^g_N for N = start, 2 start, ... until two consecutive
// levels give the same naive conductor. Throws NoStabilization when the
// level would exceed policy.max_level.
ConductorReport artin_conductor(const BaseRing& base, const ExtSpec& ext, const CharRep& rep,
                                const StabilizationPolicy& policy = {});

// Filtration over A^g_N at the first level where it agrees with the next.
struct StableFiltration {
    Filtration filtration;
    std::int64_t level = 0;
};
StableFiltration stable_filtration(const BaseRing& base, const ExtSpec& ext, const StabilizationPolicy& policy = {});

struct BreakFormula {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

// Naive conductor against codim V^{G_0} + sum x dim V(x).
BreakFormula break_formula_check(const Filtration& filt, const CharRep& rep);

// {"conductor", "stabilized_at", "naive_by_level", "breaks", "filtration"}.
std::string report_json(const ConductorReport& report);

}  // namespace artin
