#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "artin/conductor.hpp"

namespace artin {

// Sectioned key-value file:
//
//   [base]            p, pbasis (list of names), uniformizer
//   [extension]       kind = "artin-schreier" | "kummer" | "unramified" | "eisenstein"
//                     rhs, n, root_of_unity_degree, degree, poly, action,
//                     group, table, series_precision
//   [representation]  character = "trivial" | "regular" | "linear" | "values",
//                     exponents, order, values
//   [options]         precision, max_precision
//
// Values are integers (or a/b with b dividing a), "strings" and [lists].
// '#' starts a comment. Unknown sections and keys are errors.
struct SpecFile {
    BaseRing base;
    ExtSpec extension;
    std::optional<CharRep> representation;
    StabilizationPolicy policy;
};

// Throws ParseError (with line and column) and UnsupportedKind.
SpecFile parse_spec(std::string_view text);
SpecFile load_spec(const std::string& path);

// Filtration, Herbrand values at the jumps, different and discriminant.
std::string ram_json(const StableFiltration& sf, const ExtSpec& ext);

}  // namespace artin
