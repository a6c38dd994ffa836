#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/character.hpp"
#include "artin/group.hpp"
#include "artin/perfection.hpp"
#include "artin/rational.hpp"
#include "artin/series.hpp"
#include "artin/spoly.hpp"

namespace artin {

// Coefficient field, uniformizer name and residue perfectness of the DVR an
// extension lives over: either a base ring or the target of a jet map.
struct Ground {
    FieldPtr field;
    std::string uniformizer;
    bool residue_perfect = true;
};

Ground ground_of(const BaseRing& base);
Ground ground_of(const JetMap& jet);

enum class ExtKind { ArtinSchreier, Kummer, Unramified, Eisenstein };

std::string kind_name(ExtKind kind);

// Finite Galois extension B/A given by defining data and its group.
//   ArtinSchreier: t^p - t = rhs, group Z/p acting by t -> t + k.
//   Kummer: t^n = rhs, group Z/n acting by t -> zeta^k t. The n-th roots of
//     unity are assumed to live in the residue field after an unramified
//     extension of degree root_of_unity_degree (n | p^d - 1).
//   Unramified: degree f, group Z/f.
//   Eisenstein: monogenic model A[T]/(poly), sigma(T) = action[sigma](T).
class ExtSpec {
public:
    static ExtSpec artin_schreier(Ground ground, LSeries rhs);
    static ExtSpec kummer(Ground ground, std::uint32_t n, LSeries rhs, std::uint32_t root_of_unity_degree = 1);
    static ExtSpec unramified(Ground ground, std::uint32_t degree);
    // Checks that poly is monic Eisenstein of degree |G|, that every action
    // polynomial is a root of poly and that the actions compose as the group
    // table says, all to the available precision.
    static ExtSpec eisenstein(Ground ground, SPoly poly, GroupPtr group, std::vector<SPoly> action);

    ExtKind kind() const noexcept { return kind_; }
    const Ground& ground() const noexcept { return ground_; }
    const GroupPtr& group() const noexcept { return group_; }
    const LSeries& rhs() const { return rhs_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t root_of_unity_degree() const noexcept { return root_degree_; }
    const SPoly& poly() const { return poly_; }
    const std::vector<SPoly>& action() const noexcept { return action_; }

private:
    ExtKind kind_ = ExtKind::Unramified;
    Ground ground_;
    GroupPtr group_;
    LSeries rhs_;
    std::uint32_t n_ = 1;
    std::uint32_t root_degree_ = 1;
    SPoly poly_;
    std::vector<SPoly> action_;
};

// The same extension over A^g_N: defining data pushed through the jet map.
ExtSpec pull_back(const ExtSpec& ext, const JetMap& jet);

// Lower numbering filtration G_0 >= G_1 >= ... >= G_L = 1.
struct Filtration {
    GroupPtr group;
    std::vector<Subgroup> lower;
    std::int64_t e = 1;
    std::int64_t f = 1;
    // Set when the unramified verdict may hide a trivial extension.
    bool possibly_trivial = false;

    // G_i for any i >= 0; trivial past the stored range.
    const Subgroup& at(std::int64_t i) const;
    // Indices i >= 0 with G_i != G_{i+1}.
    std::vector<std::int64_t> jumps() const;
    // v_B of the different, sum_{i>=0} (|G_i| - 1).
    std::int64_t different() const;
    // v_A of the discriminant, f * different.
    std::int64_t discriminant() const;

    friend bool operator==(const Filtration& a, const Filtration& b) {
        return a.group->same_as(*b.group) && a.lower == b.lower && a.e == b.e && a.f == b.f;
    }
};

// v_B(sigma(T) - T) for the Eisenstein kind, via the norm.
std::int64_t i_lower(const ExtSpec& ext, Elem sigma);

// v_B(poly'(T)) for the Eisenstein kind, via the norm.
std::int64_t different_by_norm(const ExtSpec& ext);

// Throws NotPerfectResidue for the Artin-Schreier kind over an imperfect
// residue field, and PrecisionExhausted when the data do not determine the
// answer.
Filtration ram_filtration(const ExtSpec& ext);

enum class HerbrandDir { Phi, Psi };
Rational herbrand_phi(const Filtration& filt, const Rational& u);
Rational herbrand_psi(const Filtration& filt, const Rational& v);
Rational herbrand(const Filtration& filt, HerbrandDir dir, const Rational& u);

struct UpperBreak {
    Rational x;
    std::int64_t dim = 0;
    friend bool operator==(const UpperBreak&, const UpperBreak&) = default;
};

// Break decomposition of V; x ascending, zero-dimensional parts omitted.
std::vector<UpperBreak> upper_breaks(const Filtration& filt, const CharRep& rep);

// Filtration of B over the fixed field of H; the group of the result is
// h.group.
Filtration restrict_filtration(const Filtration& filt, const SubgroupView& h);

}  // namespace artin
