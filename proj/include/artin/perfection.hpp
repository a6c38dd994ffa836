#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/series.hpp"
#include "artin/spoly.hpp"

namespace artin {

// Equal-characteristic complete DVR F_p(T)((y)) with residue p-basis lifts T.
// r = |T| = 0 means the residue field F_p is perfect.
class BaseRing {
public:
    static BaseRing make(Coeff p, std::vector<std::string> pbasis, std::string uniformizer);
    // "F_2(x)[[y]]", "F_3(x1,x2)((y))", "F_5[[t]]", "F_3((y))".
    static BaseRing parse(std::string_view text);

    Coeff p() const noexcept { return field_->p(); }
    const std::vector<std::string>& pbasis() const noexcept { return field_->names(); }
    const std::string& uniformizer() const noexcept { return uniformizer_; }
    // F_p(T): coefficients of elements of the fraction field K.
    const FieldPtr& field() const noexcept { return field_; }
    bool residue_perfect() const noexcept { return field_->nvars() == 0; }

    LSeries parse_element(std::string_view text) const;
    std::string to_string() const;

private:
    FieldPtr field_;
    std::string uniformizer_;
};

// Truncation at level N of the generic residual perfection: each basis lift
// t goes to tbar + sum_{j=1..N} u_{t,j} y^j, known modulo y^{N+1}.
class JetMap {
public:
    const BaseRing& base() const noexcept { return base_; }
    std::int64_t level() const noexcept { return level_; }
    const FieldPtr& target() const noexcept { return target_; }
    const std::vector<LSeries>& images() const noexcept { return images_; }
    const std::string& bar_name(std::size_t t) const { return bar_names_.at(t); }
    // Name of u_{t,j}, 1 <= j <= N.
    const std::string& u_name(std::size_t t, std::int64_t j) const;

    friend JetMap universal_jet(const BaseRing& base, std::int64_t level);
    friend struct JetExtender;

private:
    BaseRing base_;
    std::int64_t level_ = 0;
    FieldPtr target_;
    std::vector<LSeries> images_;
    std::vector<std::string> bar_names_;
    std::vector<std::vector<std::string>> u_names_;
};

JetMap universal_jet(const BaseRing& base, std::int64_t level);

// Image of f (coefficients rational in the basis variables) in A^g_N.
LSeries apply_jet(const JetMap& jet, const LSeries& f);

// Coefficientwise image of a polynomial over K.
SPoly apply_jet(const JetMap& jet, const SPoly& f);

// A ramification-index-one extension of the base: new p-basis lifts and/or
// a finite etale algebra A[t]/(poly) with poly monic over A.
struct JetExtension {
    std::vector<std::string> new_pbasis;
    std::optional<SPoly> etale;
    bool residually_inseparable = false;
};

// Jet map of the extended base. The old target is a prefix of the new one and
// old images are unchanged. Throws NotResiduallySeparable when the extension
// is declared inseparable or the pulled-back etale discriminant is not a unit.
JetMap extend_jet(const JetMap& jet, const JetExtension& ext);

}  // namespace artin
