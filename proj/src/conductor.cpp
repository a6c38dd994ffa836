#include "artin/conductor.hpp"

#include "json.hpp"

#include "artin/errors.hpp"

namespace artin {

Rational naive_artin(const Filtration& filt, const CharRep& rep) {
    if (!rep.group()->same_as(*filt.group)) throw InvalidArgument("representation of a different group");
    std::int64_t sum = 0;
    for (const Subgroup& gi : filt.lower)
        sum += static_cast<std::int64_t>(gi.size()) * (rep.dim() - invariants_dim(rep, gi));
    return Rational(sum, filt.e);
}

ASReduction as_reduce(const LSeries& f) {
    const Coeff p = f.field()->p();
    LSeries cur = f;
    LSeries h = LSeries::zero(f.field(), f.uniformizer());
    while (true) {
        if (!cur.has_valuation()) {
            if (cur.is_zero_to_precision() && cur.prec() < 0)
                throw PrecisionExhausted("Artin-Schreier reduction ran out of precision");
            return {cur, 0, h};
        }
        const std::int64_t v = cur.valuation();
        if (v >= 0) return {cur, 0, h};
        const std::int64_t j = -v;
        if (j % p != 0) return {cur, j, h};
        // a y^{-j} = (a^{1/p} y^{-j/p})^p, so subtract that power and add its root back.
        LSeries root = LSeries::monomial(cur.leading_coefficient().frobenius(-1), -j / static_cast<std::int64_t>(p),
                                         f.uniformizer());
        cur = cur - LSeries::monomial(cur.leading_coefficient(), v, f.uniformizer()) + root;
        h = h + root;
    }
}

namespace {

std::int64_t pole_order(const LSeries& f) {
    return f.has_valuation() && f.valuation() < 0 ? -f.valuation() : 0;
}

std::int64_t pole_order(const SPoly& f) {
    std::int64_t m = 0;
    for (const LSeries& c : f.coefficients()) m = std::max(m, pole_order(c));
    return m;
}

std::int64_t data_pole_order(const ExtSpec& ext) {
    switch (ext.kind()) {
        case ExtKind::ArtinSchreier:
        case ExtKind::Kummer: return pole_order(ext.rhs());
        case ExtKind::Unramified: return 0;
        case ExtKind::Eisenstein: {
            std::int64_t m = pole_order(ext.poly());
            for (const SPoly& a : ext.action()) m = std::max(m, pole_order(a));
            return m;
        }
    }
    return 0;
}

void require_base(const BaseRing& base, const ExtSpec& ext) {
    if (!ext.ground().field->same_as(*base.field()) || ext.ground().uniformizer != base.uniformizer())
        throw FieldMismatch("extension is not over the given base");
}

// Runs `round` at N = start, 2 start, ... until two determined rounds agree.
// Returns the earlier level of the agreeing pair.
template <class Round, class Same>
std::int64_t stabilize(const BaseRing& base, std::int64_t start, std::int64_t max_level, Round round, Same same) {
    if (base.residue_perfect()) {
        round(0);
        return 0;
    }
    std::optional<std::int64_t> prev;
    for (std::int64_t n = start; n <= max_level; n = std::max<std::int64_t>(2 * n, 1)) {
        bool ok = true;
        try {
            round(n);
        } catch (const PrecisionExhausted&) {
            ok = false;
        }
        if (ok && prev && same(*prev, n)) return *prev;
        prev = ok ? std::optional<std::int64_t>(n) : std::nullopt;
    }
    throw NoStabilization("no two consecutive levels agreed up to level " + std::to_string(max_level));
}

}  // namespace

std::int64_t default_start_level(const BaseRing& base, const ExtSpec& ext) {
    if (base.residue_perfect()) return 0;
    return std::max<std::int64_t>(4, data_pole_order(ext) + 1);
}

ConductorReport artin_conductor(const BaseRing& base, const ExtSpec& ext, const CharRep& rep,
                                const StabilizationPolicy& policy) {
    require_base(base, ext);
    if (!rep.group()->same_as(*ext.group())) throw InvalidArgument("representation of a different group");
    const std::int64_t start = policy.start.value_or(default_start_level(base, ext));
    if (start < 0) throw InvalidArgument("starting level must be nonnegative");
    ConductorReport report;
    std::map<std::int64_t, Filtration> filts;
    auto round = [&](std::int64_t n) {
        Filtration f = ram_filtration(pull_back(ext, universal_jet(base, n)));
        report.naive_by_level[n] = naive_artin(f, rep);
        filts.emplace(n, std::move(f));
    };
    auto same = [&](std::int64_t a, std::int64_t b) { return report.naive_by_level[a] == report.naive_by_level[b]; };
    const std::int64_t at = stabilize(base, start, policy.max_level, round, same);
    const Rational value = report.naive_by_level.at(at);
    if (value.denominator() != 1 || value < 0)
        throw std::logic_error("conductor " + to_string(value) + " is not a nonnegative integer");
    report.value = value.numerator();
    report.stabilized_at = at;
    report.filtration = filts.at(at);
    report.breaks = upper_breaks(report.filtration, rep);
    return report;
}

StableFiltration stable_filtration(const BaseRing& base, const ExtSpec& ext, const StabilizationPolicy& policy) {
    require_base(base, ext);
    const std::int64_t start = policy.start.value_or(default_start_level(base, ext));
    std::map<std::int64_t, Filtration> filts;
    auto round = [&](std::int64_t n) { filts.insert_or_assign(n, ram_filtration(pull_back(ext, universal_jet(base, n)))); };
    auto same = [&](std::int64_t a, std::int64_t b) { return filts.at(a) == filts.at(b); };
    const std::int64_t at = stabilize(base, start, policy.max_level, round, same);
    return {filts.at(at), at};
}

BreakFormula break_formula_check(const Filtration& filt, const CharRep& rep) {
    BreakFormula out;
    out.lhs = naive_artin(filt, rep);
    out.rhs = Rational(rep.dim() - invariants_dim(rep, filt.at(0)));
    for (const UpperBreak& b : upper_breaks(filt, rep)) out.rhs += b.x * b.dim;
    out.equal = out.lhs == out.rhs;
    return out;
}

std::string report_json(const ConductorReport& report) {
    nlohmann::ordered_json j;
    j["conductor"] = report.value;
    j["stabilized_at"] = report.stabilized_at;
    nlohmann::ordered_json levels = nlohmann::ordered_json::object();
    for (const auto& [n, v] : report.naive_by_level) levels[std::to_string(n)] = to_string(v);
    j["naive_by_level"] = levels;
    nlohmann::ordered_json breaks = nlohmann::ordered_json::array();
    for (const UpperBreak& b : report.breaks)
        breaks.push_back({b.x.numerator(), b.x.denominator(), b.dim});
    j["breaks"] = breaks;
    nlohmann::ordered_json filt = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < report.filtration.lower.size(); ++i)
        filt.push_back({i, report.filtration.lower[i].size()});
    j["filtration"] = filt;
    return j.dump();
}

}  // namespace artin
