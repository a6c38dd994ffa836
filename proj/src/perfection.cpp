#include "artin/perfection.hpp"

#include <algorithm>
#include <regex>

namespace artin {

BaseRing BaseRing::make(Coeff p, std::vector<std::string> pbasis, std::string uniformizer) {
    if (std::find(pbasis.begin(), pbasis.end(), uniformizer) != pbasis.end())
        throw InvalidArgument("uniformizer '" + uniformizer + "' clashes with a p-basis name");
    BaseRing b;
    b.field_ = Field::make(p, std::move(pbasis));
    if (!std::regex_match(uniformizer, std::regex("[A-Za-z_][A-Za-z0-9_]*")))
        throw InvalidArgument("invalid uniformizer name '" + uniformizer + "'");
    b.uniformizer_ = std::move(uniformizer);
    return b;
}

BaseRing BaseRing::parse(std::string_view text) {
    static const std::regex re(R"(\s*F_(\d+)\s*(?:\(([^()]*)\))?\s*(?:\[\[\s*(\w+)\s*\]\]|\(\(\s*(\w+)\s*\)\))\s*)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, re))
        throw ParseError("expected a base like F_2(x)[[y]] or F_3((y))", 1, 1);
    Coeff p = static_cast<Coeff>(std::stoul(m[1].str()));
    std::vector<std::string> names;
    if (m[2].matched) {
        std::string list = m[2].str();
        std::size_t start = 0;
        while (start <= list.size()) {
            std::size_t comma = list.find(',', start);
            std::string name = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (!name.empty()) names.push_back(name);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    std::string u = m[3].matched ? m[3].str() : m[4].str();
    try {
        return make(p, std::move(names), std::move(u));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

LSeries BaseRing::parse_element(std::string_view text) const { return LSeries::parse(field_, uniformizer_, text); }

std::string BaseRing::to_string() const {
    std::string s = "F_" + std::to_string(p());
    if (!pbasis().empty()) {
        s += "(";
        for (std::size_t i = 0; i < pbasis().size(); ++i) s += (i ? "," : "") + pbasis()[i];
        s += ")";
    }
    return s + "[[" + uniformizer_ + "]]";
}

const std::string& JetMap::u_name(std::size_t t, std::int64_t j) const {
    if (j < 1 || j > level_) throw InvalidArgument("u index outside the truncation level");
    return u_names_.at(t).at(static_cast<std::size_t>(j - 1));
}

namespace {

std::string fresh_u_name(const std::string& t, std::int64_t j, bool single) {
    return single ? "u" + std::to_string(j) : "u_" + t + "_" + std::to_string(j);
}

LSeries jet_image(const FieldPtr& target, const std::string& uniformizer, const std::string& bar,
                  const std::vector<std::string>& us, std::int64_t level) {
    std::vector<PElem> cs{PElem::variable(target, bar)};
    for (const std::string& u : us) cs.push_back(PElem::variable(target, u));
    return LSeries::from_coefficients(target, uniformizer, 0, std::move(cs), level + 1);
}

}  // namespace

JetMap universal_jet(const BaseRing& base, std::int64_t level) {
    if (level < 0) throw InvalidArgument("jet level must be nonnegative");
    JetMap j;
    j.base_ = base;
    j.level_ = level;
    const auto& T = base.pbasis();
    const bool single = T.size() == 1;
    std::vector<std::string> names;
    for (const std::string& t : T) {
        j.bar_names_.push_back(t + "bar");
        names.push_back(t + "bar");
    }
    j.u_names_.resize(T.size());
    for (std::int64_t n = 1; n <= level; ++n) {
        for (std::size_t t = 0; t < T.size(); ++t) {
            j.u_names_[t].push_back(fresh_u_name(T[t], n, single));
            names.push_back(j.u_names_[t].back());
        }
    }
    j.target_ = Field::make(base.p(), names);
    for (std::size_t t = 0; t < T.size(); ++t)
        j.images_.push_back(jet_image(j.target_, base.uniformizer(), j.bar_names_[t], j.u_names_[t], level));
    return j;
}

LSeries apply_jet(const JetMap& jet, const LSeries& f) {
    if (!f.field()->same_as(*jet.base().field()) || f.uniformizer() != jet.base().uniformizer())
        throw FieldMismatch("element is not over the jet's base");
    const FieldPtr& target = jet.target();
    const std::string& y = jet.base().uniformizer();
    if (!f.has_valuation()) return LSeries::zero(target, y, f.prec());
    LSeries acc = LSeries::zero(target, y);
    const std::int64_t end = f.is_exact() ? f.support_end() : f.prec();
    for (std::int64_t i = f.valuation(); i < end; ++i) {
        const PElem c = f.coefficient(i);
        if (c.is_zero()) continue;
        LSeries term = compose_rational(c, jet.images(), target, y);
        acc = acc + term.shifted(i);
    }
    return acc.truncated(f.prec());
}

SPoly apply_jet(const JetMap& jet, const SPoly& f) {
    std::vector<LSeries> cs;
    for (const LSeries& c : f.coefficients()) cs.push_back(apply_jet(jet, c));
    return SPoly::from_coefficients(jet.target(), jet.base().uniformizer(), std::move(cs));
}

struct JetExtender {
    static JetMap run(const JetMap& jet, const JetExtension& ext) {
        if (ext.residually_inseparable)
            throw NotResiduallySeparable("extension has an inseparable residue extension");
        if (ext.etale) {
            const SPoly& poly = *ext.etale;
            if (!poly.is_monic()) throw InvalidArgument("etale descriptor must be monic");
            LSeries d = discriminant(apply_jet(jet, poly));
            if (!d.has_valuation() || d.valuation() != 0)
                throw NotResiduallySeparable("pulled-back discriminant is not a unit");
        }
        if (ext.new_pbasis.empty()) return jet;
        JetMap out = jet;
        std::vector<std::string> pbasis = jet.base_.pbasis();
        pbasis.insert(pbasis.end(), ext.new_pbasis.begin(), ext.new_pbasis.end());
        out.base_ = BaseRing::make(jet.base_.p(), pbasis, jet.base_.uniformizer());
        std::vector<std::string> added;
        for (const std::string& t : ext.new_pbasis) {
            out.bar_names_.push_back(t + "bar");
            added.push_back(t + "bar");
            out.u_names_.emplace_back();
            for (std::int64_t n = 1; n <= jet.level_; ++n) {
                out.u_names_.back().push_back(fresh_u_name(t, n, false));
                added.push_back(out.u_names_.back().back());
            }
        }
        out.target_ = jet.target_->extended(added);
        out.images_.clear();
        for (const LSeries& im : jet.images_) out.images_.push_back(im.embedded(out.target_));
        for (std::size_t t = jet.images_.size(); t < pbasis.size(); ++t)
            out.images_.push_back(jet_image(out.target_, out.base_.uniformizer(), out.bar_names_[t],
                                            out.u_names_[t], jet.level_));
        return out;
    }
};

JetMap extend_jet(const JetMap& jet, const JetExtension& ext) { return JetExtender::run(jet, ext); }

}  // namespace artin
