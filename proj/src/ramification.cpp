#include "artin/ramification.hpp"

#include <algorithm>
#include <numeric>

#include "artin/conductor.hpp"
#include "artin/errors.hpp"

namespace artin {

Ground ground_of(const BaseRing& base) { return {base.field(), base.uniformizer(), base.residue_perfect()}; }

Ground ground_of(const JetMap& jet) { return {jet.target(), jet.base().uniformizer(), true}; }

std::string kind_name(ExtKind kind) {
    switch (kind) {
        case ExtKind::ArtinSchreier: return "artin-schreier";
        case ExtKind::Kummer: return "kummer";
        case ExtKind::Unramified: return "unramified";
        case ExtKind::Eisenstein: return "eisenstein";
    }
    return "?";
}

namespace {

void require_over(const Ground& g, const LSeries& f) {
    if (!f.field()->same_as(*g.field) || f.uniformizer() != g.uniformizer)
        throw FieldMismatch("defining data is not over the extension's base");
}

void require_over(const Ground& g, const SPoly& f) {
    if (!f.field()->same_as(*g.field) || f.uniformizer() != g.uniformizer)
        throw FieldMismatch("defining polynomial is not over the extension's base");
}

SPoly generator(const Ground& g) { return SPoly::variable(g.field, g.uniformizer); }

}  // namespace

ExtSpec ExtSpec::artin_schreier(Ground ground, LSeries rhs) {
    require_over(ground, rhs);
    ExtSpec e;
    e.kind_ = ExtKind::ArtinSchreier;
    e.group_ = FiniteGroup::cyclic(ground.field->p());
    e.n_ = ground.field->p();
    e.ground_ = std::move(ground);
    e.rhs_ = std::move(rhs);
    return e;
}

ExtSpec ExtSpec::kummer(Ground ground, std::uint32_t n, LSeries rhs, std::uint32_t root_of_unity_degree) {
    require_over(ground, rhs);
    const Coeff p = ground.field->p();
    if (n < 2) throw InvalidArgument("Kummer degree must be at least 2");
    if (n % p == 0) throw InvalidArgument("Kummer degree must be prime to p");
    if (root_of_unity_degree == 0) throw InvalidArgument("root-of-unity degree must be positive");
    std::uint64_t pd = 1;
    for (std::uint32_t i = 0; i < root_of_unity_degree; ++i) pd = pd * p % n;
    if (pd != 1 % n)
        throw InvalidArgument("n-th roots of unity need a residue extension of degree divisible by the order of p mod n");
    if (!rhs.has_valuation()) throw InvalidArgument("Kummer right-hand side must be nonzero");
    ExtSpec e;
    e.kind_ = ExtKind::Kummer;
    e.group_ = FiniteGroup::cyclic(n);
    e.n_ = n;
    e.root_degree_ = root_of_unity_degree;
    e.ground_ = std::move(ground);
    e.rhs_ = std::move(rhs);
    return e;
}

ExtSpec ExtSpec::unramified(Ground ground, std::uint32_t degree) {
    if (degree == 0) throw InvalidArgument("unramified degree must be positive");
    ExtSpec e;
    e.kind_ = ExtKind::Unramified;
    e.group_ = FiniteGroup::cyclic(degree);
    e.n_ = degree;
    e.ground_ = std::move(ground);
    return e;
}

ExtSpec ExtSpec::eisenstein(Ground ground, SPoly poly, GroupPtr group, std::vector<SPoly> action) {
    require_over(ground, poly);
    if (!poly.is_monic()) throw InvalidArgument("Eisenstein polynomial must be monic");
    const int deg = poly.degree();
    if (deg < 1 || static_cast<std::uint32_t>(deg) != group->order())
        throw InvalidArgument("Eisenstein degree must equal the group order");
    for (int i = 0; i < deg; ++i) {
        const LSeries c = poly.coeff(i);
        if (i == 0 ? !(c.has_valuation() && c.valuation() == 1) : c.order_bound() < 1)
            throw InvalidArgument("polynomial is not Eisenstein");
    }
    if (action.size() != group->order()) throw InvalidArgument("one action polynomial per group element is needed");
    for (SPoly& a : action) {
        require_over(ground, a);
        a = a.mod(poly);
    }
    const SPoly t = generator(ground);
    if (!(action[0] - t).is_zero_to_precision()) throw InvalidArgument("identity must act trivially");
    for (Elem s = 0; s < group->order(); ++s)
        if (!poly.compose_mod(action[s], poly).is_zero_to_precision())
            throw InvalidArgument("action image is not a root of the polynomial");
    // sigma(tau(T)) = Q_tau(Q_sigma(T)).
    for (Elem s = 0; s < group->order(); ++s)
        for (Elem r = 0; r < group->order(); ++r)
            if (!(action[r].compose_mod(action[s], poly) - action[group->mul(s, r)]).is_zero_to_precision())
                throw InvalidArgument("action does not respect the group law");
    ExtSpec e;
    e.kind_ = ExtKind::Eisenstein;
    e.group_ = std::move(group);
    e.n_ = static_cast<std::uint32_t>(deg);
    e.ground_ = std::move(ground);
    e.poly_ = std::move(poly);
    e.action_ = std::move(action);
    return e;
}

ExtSpec pull_back(const ExtSpec& ext, const JetMap& jet) {
    const Ground& g = ext.ground();
    if (!g.field->same_as(*jet.base().field()) || g.uniformizer != jet.base().uniformizer())
        throw FieldMismatch("extension is not over the jet's base");
    Ground target = ground_of(jet);
    switch (ext.kind()) {
        case ExtKind::ArtinSchreier: return ExtSpec::artin_schreier(target, apply_jet(jet, ext.rhs()));
        case ExtKind::Kummer:
            return ExtSpec::kummer(target, ext.n(), apply_jet(jet, ext.rhs()), ext.root_of_unity_degree());
        case ExtKind::Unramified: return ExtSpec::unramified(target, ext.n());
        case ExtKind::Eisenstein: {
            std::vector<SPoly> action;
            for (const SPoly& a : ext.action()) action.push_back(apply_jet(jet, a));
            return ExtSpec::eisenstein(target, apply_jet(jet, ext.poly()), ext.group(), std::move(action));
        }
    }
    throw UnsupportedKind("unknown extension kind");
}

const Subgroup& Filtration::at(std::int64_t i) const {
    if (i < 0) throw InvalidArgument("negative ramification index");
    if (static_cast<std::size_t>(i) >= lower.size()) return lower.back();
    return lower[static_cast<std::size_t>(i)];
}

std::vector<std::int64_t> Filtration::jumps() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i + 1 < lower.size(); ++i)
        if (lower[i] != lower[i + 1]) out.push_back(static_cast<std::int64_t>(i));
    return out;
}

std::int64_t Filtration::different() const {
    std::int64_t d = 0;
    for (const Subgroup& g : lower) d += static_cast<std::int64_t>(g.size()) - 1;
    return d;
}

std::int64_t Filtration::discriminant() const { return f * different(); }

std::int64_t i_lower(const ExtSpec& ext, Elem sigma) {
    if (ext.kind() != ExtKind::Eisenstein) throw InvalidArgument("i_lower needs an Eisenstein model");
    if (sigma == 0 || sigma >= ext.group()->order()) throw InvalidArgument("i_lower needs a nontrivial element");
    LSeries norm = norm_mod(ext.action()[sigma] - generator(ext.ground()), ext.poly());
    if (!norm.has_valuation()) throw PrecisionExhausted("norm of sigma(T) - T vanishes to precision");
    return norm.valuation();
}

std::int64_t different_by_norm(const ExtSpec& ext) {
    if (ext.kind() != ExtKind::Eisenstein) throw InvalidArgument("different_by_norm needs an Eisenstein model");
    LSeries norm = norm_mod(ext.poly().derivative(), ext.poly());
    if (!norm.has_valuation()) throw PrecisionExhausted("norm of the derivative vanishes to precision");
    return norm.valuation();
}

namespace {

Filtration make(const GroupPtr& g, std::vector<Subgroup> lower, std::int64_t e, std::int64_t f) {
    if (lower.empty() || lower.back().size() != 1) lower.push_back(g->trivial_subgroup());
    return {g, std::move(lower), e, f, false};
}

}  // namespace

Filtration ram_filtration(const ExtSpec& ext) {
    const GroupPtr& g = ext.group();
    const std::int64_t order = g->order();
    switch (ext.kind()) {
        case ExtKind::Unramified: return make(g, {}, 1, order);
        case ExtKind::ArtinSchreier: {
            if (!ext.ground().residue_perfect)
                throw NotPerfectResidue("Artin-Schreier filtration needs a perfect residue field; pull back first");
            ASReduction red = as_reduce(ext.rhs());
            if (red.swan == 0) {
                Filtration f = make(g, {}, 1, order);
                f.possibly_trivial = true;
                return f;
            }
            return make(g, std::vector<Subgroup>(static_cast<std::size_t>(red.swan) + 1, g->whole()), order, 1);
        }
        case ExtKind::Kummer: {
            const std::int64_t n = ext.n();
            const std::int64_t v = ((ext.rhs().valuation() % n) + n) % n;
            const std::int64_t gcd = std::gcd(n, v);
            if (gcd == n) return make(g, {}, 1, n);
            return make(g, {g->generated({static_cast<Elem>(gcd)})}, n / gcd, gcd);
        }
        case ExtKind::Eisenstein: {
            std::vector<std::int64_t> depth(g->order(), 0);
            std::int64_t top = 0;
            for (Elem s = 1; s < g->order(); ++s) {
                depth[s] = i_lower(ext, s);
                top = std::max(top, depth[s]);
            }
            std::vector<Subgroup> lower;
            for (std::int64_t i = 0; i < top; ++i) {
                Subgroup gi{0};
                for (Elem s = 1; s < g->order(); ++s)
                    if (depth[s] >= i + 1) gi.push_back(s);
                lower.push_back(std::move(gi));
            }
            return make(g, std::move(lower), order, 1);
        }
    }
    throw UnsupportedKind("unknown extension kind");
}

Rational herbrand_phi(const Filtration& filt, const Rational& u) {
    if (u < 0) throw InvalidArgument("Herbrand function argument must be nonnegative");
    const std::int64_t g0 = static_cast<std::int64_t>(filt.at(0).size());
    const std::int64_t last = static_cast<std::int64_t>(filt.lower.size()) - 1;
    Rational acc = 0, rest = u;
    for (std::int64_t k = 1; rest > 0; ++k) {
        const Rational slope(static_cast<std::int64_t>(filt.at(k).size()), g0);
        if (k >= last) return acc + rest * slope;
        const Rational step = std::min(rest, Rational(1));
        acc += step * slope;
        rest -= step;
    }
    return acc;
}

Rational herbrand_psi(const Filtration& filt, const Rational& v) {
    if (v < 0) throw InvalidArgument("Herbrand function argument must be nonnegative");
    const std::int64_t g0 = static_cast<std::int64_t>(filt.at(0).size());
    const std::int64_t last = static_cast<std::int64_t>(filt.lower.size()) - 1;
    Rational rest = v;
    for (std::int64_t k = 1;; ++k) {
        const Rational slope(static_cast<std::int64_t>(filt.at(k).size()), g0);
        if (k >= last || rest <= slope) return Rational(k - 1) + rest / slope;
        rest -= slope;
    }
}

Rational herbrand(const Filtration& filt, HerbrandDir dir, const Rational& u) {
    return dir == HerbrandDir::Phi ? herbrand_phi(filt, u) : herbrand_psi(filt, u);
}

std::vector<UpperBreak> upper_breaks(const Filtration& filt, const CharRep& rep) {
    if (!rep.group()->same_as(*filt.group)) throw InvalidArgument("representation of a different group");
    std::vector<UpperBreak> out;
    const std::int64_t base = invariants_dim(rep, filt.at(1));
    if (base > 0) out.push_back({Rational(0), base});
    for (std::int64_t i : filt.jumps()) {
        if (i < 1) continue;
        const std::int64_t d = invariants_dim(rep, filt.at(i + 1)) - invariants_dim(rep, filt.at(i));
        if (d > 0) out.push_back({herbrand_phi(filt, Rational(i)), d});
    }
    return out;
}

Filtration restrict_filtration(const Filtration& filt, const SubgroupView& h) {
    std::vector<Elem> local(filt.group->order(), filt.group->order());
    for (std::size_t i = 0; i < h.embedding.size(); ++i) local.at(h.embedding[i]) = static_cast<Elem>(i);
    std::vector<Subgroup> lower;
    for (const Subgroup& gi : filt.lower) {
        Subgroup hi;
        for (Elem x : gi)
            if (local[x] != filt.group->order()) hi.push_back(local[x]);
        std::sort(hi.begin(), hi.end());
        lower.push_back(std::move(hi));
    }
    const std::int64_t e = static_cast<std::int64_t>(lower.front().size());
    const std::int64_t f = static_cast<std::int64_t>(h.embedding.size()) / e;
    while (lower.size() > 1 && lower[lower.size() - 2].size() == 1) lower.pop_back();
    return {h.group, std::move(lower), e, f, filt.possibly_trivial};
}

}  // namespace artin
