#include "artin/series.hpp"

#include <algorithm>
#include <map>

#include "artin/expr.hpp"

namespace artin {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a == LSeries::kExact || b == LSeries::kExact) return LSeries::kExact;
    return a + b;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t k) {
    if (a == LSeries::kExact) return LSeries::kExact;
    return a * k;
}

}  // namespace

LSeries LSeries::normalized(FieldPtr field, std::string uniformizer, std::int64_t start,
                            std::vector<PElem> coeffs, std::int64_t prec) {
    if (prec != kExact && start < prec && static_cast<std::int64_t>(coeffs.size()) > prec - start)
        coeffs.resize(static_cast<std::size_t>(prec - start));
    if (prec != kExact && start >= prec) coeffs.clear();
    std::size_t lo = 0, hi = coeffs.size();
    while (lo < hi && coeffs[lo].is_zero()) ++lo;
    while (hi > lo && coeffs[hi - 1].is_zero()) --hi;
    LSeries s;
    s.field_ = std::move(field);
    s.uniformizer_ = std::move(uniformizer);
    s.prec_ = prec;
    if (lo == hi) {
        s.val_ = prec == kExact ? 0 : prec;
        return s;
    }
    s.val_ = start + static_cast<std::int64_t>(lo);
    s.terms_.assign(std::make_move_iterator(coeffs.begin() + static_cast<std::ptrdiff_t>(lo)),
                    std::make_move_iterator(coeffs.begin() + static_cast<std::ptrdiff_t>(hi)));
    return s;
}

LSeries LSeries::zero(FieldPtr field, std::string uniformizer, std::int64_t prec) {
    return normalized(std::move(field), std::move(uniformizer), 0, {}, prec);
}

LSeries LSeries::constant(const PElem& c, std::string uniformizer, std::int64_t prec) {
    return monomial(c, 0, std::move(uniformizer), prec);
}

LSeries LSeries::monomial(const PElem& c, std::int64_t j, std::string uniformizer, std::int64_t prec) {
    return normalized(c.field(), std::move(uniformizer), j, {c}, prec);
}

LSeries LSeries::from_coefficients(FieldPtr field, std::string uniformizer, std::int64_t start,
                                   std::vector<PElem> coeffs, std::int64_t prec) {
    for (const PElem& c : coeffs)
        if (!c.field()->same_as(*field)) throw FieldMismatch("series coefficient over a different field");
    return normalized(std::move(field), std::move(uniformizer), start, std::move(coeffs), prec);
}

std::int64_t LSeries::valuation() const {
    if (terms_.empty()) throw UnknownValuation("valuation of a zero series is not known");
    return val_;
}

std::int64_t LSeries::order_bound() const noexcept {
    if (!terms_.empty()) return val_;
    return prec_;
}

PElem LSeries::coefficient(std::int64_t j) const {
    if (j >= prec_) throw PrecisionExhausted("coefficient beyond series precision");
    if (j < val_ || j >= support_end() || terms_.empty()) return PElem(field_);
    return terms_[static_cast<std::size_t>(j - val_)];
}

const PElem& LSeries::leading_coefficient() const {
    if (terms_.empty()) throw UnknownValuation("zero series has no leading coefficient");
    return terms_.front();
}

void LSeries::require_compatible(const LSeries& other) const {
    if (!field_ || !other.field_ || !field_->same_as(*other.field_))
        throw FieldMismatch("series over different coefficient fields");
    if (uniformizer_ != other.uniformizer_) throw FieldMismatch("series in different uniformizers");
}

LSeries LSeries::operator-() const {
    LSeries r = *this;
    for (PElem& c : r.terms_) c = -c;
    return r;
}

namespace {

LSeries add_impl(const LSeries& a, const LSeries& b, bool subtract) {
    const std::int64_t prec = std::min(a.prec(), b.prec());
    std::int64_t lo = std::min(a.order_bound(), b.order_bound());
    std::int64_t hi = std::max(a.has_valuation() ? a.support_end() : lo,
                               b.has_valuation() ? b.support_end() : lo);
    hi = std::min(hi, prec);
    std::vector<PElem> out;
    if (hi > lo) {
        out.reserve(static_cast<std::size_t>(hi - lo));
        for (std::int64_t j = lo; j < hi; ++j) {
            PElem x = a.coefficient(j), y = b.coefficient(j);
            out.push_back(subtract ? x - y : x + y);
        }
    }
    return LSeries::from_coefficients(a.field(), a.uniformizer(), lo, std::move(out), prec);
}

}  // namespace

LSeries operator+(const LSeries& a, const LSeries& b) {
    a.require_compatible(b);
    return add_impl(a, b, false);
}

LSeries operator-(const LSeries& a, const LSeries& b) {
    a.require_compatible(b);
    return add_impl(a, b, true);
}

LSeries operator*(const LSeries& a, const LSeries& b) {
    a.require_compatible(b);
    if (a.is_exact_zero() || b.is_exact_zero()) return LSeries::zero(a.field_, a.uniformizer_);
    const std::int64_t prec =
        std::min(sat_add(a.prec_, b.order_bound()), sat_add(b.prec_, a.order_bound()));
    if (!a.has_valuation() || !b.has_valuation()) return LSeries::zero(a.field_, a.uniformizer_, prec);
    const std::int64_t start = a.val_ + b.val_;
    std::int64_t len = static_cast<std::int64_t>(a.terms_.size() + b.terms_.size()) - 1;
    if (prec != LSeries::kExact) len = std::min(len, prec - start);
    std::vector<PElem> out;
    if (len > 0) {
        out.assign(static_cast<std::size_t>(len), PElem(a.field_));
        for (std::size_t i = 0; i < a.terms_.size() && static_cast<std::int64_t>(i) < len; ++i) {
            for (std::size_t k = 0; k < b.terms_.size() && static_cast<std::int64_t>(i + k) < len; ++k)
                out[i + k] = out[i + k] + a.terms_[i] * b.terms_[k];
        }
    }
    return LSeries::normalized(a.field_, a.uniformizer_, start, std::move(out), prec);
}

LSeries operator/(const LSeries& a, const LSeries& b) { return div(a, b); }

bool operator==(const LSeries& a, const LSeries& b) {
    if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
    return a.field_->same_as(*b.field_) && a.uniformizer_ == b.uniformizer_ && a.prec_ == b.prec_ &&
           a.val_ == b.val_ && a.terms_ == b.terms_;
}

LSeries div(const LSeries& f, const LSeries& g, std::optional<std::int64_t> cap) {
    f.require_compatible(g);
    if (g.is_exact_zero()) throw DivisionByZero();
    if (g.is_zero_to_precision()) throw UnknownValuation("divisor is zero to precision");
    const std::int64_t vg = g.valuation();
    const PElem ginv = g.leading_coefficient().inverse();
    if (f.is_exact_zero()) return f;
    const bool monomial_divisor = g.is_exact() && g.support_end() == vg + 1;
    if (monomial_divisor) {
        LSeries q = f.shifted(-vg).scaled(ginv);
        return cap ? q.truncated(*cap) : q;
    }
    const std::int64_t rel_g = g.is_exact() ? LSeries::kExact : g.prec() - vg;
    if (f.is_zero_to_precision()) {
        std::int64_t prec = f.prec() - vg;
        if (cap) prec = std::min(prec, *cap);
        return LSeries::zero(f.field(), f.uniformizer(), prec);
    }
    const std::int64_t vf = f.valuation();
    const std::int64_t rel_f = f.is_exact() ? LSeries::kExact : f.prec() - vf;
    std::int64_t prec = sat_add(vf - vg, std::min(rel_f, rel_g));
    if (cap) prec = std::min(prec, *cap);
    if (prec == LSeries::kExact)
        throw InvalidArgument("exact quotient by a non-monomial series needs a precision cap");
    const std::int64_t start = vf - vg;
    const std::int64_t n = prec - start;
    std::vector<PElem> q;
    if (n > 0) {
        q.reserve(static_cast<std::size_t>(n));
        const std::int64_t gsize = g.support_end() - vg;
        for (std::int64_t k = 0; k < n; ++k) {
            PElem acc = vf + k < f.support_end() ? f.coefficient(vf + k) : PElem(f.field());
            for (std::int64_t i = 1; i <= std::min(k, gsize - 1); ++i) {
                const PElem gi = g.coefficient(vg + i);
                if (!gi.is_zero()) acc = acc - gi * q[static_cast<std::size_t>(k - i)];
            }
            q.push_back(acc * ginv);
        }
    }
    return LSeries::from_coefficients(f.field(), f.uniformizer(), start, std::move(q), prec);
}

LSeries ser_arith(SeriesOp op, const LSeries& f, const LSeries& g, std::optional<std::int64_t> cap) {
    switch (op) {
    case SeriesOp::Add:
        return f + g;
    case SeriesOp::Sub:
        return f - g;
    case SeriesOp::Mul:
        return f * g;
    case SeriesOp::Div:
        return div(f, g, cap);
    }
    throw InvalidArgument("unknown series operation");
}

bool equal_to_precision(const LSeries& f, const LSeries& g) { return !(f - g).has_valuation(); }

LSeries LSeries::scaled(const PElem& c) const {
    if (c.is_zero()) return zero(field_, uniformizer_);
    LSeries r = *this;
    for (PElem& t : r.terms_) t = t * c;
    return r;
}

LSeries LSeries::shifted(std::int64_t k) const {
    LSeries r = *this;
    r.val_ = terms_.empty() && prec_ == kExact ? 0 : val_ + k;
    r.prec_ = sat_add(prec_, k);
    return r;
}

LSeries LSeries::truncated(std::int64_t prec) const {
    if (prec >= prec_) return *this;
    return normalized(field_, uniformizer_, val_, terms_, prec);
}

LSeries LSeries::pow(std::uint64_t e) const {
    const Coeff p = field_->p();
    int frob = 0;
    while (e != 0 && e % p == 0) {
        e /= p;
        ++frob;
    }
    LSeries result = constant(PElem::constant(field_, 1), uniformizer_);
    LSeries base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    if (frob == 0) return result;
    // (sum c_j y^j + O(y^P))^p = sum c_j^p y^{pj} + O(y^{pP}) in characteristic p.
    for (int i = 0; i < frob; ++i) {
        std::vector<PElem> spread;
        const std::int64_t start = result.terms_.empty() ? 0 : result.val_ * static_cast<std::int64_t>(p);
        if (!result.terms_.empty()) {
            spread.assign((result.terms_.size() - 1) * p + 1, PElem(field_));
            for (std::size_t t = 0; t < result.terms_.size(); ++t)
                spread[t * p] = result.terms_[t].frobenius(1);
        }
        result = normalized(field_, uniformizer_, start, std::move(spread),
                            sat_mul(result.prec_, static_cast<std::int64_t>(p)));
    }
    return result;
}

LSeries LSeries::map_coefficients(FieldPtr target, const std::function<PElem(const PElem&)>& f) const {
    std::vector<PElem> out;
    out.reserve(terms_.size());
    for (const PElem& c : terms_) out.push_back(f(c));
    return from_coefficients(std::move(target), uniformizer_, val_, std::move(out), prec_);
}

LSeries LSeries::embedded(FieldPtr larger) const {
    if (larger->same_as(*field_)) return *this;
    return map_coefficients(larger, [&](const PElem& c) { return c.embedded(larger); });
}

LSeries LSeries::frobenius_coefficients(int k) const {
    return map_coefficients(field_, [k](const PElem& c) { return c.frobenius(k); });
}

std::string LSeries::to_string() const {
    std::string out;
    if (terms_.empty()) out = "0";
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        const PElem& c = terms_[t];
        if (c.is_zero()) continue;
        const std::int64_t j = val_ + static_cast<std::int64_t>(t);
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        std::string mono;
        if (j == 1)
            mono = uniformizer_;
        else if (j != 0)
            mono = uniformizer_ + "^" + std::to_string(j);
        if (mono.empty())
            out += cs;
        else if (c.is_one())
            out += mono;
        else if (cs.find(" + ") != std::string::npos)
            out += "(" + cs + ")*" + mono;
        else
            out += cs + "*" + mono;
    }
    out += " ;; prec=";
    out += prec_ == kExact ? std::string("inf") : std::to_string(prec_);
    return out;
}

namespace {

struct SeriesAlgebra {
    using value_type = LSeries;
    FieldPtr field;
    std::string uniformizer;
    std::optional<std::int64_t> cap;

    LSeries number(std::int64_t v, const expr::Node&) const {
        return LSeries::constant(PElem::constant(field, v), uniformizer);
    }
    LSeries symbol(const std::string& name, const expr::Node& n) const {
        if (name == uniformizer) return LSeries::monomial(PElem::constant(field, 1), 1, uniformizer);
        auto idx = field->index_of(name);
        if (!idx) expr::fail_at(n, "unknown variable '" + name + "'");
        return LSeries::constant(PElem::variable(field, *idx), uniformizer);
    }
    LSeries add(const LSeries& a, const LSeries& b, const expr::Node&) const { return a + b; }
    LSeries sub(const LSeries& a, const LSeries& b, const expr::Node&) const { return a - b; }
    LSeries mul(const LSeries& a, const LSeries& b, const expr::Node&) const { return a * b; }
    LSeries div(const LSeries& a, const LSeries& b, const expr::Node& n) const {
        if (b.is_exact_zero()) expr::fail_at(n, "division by zero");
        try {
            return artin::div(a, b, cap);
        } catch (const InvalidArgument&) {
            expr::fail_at(n, "division by a non-monomial needs a finite precision");
        } catch (const UnknownValuation&) {
            expr::fail_at(n, "division by a series that is zero to precision");
        }
    }
    LSeries neg(const LSeries& a, const expr::Node&) const { return -a; }
    LSeries pow(const LSeries& a, std::int64_t num, std::int64_t den, const expr::Node& n) const {
        if (den != 1) {
            int k = expr::log_p(den, field->p());
            if (k < 0) expr::fail_at(n, "exponent denominator must be a power of p");
            bool constant = a.is_exact() && a.has_valuation() && a.valuation() == 0 && a.support_end() == 1;
            if (!constant) expr::fail_at(n, "fractional powers apply to coefficients only");
            return LSeries::constant(a.leading_coefficient().pow(num).frobenius(-k), uniformizer);
        }
        if (num >= 0) return a.pow(static_cast<std::uint64_t>(num));
        LSeries one = LSeries::constant(PElem::constant(field, 1), uniformizer);
        return div(one, a.pow(static_cast<std::uint64_t>(-num)), n);
    }
};

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

LSeries LSeries::parse(FieldPtr field, std::string uniformizer, std::string_view text) {
    std::size_t marker = text.rfind(";;");
    std::int64_t prec = kExact;
    std::string_view body = text;
    if (marker != std::string_view::npos) {
        body = text.substr(0, marker);
        std::string tail = trim(text.substr(marker + 2));
        const std::size_t col = marker + 3;
        if (tail.rfind("prec=", 0) != 0) throw ParseError("expected 'prec=' after ';;'", 1, col);
        std::string value = trim(std::string_view(tail).substr(5));
        if (value == "inf") {
            prec = kExact;
        } else {
            try {
                std::size_t used = 0;
                prec = std::stoll(value, &used);
                if (used != value.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("invalid precision '" + value + "'", 1, col);
            }
        }
    }
    expr::Node ast = expr::parse(body);
    if (prec == kExact) return expr::evaluate(ast, SeriesAlgebra{field, uniformizer, std::nullopt});
    // Quotients are expanded a little beyond the target so that later
    // multiplication by negative powers of the uniformizer keeps enough terms.
    for (std::int64_t slack = 0;; slack = slack ? 2 * slack : 8) {
        LSeries s = expr::evaluate(ast, SeriesAlgebra{field, uniformizer, prec + slack});
        if (s.prec() >= prec || slack > 4096) {
            if (s.prec() < prec)
                throw ParseError("expression does not determine the requested precision", 1, 1);
            return s.truncated(prec);
        }
    }
}

Coefficients coefficients(const LSeries& f) {
    Coefficients out;
    if (!f.has_valuation()) {
        out.start = f.is_exact() ? 0 : f.prec();
        return out;
    }
    out.start = f.valuation();
    const std::int64_t end = f.is_exact() ? f.support_end() : f.prec();
    out.values.reserve(static_cast<std::size_t>(end - out.start));
    for (std::int64_t j = out.start; j < end; ++j) out.values.push_back(f.coefficient(j));
    return out;
}

namespace {

LSeries evaluate_at_series(const Poly& poly, std::span<const LSeries> images, const FieldPtr& target,
                           const std::string& uniformizer) {
    std::vector<std::map<Exp, LSeries>> powers(images.size());
    auto power = [&](std::size_t v, Exp e) -> const LSeries& {
        auto& cache = powers[v];
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        LSeries value = images[v].pow(e);
        return cache.emplace(e, std::move(value)).first->second;
    };
    LSeries acc = LSeries::zero(target, uniformizer);
    for (std::size_t t = 0; t < poly.size(); ++t) {
        auto e = poly.exponents(t);
        LSeries term = LSeries::constant(PElem::constant(target, poly.coeff(t)), uniformizer);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) term = term * power(v, e[v]);
        acc = acc + term;
    }
    return acc;
}

}  // namespace

LSeries compose_rational(const PElem& c, std::span<const LSeries> images, const FieldPtr& target,
                         const std::string& uniformizer, std::optional<std::int64_t> cap) {
    if (c.scale() != 0) throw InvalidArgument("compose_rational needs a rational function (scale 0)");
    if (c.field()->nvars() != images.size())
        throw InvalidArgument("compose_rational needs one image per variable");
    for (const LSeries& s : images) {
        if (!s.field() || !s.field()->same_as(*target) || s.uniformizer() != uniformizer)
            throw FieldMismatch("image series over a different field or uniformizer");
        if (s.order_bound() < 0) throw InvalidArgument("image series must have nonnegative valuation");
    }
    LSeries num = evaluate_at_series(c.num(), images, target, uniformizer);
    if (c.den().is_one()) return cap ? num.truncated(*cap) : num;
    LSeries den = evaluate_at_series(c.den(), images, target, uniformizer);
    if (den.order_bound() > 0 || den.coefficient(0).is_zero())
        throw DenominatorVanishes("denominator vanishes at the constant terms of the images");
    return div(num, den, cap);
}

}  // namespace artin
