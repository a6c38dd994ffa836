#include "artin/pfield.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "artin/expr.hpp"

namespace artin {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Exp pow_exp(Coeff p, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= p;
        if (r > 0xffffffffULL) throw InvalidArgument("scale too large");
    }
    return static_cast<Exp>(r);
}

void require_same_field(const PElem& a, const PElem& b) {
    if (!a.field() || !b.field()) throw FieldMismatch("uninitialized field element");
    if (a.field() != b.field() && !a.field()->same_as(*b.field()))
        throw FieldMismatch("elements of different fields: " + a.field()->describe() + " vs " +
                            b.field()->describe());
}

struct Lifted {
    Poly num;
    Poly den;
};

Lifted lift(const PElem& a, unsigned target_scale) {
    if (target_scale == a.scale()) return {a.num(), a.den()};
    Exp k = pow_exp(a.p(), target_scale - a.scale());
    return {a.num().exponents_multiplied(k), a.den().exponents_multiplied(k)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::make(Coeff p, std::vector<std::string> names) {
    if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) throw InvalidArgument("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
    }
    return FieldPtr(new Field(p, std::move(names)));
}

std::optional<std::size_t> Field::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

FieldPtr Field::extended(const std::vector<std::string>& more) const {
    std::vector<std::string> all = names_;
    all.insert(all.end(), more.begin(), more.end());
    return make(p_, std::move(all));
}

bool Field::same_as(const Field& other) const noexcept {
    return p_ == other.p_ && names_ == other.names_;
}

bool Field::is_prefix_of(const Field& other) const noexcept {
    return p_ == other.p_ && names_.size() <= other.names_.size() &&
           std::equal(names_.begin(), names_.end(), other.names_.begin());
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << p_ << "(";
    for (std::size_t i = 0; i < names_.size(); ++i) os << (i ? "," : "") << names_[i];
    os << ")^pf";
    return os.str();
}

// ---------------------------------------------------------------------------
// PElem

// num/den must already be coprime.
PElem make_coprime(FieldPtr field, unsigned scale, Poly num, Poly den) {
    const Coeff p = field->p();
    const std::size_t nv = field->nvars();
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return PElem(field, 0, Poly(p, nv), Poly::constant(p, nv, 1));
    if (den.leading_coeff() != 1) {
        Coeff c = fp::inv(den.leading_coeff(), p);
        num = num.scaled(c);
        den = den.scaled(c);
    }
    while (scale > 0 && num.exponents_divisible_by(p) && den.exponents_divisible_by(p)) {
        num = num.exponents_divided(p);
        den = den.exponents_divided(p);
        --scale;
    }
    return PElem(std::move(field), scale, std::move(num), std::move(den));
}

PElem::PElem(FieldPtr field)
    : field_(std::move(field)),
      num_(field_->p(), field_->nvars()),
      den_(Poly::constant(field_->p(), field_->nvars(), 1)) {}

PElem PElem::constant(FieldPtr field, std::int64_t c) {
    Coeff p = field->p();
    std::size_t nv = field->nvars();
    return PElem(field, 0, Poly::constant(p, nv, c), Poly::constant(p, nv, 1));
}

PElem PElem::variable(FieldPtr field, std::size_t index) {
    Coeff p = field->p();
    std::size_t nv = field->nvars();
    return PElem(field, 0, Poly::variable(p, nv, index), Poly::constant(p, nv, 1));
}

PElem PElem::variable(FieldPtr field, std::string_view name) {
    auto idx = field->index_of(name);
    if (!idx) throw InvalidArgument("unknown variable '" + std::string(name) + "' in " + field->describe());
    return variable(std::move(field), *idx);
}

PElem PElem::from_fraction(FieldPtr field, unsigned scale, Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.prime() != field->p() || num.nvars() != field->nvars() || den.nvars() != field->nvars())
        throw FieldMismatch("fraction does not match field " + field->describe());
    if (!num.is_zero() && !den.is_constant()) {
        Poly g = gcd(num, den);
        if (!g.is_one()) {
            num = *num.divide_exact(g);
            den = *den.divide_exact(g);
        }
    }
    return make_coprime(std::move(field), scale, std::move(num), std::move(den));
}

PElem operator+(const PElem& a, const PElem& b) {
    require_same_field(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    unsigned m = std::max(a.scale(), b.scale());
    Lifted x = lift(a, m), y = lift(b, m);
    if (x.den == y.den) return PElem::from_fraction(a.field(), m, x.num + y.num, std::move(x.den));
    // Henrici: with g = gcd(d1, d2), only g can share factors with the sum.
    Poly g = gcd(x.den, y.den);
    if (g.is_one()) return make_coprime(a.field(), m, x.num * y.den + y.num * x.den, x.den * y.den);
    Poly d1 = *x.den.divide_exact(g);
    Poly d2 = *y.den.divide_exact(g);
    Poly t = x.num * d2 + y.num * d1;
    if (t.is_zero()) return PElem(a.field());
    Poly g2 = gcd(t, g);
    if (!g2.is_one()) {
        t = *t.divide_exact(g2);
        g = *g.divide_exact(g2);
    }
    return make_coprime(a.field(), m, std::move(t), d1 * d2 * g);
}

PElem PElem::operator-() const {
    PElem r = *this;
    r.num_ = -r.num_;
    return r;
}

PElem operator-(const PElem& a, const PElem& b) { return a + (-b); }

PElem operator*(const PElem& a, const PElem& b) {
    require_same_field(a, b);
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    unsigned m = std::max(a.scale(), b.scale());
    Lifted x = lift(a, m), y = lift(b, m);
    auto cancel = [](Poly& n, Poly& d) {
        if (d.is_constant() || n.is_constant()) return;
        Poly g = gcd(n, d);
        if (!g.is_one()) {
            n = *n.divide_exact(g);
            d = *d.divide_exact(g);
        }
    };
    cancel(x.num, y.den);
    cancel(y.num, x.den);
    return make_coprime(a.field(), m, x.num * y.num, x.den * y.den);
}

PElem PElem::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return make_coprime(field_, scale_, den_, num_);
}

PElem operator/(const PElem& a, const PElem& b) {
    require_same_field(a, b);
    return a * b.inverse();
}

bool operator==(const PElem& a, const PElem& b) {
    if (a.field() != b.field() && !(a.field() && b.field() && a.field()->same_as(*b.field())))
        return false;
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
}

PElem PElem::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return constant(field_, 1);
    if (e == 1) return *this;
    return make_coprime(field_, scale_, num_.pow(static_cast<std::uint64_t>(e)),
                        den_.pow(static_cast<std::uint64_t>(e)));
}

PElem PElem::frobenius(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (k < 0) return make_coprime(field_, scale_ + static_cast<unsigned>(-k), num_, den_);
    unsigned uk = static_cast<unsigned>(k);
    if (uk <= scale_) return PElem(field_, scale_ - uk, num_, den_);
    Exp mult = pow_exp(p(), uk - scale_);
    return PElem(field_, 0, num_.exponents_multiplied(mult), den_.exponents_multiplied(mult));
}

PElem PElem::embedded(FieldPtr larger) const {
    if (larger == field_) return *this;
    if (!field_->is_prefix_of(*larger))
        throw FieldMismatch("cannot embed " + field_->describe() + " into " + larger->describe());
    std::size_t nv = larger->nvars();
    return PElem(std::move(larger), scale_, num_.embedded(nv), den_.embedded(nv));
}

PElem PElem::substitute(FieldPtr target, std::span<const PElem> values) const {
    if (values.size() != field_->nvars()) throw InvalidArgument("substitution needs one value per variable");
    std::vector<PElem> roots;
    roots.reserve(values.size());
    for (const PElem& v : values) {
        if (!v.field()->same_as(*target)) throw FieldMismatch("substitution value outside target field");
        roots.push_back(v.frobenius(-static_cast<int>(scale_)));
    }
    PElem n = evaluate_poly(num_, roots, target);
    PElem d = evaluate_poly(den_, roots, target);
    return n / d;
}

PElem pf_arith(ArithOp op, const PElem& a, const PElem& b) {
    switch (op) {
    case ArithOp::Add:
        return a + b;
    case ArithOp::Sub:
        return a - b;
    case ArithOp::Mul:
        return a * b;
    case ArithOp::Div:
        return a / b;
    }
    throw InvalidArgument("unknown arithmetic operation");
}

PElem pf_frobenius(const PElem& a, int k) { return a.frobenius(k); }

PElem evaluate_poly(const Poly& poly, std::span<const PElem> values, const FieldPtr& target) {
    if (values.size() != poly.nvars()) throw InvalidArgument("evaluation needs one value per variable");
    const Coeff p = target->p();
    const std::size_t tv = target->nvars();
    if (poly.is_zero()) return PElem(target);
    unsigned m = 0;
    for (const PElem& v : values) m = std::max(m, v.scale());
    const std::size_t nv = poly.nvars();
    std::vector<Exp> maxdeg(nv);
    for (std::size_t v = 0; v < nv; ++v) maxdeg[v] = poly.degree_in(v);

    std::vector<std::vector<Poly>> npow(nv), dpow(nv);
    std::vector<bool> has_den(nv, false);
    for (std::size_t v = 0; v < nv; ++v) {
        if (maxdeg[v] == 0) continue;
        Lifted l = lift(values[v], m);
        has_den[v] = !l.den.is_one();
        npow[v].push_back(Poly::constant(p, tv, 1));
        npow[v].push_back(l.num);
        if (has_den[v]) {
            dpow[v].push_back(Poly::constant(p, tv, 1));
            dpow[v].push_back(l.den);
        }
    }
    auto power = [](std::vector<Poly>& cache, Exp k) -> const Poly& {
        while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
        return cache[k];
    };

    Poly numer(p, tv);
    for (std::size_t t = 0; t < poly.size(); ++t) {
        auto e = poly.exponents(t);
        Poly term = Poly::constant(p, tv, poly.coeff(t));
        for (std::size_t v = 0; v < nv; ++v) {
            if (maxdeg[v] == 0) continue;
            if (e[v] > 0) term = term * power(npow[v], e[v]);
            if (has_den[v] && e[v] < maxdeg[v]) term = term * power(dpow[v], maxdeg[v] - e[v]);
        }
        numer = numer + term;
    }
    if (numer.is_zero()) return PElem(target);
    // The denominator is a product of small known factors; cancelling against
    // each one is far cheaper than one gcd with the whole product.
    Poly denom = Poly::constant(p, tv, 1);
    for (std::size_t v = 0; v < nv; ++v) {
        if (!has_den[v]) continue;
        for (Exp i = 0; i < maxdeg[v]; ++i) {
            Poly f = dpow[v][1];
            while (!f.is_constant()) {
                Poly g = gcd(numer, f);
                if (g.is_one()) break;
                numer = *numer.divide_exact(g);
                f = *f.divide_exact(g);
            }
            denom = denom * f;
        }
    }
    return make_coprime(target, m, std::move(numer), std::move(denom));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string format_poly(const Poly& poly, const Field& field, unsigned scale) {
    if (poly.is_zero()) return "0";
    const std::uint64_t q = pow_exp(field.p(), scale);
    std::ostringstream os;
    for (std::size_t t = 0; t < poly.size(); ++t) {
        if (t) os << " + ";
        auto e = poly.exponents(t);
        bool any = false;
        std::ostringstream factors;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (any) factors << "*";
            any = true;
            factors << field.names()[v];
            std::uint64_t g = std::gcd<std::uint64_t>(e[v], q);
            std::uint64_t a = e[v] / g, b = q / g;
            if (b == 1) {
                if (a != 1) factors << "^" << a;
            } else {
                factors << "^(" << a << "/" << b << ")";
            }
        }
        Coeff c = poly.coeff(t);
        if (!any)
            os << c;
        else if (c == 1)
            os << factors.str();
        else
            os << c << "*" << factors.str();
    }
    return os.str();
}

struct PElemAlgebra {
    using value_type = PElem;
    FieldPtr field;

    PElem number(std::int64_t v, const expr::Node&) const { return PElem::constant(field, v); }
    PElem symbol(const std::string& name, const expr::Node& n) const {
        auto idx = field->index_of(name);
        if (!idx) expr::fail_at(n, "unknown variable '" + name + "'");
        return PElem::variable(field, *idx);
    }
    PElem add(const PElem& a, const PElem& b, const expr::Node&) const { return a + b; }
    PElem sub(const PElem& a, const PElem& b, const expr::Node&) const { return a - b; }
    PElem mul(const PElem& a, const PElem& b, const expr::Node&) const { return a * b; }
    PElem div(const PElem& a, const PElem& b, const expr::Node& n) const {
        if (b.is_zero()) expr::fail_at(n, "division by zero");
        return a / b;
    }
    PElem neg(const PElem& a, const expr::Node&) const { return -a; }
    PElem pow(const PElem& a, std::int64_t num, std::int64_t den, const expr::Node& n) const {
        int k = expr::log_p(den, field->p());
        if (k < 0) expr::fail_at(n, "exponent denominator must be a power of p");
        if (num < 0 && a.is_zero()) expr::fail_at(n, "division by zero");
        return a.pow(num).frobenius(-k);
    }
};

}  // namespace

std::string PElem::to_string() const {
    std::string n = format_poly(num_, *field_, scale_);
    if (den_.is_one()) return n;
    return "(" + n + ")/(" + format_poly(den_, *field_, scale_) + ")";
}

PElem PElem::parse(FieldPtr field, std::string_view text) {
    expr::Node ast = expr::parse(text);
    return expr::evaluate(ast, PElemAlgebra{std::move(field)});
}

}  // namespace artin
