#include "artin/spoly.hpp"

#include <algorithm>

#include "artin/expr.hpp"

namespace artin {

SPoly::SPoly(FieldPtr field, std::string uniformizer)
    : field_(std::move(field)), uniformizer_(std::move(uniformizer)) {}

SPoly SPoly::from_coefficients(FieldPtr field, std::string uniformizer, std::vector<LSeries> coeffs) {
    SPoly r(std::move(field), std::move(uniformizer));
    for (const LSeries& c : coeffs)
        if (!c.field()->same_as(*r.field_) || c.uniformizer() != r.uniformizer_)
            throw FieldMismatch("polynomial coefficient over a different series ring");
    r.coeffs_ = std::move(coeffs);
    r.trim();
    return r;
}

SPoly SPoly::constant(const LSeries& c) { return from_coefficients(c.field(), c.uniformizer(), {c}); }

SPoly SPoly::variable(FieldPtr field, std::string uniformizer) {
    LSeries zero = LSeries::zero(field, uniformizer);
    LSeries one = LSeries::constant(PElem::constant(field, 1), uniformizer);
    return from_coefficients(field, uniformizer, {zero, one});
}

void SPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

LSeries SPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return LSeries::zero(field_, uniformizer_);
    return coeffs_[static_cast<std::size_t>(i)];
}

bool SPoly::is_monic() const {
    if (coeffs_.empty()) return false;
    const LSeries& lc = coeffs_.back();
    return lc.has_valuation() && lc.valuation() == 0 &&
           equal_to_precision(lc, LSeries::constant(PElem::constant(field_, 1), uniformizer_));
}

bool SPoly::is_zero_to_precision() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LSeries& c) { return !c.has_valuation(); });
}

SPoly operator+(const SPoly& a, const SPoly& b) {
    std::vector<LSeries> out;
    int n = std::max(a.degree(), b.degree());
    for (int i = 0; i <= n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return SPoly::from_coefficients(a.field_, a.uniformizer_, std::move(out));
}

SPoly SPoly::operator-() const {
    SPoly r = *this;
    for (LSeries& c : r.coeffs_) c = -c;
    return r;
}

SPoly operator-(const SPoly& a, const SPoly& b) { return a + (-b); }

SPoly operator*(const SPoly& a, const SPoly& b) {
    if (a.degree() < 0 || b.degree() < 0) return SPoly(a.field_, a.uniformizer_);
    std::vector<LSeries> out(static_cast<std::size_t>(a.degree() + b.degree() + 1),
                             LSeries::zero(a.field_, a.uniformizer_));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs_[i].is_exact_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return SPoly::from_coefficients(a.field_, a.uniformizer_, std::move(out));
}

SPoly SPoly::scaled(const LSeries& c) const {
    SPoly r = *this;
    for (LSeries& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
}

SPoly SPoly::derivative() const {
    std::vector<LSeries> out;
    for (int i = 1; i <= degree(); ++i)
        out.push_back(coeffs_[i].scaled(PElem::constant(field_, i)));
    return from_coefficients(field_, uniformizer_, std::move(out));
}

SPoly SPoly::mod(const SPoly& m) const {
    if (!m.is_monic()) throw InvalidArgument("reduction needs a monic modulus");
    const int n = m.degree();
    std::vector<LSeries> r = coeffs_;
    for (int i = degree(); i >= n; --i) {
        LSeries c = r[static_cast<std::size_t>(i)];
        if (c.is_exact_zero()) continue;
        for (int j = 0; j < n; ++j) r[i - n + j] = r[i - n + j] - c * m.coeffs_[j];
    }
    if (static_cast<int>(r.size()) > n) r.resize(static_cast<std::size_t>(n));
    return from_coefficients(field_, uniformizer_, std::move(r));
}

SPoly SPoly::compose_mod(const SPoly& q, const SPoly& m) const {
    SPoly acc(field_, uniformizer_);
    SPoly qm = q.mod(m);
    for (int i = degree(); i >= 0; --i) acc = ((acc * qm) + constant(coeffs_[i])).mod(m);
    return acc;
}

LSeries SPoly::evaluate(const LSeries& x) const {
    LSeries acc = LSeries::zero(field_, uniformizer_);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

SPoly SPoly::map_coefficients(const std::function<LSeries(const LSeries&)>& f) const {
    std::vector<LSeries> out;
    for (const LSeries& c : coeffs_) out.push_back(f(c));
    FieldPtr field = out.empty() ? field_ : out.front().field();
    return from_coefficients(field, uniformizer_, std::move(out));
}

std::string SPoly::to_string(const std::string& var) const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const LSeries& c = coeffs_[i];
        if (c.is_exact_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        out += "(" + cs + ")";
        if (i == 1) out += "*" + var;
        if (i > 1) out += "*" + var + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

struct SPolyAlgebra {
    using value_type = SPoly;
    FieldPtr field;
    std::string uniformizer;
    std::string var;
    std::int64_t prec;

    SPoly constant(const LSeries& s) const { return SPoly::constant(s); }
    SPoly number(std::int64_t v, const expr::Node&) const {
        return constant(LSeries::constant(PElem::constant(field, v), uniformizer));
    }
    SPoly symbol(const std::string& name, const expr::Node& n) const {
        if (name == var) return SPoly::variable(field, uniformizer);
        if (name == uniformizer) return constant(LSeries::monomial(PElem::constant(field, 1), 1, uniformizer));
        auto idx = field->index_of(name);
        if (!idx) expr::fail_at(n, "unknown variable '" + name + "'");
        return constant(LSeries::constant(PElem::variable(field, *idx), uniformizer));
    }
    SPoly add(const SPoly& a, const SPoly& b, const expr::Node&) const { return a + b; }
    SPoly sub(const SPoly& a, const SPoly& b, const expr::Node&) const { return a - b; }
    SPoly mul(const SPoly& a, const SPoly& b, const expr::Node&) const { return a * b; }
    SPoly div(const SPoly& a, const SPoly& b, const expr::Node& n) const {
        if (b.degree() != 0) expr::fail_at(n, "divisor must be a nonzero series");
        const LSeries d = b.coeff(0);
        if (!d.has_valuation()) expr::fail_at(n, "division by zero");
        return a.map_coefficients([&](const LSeries& c) { return artin::div(c, d, prec); });
    }
    SPoly neg(const SPoly& a, const expr::Node&) const { return -a; }
    SPoly pow(const SPoly& a, std::int64_t num, std::int64_t den, const expr::Node& n) const {
        if (den != 1 || num < 0) {
            if (a.degree() != 0) expr::fail_at(n, "only series may take negative or fractional powers");
            const LSeries c = a.coeff(0);
            if (den != 1) {
                int k = expr::log_p(den, field->p());
                if (k < 0) expr::fail_at(n, "exponent denominator must be a power of p");
                bool scalar = c.is_exact() && c.has_valuation() && c.valuation() == 0 && c.support_end() == 1;
                if (!scalar) expr::fail_at(n, "fractional powers apply to coefficients only");
                return constant(LSeries::constant(c.leading_coefficient().pow(num).frobenius(-k), uniformizer));
            }
            LSeries one = LSeries::constant(PElem::constant(field, 1), uniformizer);
            if (!c.has_valuation()) expr::fail_at(n, "division by zero");
            return constant(artin::div(one, c.pow(static_cast<std::uint64_t>(-num)), prec));
        }
        SPoly r = number(1, n);
        for (std::int64_t i = 0; i < num; ++i) r = r * a;
        return r;
    }
};

}  // namespace

SPoly SPoly::parse(FieldPtr field, std::string uniformizer, const std::string& var, std::string_view text,
                   std::int64_t prec) {
    expr::Node ast = expr::parse(text);
    return expr::evaluate(ast, SPolyAlgebra{std::move(field), std::move(uniformizer), var, prec});
}

LSeries determinant(const SMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw InvalidArgument("determinant of an empty matrix");
    const FieldPtr field = a[0][0].field();
    const std::string& u = a[0][0].uniformizer();
    const LSeries one = LSeries::constant(PElem::constant(field, 1), u);
    const LSeries zero = LSeries::zero(field, u);
    // vect holds the characteristic polynomial of the leading r x r block,
    // highest degree first.
    std::vector<LSeries> vect{one, -a[0][0]};
    for (std::size_t r = 1; r < n; ++r) {
        // Column entries C = a[0..r-1][r], row entries R = a[r][0..r-1].
        std::vector<LSeries> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = a[i][r];
        std::vector<LSeries> t{one, -a[r][r]};
        for (std::size_t k = 0; k < r; ++k) {
            LSeries dot = zero;
            for (std::size_t i = 0; i < r; ++i) dot = dot + a[r][i] * col[i];
            t.push_back(-dot);
            if (k + 1 < r) {
                std::vector<LSeries> next(r, zero);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) next[i] = next[i] + a[i][j] * col[j];
                col = std::move(next);
            }
        }
        std::vector<LSeries> out(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < vect.size(); ++j) out[i] = out[i] + t[i - j] * vect[j];
        vect = std::move(out);
    }
    return n % 2 == 0 ? vect[n] : -vect[n];
}

LSeries norm_mod(const SPoly& z, const SPoly& m) {
    if (!m.is_monic()) throw InvalidArgument("norm needs a monic modulus");
    const int n = m.degree();
    if (n < 1) throw InvalidArgument("norm needs a modulus of positive degree");
    SMatrix mat(static_cast<std::size_t>(n), std::vector<LSeries>(static_cast<std::size_t>(n)));
    SPoly col = z.mod(m);
    const SPoly t = SPoly::variable(m.field(), m.uniformizer());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) mat[i][j] = col.coeff(i);
        if (j + 1 < n) col = (col * t).mod(m);
    }
    return determinant(mat);
}

LSeries discriminant(const SPoly& m) {
    const int n = m.degree();
    LSeries d = norm_mod(m.derivative(), m);
    return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

std::vector<LSeries> solve_linear(SMatrix a, std::vector<LSeries> b, std::optional<std::int64_t> cap) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!a[i][k].has_valuation()) continue;
            if (pivot == n || a[i][k].valuation() < a[pivot][k].valuation()) pivot = i;
        }
        if (pivot == n) throw PrecisionExhausted("linear system is singular to the available precision");
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_exact_zero()) continue;
            LSeries f = div(a[i][k], a[k][k], cap);
            for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            b[i] = b[i] - f * b[k];
        }
    }
    std::vector<LSeries> x(n);
    for (std::size_t k = n; k-- > 0;) {
        LSeries acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) acc = acc - a[k][j] * x[j];
        x[k] = div(acc, a[k][k], cap);
    }
    return x;
}

}  // namespace artin
