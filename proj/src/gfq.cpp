#include "gfq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace artin::detail {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;

std::vector<Coeff> digits_of(std::uint64_t code, Coeff p, unsigned k) {
    std::vector<Coeff> d(k);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = static_cast<Coeff>(code % p);
        code /= p;
    }
    return d;
}

std::uint64_t code_of(const std::vector<Coeff>& d, Coeff p) {
    std::uint64_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
}

// Codes of x^0 .. x^(q-2) modulo the monic polynomial x^k + sum f_i x^i, or
// nullopt when x does not have multiplicative order exactly q - 1.
std::optional<std::vector<std::uint32_t>> powers_of_x(const std::vector<Coeff>& f, Coeff p,
                                                      std::uint64_t q) {
    const unsigned k = static_cast<unsigned>(f.size());
    std::vector<std::uint32_t> codes;
    codes.reserve(q - 1);
    std::vector<Coeff> cur(k, 0);
    cur[0] = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
        const std::uint64_t code = code_of(cur, p);
        if (i > 0 && code == 1) return std::nullopt;
        codes.push_back(static_cast<std::uint32_t>(code));
        const Coeff top = cur[k - 1];
        for (unsigned j = k; j-- > 1;) cur[j] = fp::sub(cur[j - 1], fp::mul(top, f[j], p), p);
        cur[0] = fp::neg(fp::mul(top, f[0], p), p);
    }
    if (code_of(cur, p) != 1) return std::nullopt;
    return codes;
}

}  // namespace

EvalField::EvalField(Coeff p) : p_(p) {
    if (p > kMaxOrder) {
        q_ = p;
        minus_one_ = p - 1;
        return;
    }
    log_mode_ = true;
    unsigned k = 1;
    q_ = p;
    while (q_ * p <= kMaxOrder) {
        q_ *= p;
        ++k;
    }
    const std::uint64_t n = q_ - 1;
    std::vector<std::uint32_t> codes;
    for (std::uint64_t cand = 1; codes.empty(); ++cand) {
        std::vector<Coeff> f = digits_of(cand, p, k);
        if (f[0] == 0) continue;
        if (auto c = powers_of_x(f, p, q_)) codes = std::move(*c);
    }
    log_of_code_.assign(q_, 0);
    for (std::uint64_t i = 0; i < n; ++i) log_of_code_[codes[i]] = static_cast<std::uint32_t>(i);
    zech_.assign(n, -1);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<Coeff> d = digits_of(codes[i], p, k);
        d[0] = fp::add(d[0], 1, p);
        const std::uint64_t c = code_of(d, p);
        if (c != 0) zech_[i] = log_of_code_[c];
    }
    minus_one_ = p == 2 ? 1 : static_cast<Elem>(1 + n / 2);
}

const EvalField& EvalField::for_prime(Coeff p) {
    static std::mutex mu;
    static std::map<Coeff, std::unique_ptr<EvalField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) slot.reset(new EvalField(p));
    return *slot;
}

EvalField::Elem EvalField::from_fp(Coeff c) const {
    c %= p_;
    if (!log_mode_) return c;
    return c == 0 ? 0 : 1 + log_of_code_[c];
}

EvalField::Elem EvalField::nonzero(std::uint64_t i) const {
    if (!log_mode_) return static_cast<Elem>(i % p_);
    return static_cast<Elem>(1 + (i - 1) % (q_ - 1));
}

EvalField::Elem EvalField::add(Elem a, Elem b) const {
    if (!log_mode_) return fp::add(a, b, p_);
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint64_t n = q_ - 1;
    const std::uint64_t la = a - 1, lb = b - 1;
    const std::int64_t z = zech_[(lb + n - la) % n];
    if (z < 0) return 0;
    return static_cast<Elem>(1 + (la + static_cast<std::uint64_t>(z)) % n);
}

EvalField::Elem EvalField::neg(Elem a) const {
    if (!log_mode_) return fp::neg(a, p_);
    return mul(a, minus_one_);
}

EvalField::Elem EvalField::mul(Elem a, Elem b) const {
    if (!log_mode_) return fp::mul(a, b, p_);
    if (a == 0 || b == 0) return 0;
    return static_cast<Elem>(1 + (std::uint64_t{a} - 1 + b - 1) % (q_ - 1));
}

EvalField::Elem EvalField::inv(Elem a) const {
    if (!log_mode_) return fp::inv(a, p_);
    const std::uint64_t n = q_ - 1;
    return static_cast<Elem>(1 + (n - (a - 1)) % n);
}

EvalField::Elem EvalField::pow(Elem a, std::uint64_t e) const {
    if (!log_mode_) return fp::pow(a, e, p_);
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = q_ - 1;
    return static_cast<Elem>(1 + ((a - 1) * (e % n)) % n);
}

std::size_t univariate_gcd_degree(const EvalField& k, std::vector<EvalField::Elem> a,
                                  std::vector<EvalField::Elem> b) {
    auto trim = [](std::vector<EvalField::Elem>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        const EvalField::Elem lead = k.inv(b.back());
        while (a.size() >= b.size()) {
            const EvalField::Elem c = k.mul(a.back(), lead);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
            trim(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

}  // namespace artin::detail
