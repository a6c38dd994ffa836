#include "artin/specfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include "artin/errors.hpp"
#include "json.hpp"

namespace artin {

namespace {

struct Value;
using List = std::vector<Value>;

struct Value {
    std::variant<std::int64_t, std::string, List> data;
    std::size_t line = 0, column = 0;
};

struct Entry {
    Value value;
    std::size_t line = 0, column = 0;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::map<std::string, Section> read() {
        std::map<std::string, Section> sections;
        Section* current = nullptr;
        while (true) {
            skip_blank_lines();
            if (at_end()) break;
            if (peek() == '[') {
                const std::size_t l = line_, c = col_;
                advance();
                std::string name = identifier();
                expect(']');
                end_of_line();
                if (sections.count(name)) fail(l, c, "duplicate section [" + name + "]");
                current = &sections[name];
                continue;
            }
            const std::size_t l = line_, c = col_;
            std::string key = identifier();
            if (!current) fail(l, c, "key '" + key + "' outside a section");
            skip_spaces();
            expect('=');
            skip_spaces();
            Value v = value();
            end_of_line();
            if (current->count(key)) fail(l, c, "duplicate key '" + key + "'");
            (*current)[key] = Entry{std::move(v), l, c, false};
        }
        return sections;
    }

    [[noreturn]] static void fail(std::size_t line, std::size_t col, const std::string& what) {
        throw ParseError(what, line, col);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_spaces() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
    void skip_comment() {
        if (peek() == '#')
            while (!at_end() && peek() != '\n') advance();
    }
    void skip_blank_lines() {
        while (true) {
            skip_spaces();
            skip_comment();
            if (peek() != '\n') return;
            advance();
        }
    }
    void end_of_line() {
        skip_spaces();
        skip_comment();
        if (at_end()) return;
        if (peek() != '\n') fail(line_, col_, "unexpected text after value");
        advance();
    }
    void expect(char ch) {
        if (peek() != ch) fail(line_, col_, std::string("expected '") + ch + "'");
        advance();
    }
    std::string identifier() {
        std::string s;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
            s += peek();
            advance();
        }
        if (s.empty()) fail(line_, col_, "expected a name");
        return s;
    }
    Value value() {
        Value v;
        v.line = line_;
        v.column = col_;
        const char ch = peek();
        if (ch == '"') {
            advance();
            std::string s;
            while (!at_end() && peek() != '"' && peek() != '\n') {
                s += peek();
                advance();
            }
            if (peek() != '"') fail(v.line, v.column, "unterminated string");
            advance();
            v.data = std::move(s);
        } else if (ch == '[') {
            advance();
            List items;
            skip_list_space();
            if (peek() != ']') {
                while (true) {
                    items.push_back(value());
                    skip_list_space();
                    if (peek() == ',') {
                        advance();
                        skip_list_space();
                        if (peek() == ']') break;
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            v.data = std::move(items);
        } else if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
            v.data = integer(v);
        } else {
            fail(line_, col_, "expected a value");
        }
        return v;
    }
    void skip_list_space() {
        while (true) {
            skip_spaces();
            skip_comment();
            if (peek() != '\n') return;
            advance();
        }
    }
    std::int64_t digits(const Value& v) {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s += peek();
            advance();
        }
        if (s.empty()) fail(line_, col_, "expected digits");
        if (s.size() > 18) fail(v.line, v.column, "integer out of range");
        return std::stoll(s);
    }
    std::int64_t integer(const Value& v) {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        }
        std::int64_t num = digits(v);
        if (peek() == '/') {
            advance();
            std::int64_t den = digits(v);
            if (den == 0 || num % den != 0) fail(v.line, v.column, "expected an integer");
            num /= den;
        }
        return neg ? -num : num;
    }

    std::string_view text_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

// Typed access to one section with unknown-key detection.
class Fields {
public:
    Fields(Section* s, std::string name, std::size_t line) : s_(s), name_(std::move(name)), line_(line) {}

    bool has(const std::string& key) const { return s_ && s_->count(key); }

    const Entry& entry(const std::string& key) {
        if (!has(key)) Reader::fail(line_, 1, "[" + name_ + "] needs '" + key + "'");
        Entry& e = s_->at(key);
        e.used = true;
        return e;
    }

    std::int64_t integer(const std::string& key) { return as_integer(entry(key).value); }
    std::string string(const std::string& key) { return as_string(entry(key).value); }
    const List& list(const std::string& key) { return as_list(entry(key).value); }

    template <class T>
    T get_or(const std::string& key, T fallback) {
        if (!has(key)) return fallback;
        if constexpr (std::is_same_v<T, std::string>)
            return string(key);
        else
            return static_cast<T>(integer(key));
    }

    void finish() const {
        if (!s_) return;
        for (const auto& [k, e] : *s_)
            if (!e.used) Reader::fail(e.line, e.column, "unknown key '" + k + "' in [" + name_ + "]");
    }

    static std::int64_t as_integer(const Value& v) {
        if (auto* i = std::get_if<std::int64_t>(&v.data)) return *i;
        Reader::fail(v.line, v.column, "expected an integer");
    }
    static std::string as_string(const Value& v) {
        if (auto* s = std::get_if<std::string>(&v.data)) return *s;
        Reader::fail(v.line, v.column, "expected a string");
    }
    static const List& as_list(const Value& v) {
        if (auto* l = std::get_if<List>(&v.data)) return *l;
        Reader::fail(v.line, v.column, "expected a list");
    }

private:
    Section* s_;
    std::string name_;
    std::size_t line_;
};

// Runs f, moving expression parse errors to the position of the string value.
template <class F>
auto at_value(const Value& v, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.what(), v.line, v.column + e.column());
    } catch (const InvalidArgument& e) {
        Reader::fail(v.line, v.column, e.what());
    } catch (const FieldMismatch& e) {
        Reader::fail(v.line, v.column, e.what());
    }
}

std::uint32_t positive(const Value& v, std::int64_t x) {
    if (x <= 0 || x > (1 << 20)) Reader::fail(v.line, v.column, "expected a positive integer");
    return static_cast<std::uint32_t>(x);
}

GroupPtr parse_group(Fields& ext, std::uint32_t degree) {
    if (ext.has("table")) {
        const Entry& e = ext.entry("table");
        std::vector<std::vector<Elem>> table;
        for (const Value& row : Fields::as_list(e.value)) {
            std::vector<Elem> r;
            for (const Value& x : Fields::as_list(row)) {
                std::int64_t k = Fields::as_integer(x);
                if (k < 0) Reader::fail(x.line, x.column, "group table entries are nonnegative");
                r.push_back(static_cast<Elem>(k));
            }
            table.push_back(std::move(r));
        }
        return at_value(e.value, [&] { return FiniteGroup::from_table(table); });
    }
    if (!ext.has("group")) return FiniteGroup::cyclic(degree);
    const Entry& e = ext.entry("group");
    std::istringstream in(Fields::as_string(e.value));
    std::string word;
    in >> word;
    std::vector<std::uint32_t> orders;
    std::string rest;
    std::getline(in, rest);
    std::istringstream parts(rest);
    for (std::string tok; std::getline(parts, tok, ',');) {
        try {
            orders.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        } catch (const std::exception&) {
            Reader::fail(e.value.line, e.value.column, "bad group order list");
        }
    }
    if (word == "cyclic" && orders.size() == 1) return FiniteGroup::cyclic(orders[0]);
    if (word == "abelian" && !orders.empty()) return FiniteGroup::abelian(orders);
    Reader::fail(e.value.line, e.value.column, "group must be \"cyclic N\" or \"abelian N,M,...\"");
}

ExtSpec parse_extension(Fields& ext, const BaseRing& base) {
    const Entry& kind_entry = ext.entry("kind");
    const std::string kind = Fields::as_string(kind_entry.value);
    const Ground g = ground_of(base);
    auto series = [&](const std::string& key) {
        const Entry& e = ext.entry(key);
        return at_value(e.value, [&] { return base.parse_element(Fields::as_string(e.value)); });
    };
    if (kind == "artin-schreier") {
        LSeries rhs = series("rhs");
        return ExtSpec::artin_schreier(g, rhs);
    }
    if (kind == "kummer") {
        const Entry& n = ext.entry("n");
        const std::uint32_t deg = positive(n.value, Fields::as_integer(n.value));
        const std::uint32_t d = ext.has("root_of_unity_degree")
                                    ? positive(ext.entry("root_of_unity_degree").value,
                                               ext.integer("root_of_unity_degree"))
                                    : 1;
        LSeries rhs = series("rhs");
        return at_value(n.value, [&] { return ExtSpec::kummer(g, deg, rhs, d); });
    }
    if (kind == "unramified") {
        const Entry& d = ext.entry("degree");
        return ExtSpec::unramified(g, positive(d.value, Fields::as_integer(d.value)));
    }
    if (kind == "eisenstein") {
        const std::int64_t prec = ext.get_or<std::int64_t>("series_precision", 32);
        const Entry& p = ext.entry("poly");
        auto spoly = [&](const Value& v) {
            return at_value(v, [&] {
                return SPoly::parse(g.field, g.uniformizer, "T", Fields::as_string(v), prec);
            });
        };
        SPoly poly = spoly(p.value);
        const std::uint32_t deg = poly.degree() > 0 ? static_cast<std::uint32_t>(poly.degree()) : 1;
        GroupPtr group = parse_group(ext, deg);
        const Entry& a = ext.entry("action");
        std::vector<SPoly> action;
        for (const Value& v : Fields::as_list(a.value)) action.push_back(spoly(v));
        return at_value(a.value, [&] { return ExtSpec::eisenstein(g, poly, group, action); });
    }
    throw UnsupportedKind("unsupported extension kind '" + kind + "'");
}

CharRep parse_representation(Fields& rep, const GroupPtr& group) {
    const Entry& c = rep.entry("character");
    const std::string kind = Fields::as_string(c.value);
    if (kind == "trivial") return CharRep::trivial(group);
    if (kind == "regular") return CharRep::regular(group);
    if (kind == "linear") {
        const Entry& e = rep.entry("exponents");
        std::vector<std::int64_t> ks;
        for (const Value& v : Fields::as_list(e.value)) ks.push_back(Fields::as_integer(v));
        return at_value(e.value, [&] { return CharRep::linear(group, ks); });
    }
    if (kind == "values") {
        const Entry& o = rep.entry("order");
        const std::uint32_t n = positive(o.value, Fields::as_integer(o.value));
        const Entry& e = rep.entry("values");
        std::vector<Cyclotomic> values;
        for (const Value& v : Fields::as_list(e.value)) {
            // Coordinates in 1, zeta, zeta^2, ...
            Cyclotomic acc = Cyclotomic::integer(n, 0);
            std::int64_t k = 0;
            for (const Value& x : Fields::as_list(v)) {
                acc = acc + Cyclotomic::integer(n, Fields::as_integer(x)) * Cyclotomic::zeta_power(n, k);
                ++k;
            }
            values.push_back(acc);
        }
        return at_value(e.value, [&] { return CharRep::from_values(group, n, values); });
    }
    Reader::fail(c.value.line, c.value.column, "unknown character '" + kind + "'");
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
    auto sections = Reader(text).read();
    for (const auto& [name, s] : sections)
        if (name != "base" && name != "extension" && name != "representation" && name != "options")
            Reader::fail(s.empty() ? 1 : s.begin()->second.line, 1, "unknown section [" + name + "]");
    auto section = [&](const std::string& name) -> Section* {
        auto it = sections.find(name);
        return it == sections.end() ? nullptr : &it->second;
    };
    if (!section("base")) Reader::fail(1, 1, "missing [base] section");
    if (!section("extension")) Reader::fail(1, 1, "missing [extension] section");

    Fields base(section("base"), "base", 1);
    const Entry& pe = base.entry("p");
    const std::int64_t p = Fields::as_integer(pe.value);
    if (p < 2 || p > 65521 || !is_prime(static_cast<Coeff>(p))) Reader::fail(pe.value.line, pe.value.column, "p must be a prime");
    std::vector<std::string> pbasis;
    if (base.has("pbasis"))
        for (const Value& v : base.list("pbasis")) pbasis.push_back(Fields::as_string(v));
    const Entry& ue = base.entry("uniformizer");
    SpecFile spec;
    spec.base = at_value(ue.value, [&] {
        return BaseRing::make(static_cast<Coeff>(p), pbasis, Fields::as_string(ue.value));
    });
    base.finish();

    Fields ext(section("extension"), "extension", 1);
    spec.extension = parse_extension(ext, spec.base);
    ext.finish();

    if (Section* r = section("representation")) {
        Fields rep(r, "representation", 1);
        spec.representation = parse_representation(rep, spec.extension.group());
        rep.finish();
    }
    if (Section* o = section("options")) {
        Fields opt(o, "options", 1);
        if (opt.has("precision")) {
            const std::int64_t n = opt.integer("precision");
            if (n < 0) Reader::fail(opt.entry("precision").line, 1, "precision must be nonnegative");
            spec.policy.start = n;
        }
        if (opt.has("max_precision")) spec.policy.max_level = opt.integer("max_precision");
        opt.finish();
    }
    return spec;
}

SpecFile load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string ram_json(const StableFiltration& sf, const ExtSpec& ext) {
    const Filtration& f = sf.filtration;
    nlohmann::ordered_json j;
    j["kind"] = kind_name(ext.kind());
    j["group_order"] = f.group->order();
    j["level"] = sf.level;
    j["e"] = f.e;
    j["f"] = f.f;
    nlohmann::ordered_json filt = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < f.lower.size(); ++i) filt.push_back({i, f.lower[i].size()});
    j["filtration"] = filt;
    nlohmann::ordered_json herb = nlohmann::ordered_json::array();
    for (std::int64_t i : f.jumps()) {
        Rational x = herbrand_phi(f, Rational(i));
        herb.push_back({i, x.numerator(), x.denominator()});
    }
    j["herbrand"] = herb;
    j["different"] = f.different();
    j["discriminant"] = f.discriminant();
    if (f.possibly_trivial) j["note"] = "unramified (possibly trivial)";
    return j.dump();
}

}  // namespace artin
