#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/specfile.hpp"

using namespace artin;

namespace {

const char* kAs = R"([base]
p = 2
pbasis = ["x"]
uniformizer = "y"

[extension]
kind = "artin-schreier"   # t^2 - t = rhs
rhs = "x/y^3"

[representation]
character = "linear"
exponents = [1]

[options]
precision = 8
max_precision = 64
)";

// Line and column of the ParseError thrown for `text`.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
    try {
        parse_spec(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("no parse error");
    return {0, 0};
}

std::string replaced(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("a complete file") {
    SpecFile s = parse_spec(kAs);
    CHECK(s.base.p() == 2);
    CHECK(s.base.pbasis() == std::vector<std::string>{"x"});
    CHECK(s.base.uniformizer() == "y");
    CHECK(s.extension.kind() == ExtKind::ArtinSchreier);
    CHECK(s.extension.rhs().to_string() == s.base.parse_element("x/y^3").to_string());
    REQUIRE(s.representation.has_value());
    CHECK(s.representation->dim() == 1);
    CHECK(s.policy.start == 8);
    CHECK(s.policy.max_level == 64);
}

TEST_CASE("exact fractions are accepted as integers") {
    SpecFile s = parse_spec(replaced(kAs, "precision = 8", "precision = 16/2"));
    CHECK(s.policy.start == 8);
    CHECK(error_at(replaced(kAs, "precision = 8", "precision = 3/2")) == std::pair<std::size_t, std::size_t>{15, 13});
}

TEST_CASE("errors carry line and column") {
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(error_at(replaced(kAs, "rhs = \"x/y^3\"", "rhs = \"x/y^3")) == P{8, 7});
    CHECK(error_at(replaced(kAs, "max_precision = 64", "max_precision = 64\ncolour = 3")).first == 17);
    CHECK(error_at(replaced(kAs, "[options]", "[other]")).first >= 14);
    CHECK(error_at(replaced(kAs, "p = 2", "p = 4")) == P{2, 5});
    CHECK(error_at(replaced(kAs, "p = 2", "p = 2\np = 3")).first == 3);
    // an error inside an expression points into the string
    CHECK(error_at(replaced(kAs, "\"x/y^3\"", "\"x/y^3 +\"")).first == 8);
    CHECK(error_at(replaced(kAs, "\"x/y^3\"", "\"x/y^3 +\"")).second > 7);
    CHECK_THROWS_AS(parse_spec("[extension]\nkind = \"unramified\"\ndegree = 2\n"), ParseError);
}

TEST_CASE("unknown kinds are reported as unsupported") {
    CHECK_THROWS_AS(parse_spec(replaced(kAs, "artin-schreier", "lubin-tate")), UnsupportedKind);
}

TEST_CASE("every extension kind parses") {
    SpecFile k = parse_spec("[base]\np = 3\nuniformizer = \"y\"\n[extension]\nkind = \"kummer\"\nn = 4\n"
                            "rhs = \"y\"\nroot_of_unity_degree = 2\n");
    CHECK(k.extension.kind() == ExtKind::Kummer);
    CHECK(k.extension.n() == 4);
    CHECK(k.extension.root_of_unity_degree() == 2);
    CHECK_FALSE(k.representation.has_value());
    SpecFile u = parse_spec("[base]\np = 3\nuniformizer = \"y\"\n[extension]\nkind = \"unramified\"\ndegree = 3\n"
                            "[representation]\ncharacter = \"regular\"\n");
    CHECK(u.extension.group()->order() == 3);
    CHECK(u.representation->dim() == 3);
    SpecFile e = parse_spec("[base]\np = 3\nuniformizer = \"y\"\n[extension]\nkind = \"eisenstein\"\n"
                            "poly = \"T^2 - y\"\naction = [\"T\", \"-T\"]\n"
                            "[representation]\ncharacter = \"values\"\norder = 2\nvalues = [[1], [-1]]\n");
    CHECK(e.extension.kind() == ExtKind::Eisenstein);
    CHECK(e.representation->dim() == 1);
    // a Kummer degree needing more roots of unity than declared
    CHECK_THROWS_AS(parse_spec("[base]\np = 3\nuniformizer = \"y\"\n[extension]\nkind = \"kummer\"\nn = 4\n"
                               "rhs = \"y\"\n"),
                    ParseError);
}
