#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artin/errors.hpp"
#include "artin/selftest.hpp"
#include "artin/specfile.hpp"
#include "artin/witt.hpp"
#include "json.hpp"

using namespace artin;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kNoStabilization = 3, kUnsupported = 4 };

SpecFile load_with_overrides(const std::string& path, const std::optional<std::int64_t>& precision,
                             const std::optional<std::int64_t>& max_precision) {
    SpecFile spec = load_spec(path);
    if (precision) spec.policy.start = *precision;
    if (max_precision) spec.policy.max_level = *max_precision;
    return spec;
}

// Runs f and maps library errors to exit codes; `where` prefixes messages.
template <class F>
int guarded(const std::string& where, F f) {
    try {
        f();
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << where << ":" << e.line() << ":" << e.column() << ": error: " << e.what() << "\n";
        return kParse;
    } catch (const NoStabilization& e) {
        std::cerr << where << ": error: " << e.what() << "\n";
        return kNoStabilization;
    } catch (const UnsupportedKind& e) {
        std::cerr << where << ": error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << where << ": error: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artin conductors over complete discrete valuation rings with imperfect residue fields"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    std::optional<std::int64_t> precision, max_precision;
    bool json = false;

    auto* conductor = app.add_subcommand("conductor", "Print the conductor report of each spec file as JSON");
    conductor->add_option("specs", paths, "Spec files")->required()->check(CLI::ExistingFile);
    conductor->add_option("--precision", precision, "First jet level to try");
    conductor->add_option("--max-precision", max_precision, "Largest jet level to try");
    conductor->add_flag("--json", json, "JSON output (the default for this command)");

    auto* ram = app.add_subcommand("ram", "Print the ramification filtration of each spec file as JSON");
    ram->add_option("specs", paths, "Spec files")->required()->check(CLI::ExistingFile);
    ram->add_option("--precision", precision, "First jet level to try");
    ram->add_option("--max-precision", max_precision, "Largest jet level to try");
    ram->add_flag("--json", json, "JSON output (the default for this command)");

    std::string base_text, element;
    std::int64_t level = 0;
    auto* jet = app.add_subcommand("jet", "Image of an element under the jet map at a given level");
    jet->add_option("--base", base_text, "Base ring, e.g. F_2(x)[[y]]")->required();
    jet->add_option("--precision", level, "Jet level N")->required()->check(CLI::NonNegativeNumber);
    jet->add_option("--element", element, "Element of the fraction field")->required();
    jet->add_flag("--json", json, "Print {\"image\": ...}");

    unsigned p = 0, n = 0;
    auto* witt = app.add_subcommand("witt-polys", "Print the Witt addition and multiplication polynomials");
    witt->add_option("--p", p, "Prime")->required();
    witt->add_option("--n", n, "Length")->required()->check(CLI::PositiveNumber);
    witt->add_flag("--json", json, "JSON output");

    std::string filter;
    bool corrupt = false;
    std::string golden_dir = ARTIN_GOLDEN_DIR;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--filter", filter, "Criterion id, or text contained in a suite or criterion name");
    selftest->add_flag("--corrupt-witt-cache", corrupt, "Inject wrong Witt polynomials (negative control)");
    selftest->add_option("--golden-dir", golden_dir, "Directory of golden spec files");
    selftest->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version requests exit 0; usage errors are ordinary failures.
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (*conductor || *ram) {
        const bool is_conductor = conductor->parsed();
        int worst = kOk;
        for (const std::string& path : paths) {
            int code = guarded(path, [&] {
                SpecFile spec = load_with_overrides(path, precision, max_precision);
                if (is_conductor) {
                    if (!spec.representation) throw ParseError("missing [representation] section", 1, 1);
                    std::cout << report_json(artin_conductor(spec.base, spec.extension, *spec.representation,
                                                             spec.policy))
                              << "\n";
                } else {
                    std::cout << ram_json(stable_filtration(spec.base, spec.extension, spec.policy), spec.extension)
                              << "\n";
                }
            });
            if (worst == kOk) worst = code;
        }
        return worst;
    }
    if (*jet) {
        return guarded("jet", [&] {
            BaseRing base = BaseRing::parse(base_text);
            LSeries image = apply_jet(universal_jet(base, level), base.parse_element(element));
            if (json)
                std::cout << nlohmann::ordered_json{{"image", image.to_string()}}.dump() << "\n";
            else
                std::cout << image.to_string() << "\n";
        });
    }
    if (*witt) {
        return guarded("witt-polys", [&] {
            auto polys = witt_structure_polys(p, n);
            const auto names = polys->variable_names();
            if (json) {
                nlohmann::ordered_json j{{"p", p}, {"n", n}};
                j["S"] = nlohmann::ordered_json::array();
                j["P"] = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < n; ++i) {
                    j["S"].push_back(polys->S[i].to_string(names));
                    j["P"].push_back(polys->P[i].to_string(names));
                }
                std::cout << j.dump() << "\n";
                return;
            }
            for (std::size_t i = 0; i < n; ++i) std::cout << "S" << i << " = " << polys->S[i].to_string(names) << "\n";
            for (std::size_t i = 0; i < n; ++i) std::cout << "P" << i << " = " << polys->P[i].to_string(names) << "\n";
        });
    }
    // selftest
    SelftestOptions options{filter, corrupt, golden_dir};
    std::vector<CriterionResult> results = run_selftest(options);
    bool ok = !results.empty();
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const CriterionResult& r : results) {
        ok = ok && r.pass;
        if (json)
            j.push_back({{"id", r.id}, {"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
            std::cout << format_result(r) << "\n";
    }
    if (json) std::cout << j.dump() << "\n";
    if (results.empty()) std::cerr << "no criteria match '" << filter << "'\n";
    return ok ? kOk : kFailure;
}
