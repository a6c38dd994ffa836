#include <iostream>

#include "artin/selftest.hpp"

// One line per acceptance criterion; exit status 1 if any fails.
int main() {
    artin::SelftestOptions options;
    options.golden_dir = ARTIN_GOLDEN_DIR;
    bool ok = true;
    for (const artin::CriterionResult& r : artin::run_selftest(options)) {
        std::cout << artin::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
