// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <iostream>

#include "hyperramsey/acceptance.hpp"

int main() {
    hyperramsey::AcceptanceOptions opt;
    opt.golden_dir = HYPERRAMSEY_GOLDEN_DIR;
    bool ok = true;
    for (const auto& r : hyperramsey::run_acceptance(opt)) {
        std::cout << hyperramsey::format_result(r) << std::endl;
        ok = ok && r.outcome == hyperramsey::Outcome::pass;
    }
    return ok ? 0 : 1;
}
