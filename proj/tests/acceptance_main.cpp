// One line per acceptance criterion; exit status 1 if any fails.
#include "hrep/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    hrep::AcceptanceOptions o;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0)
            o.quick = true;
    bool ok = true;
    for (const auto& r : hrep::run_acceptance(o)) {
        std::cout << hrep::format_line(r) << std::endl;
        ok = ok && r.pass;
    }
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
    return ok ? 0 : 1;
}
