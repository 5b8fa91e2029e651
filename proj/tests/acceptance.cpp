// Acceptance gate: runs the reproduction suite and prints one PASS/FAIL line
// per criterion.  Exit status is the number of failed criteria (0 = all good).
#include <cstring>
#include <iostream>

#include "domcert/catalog.hpp"

int main(int argc, char **argv) {
    domcert::Tier tier = domcert::Tier::Quick;
    std::string data_dir = "data";
    for (int i = 1; i < argc; i++) {
        if (!std::strcmp(argv[i], "--quick"))
            tier = domcert::Tier::Quick;
        else if (!std::strcmp(argv[i], "--standard"))
            tier = domcert::Tier::Standard;
        else if (!std::strcmp(argv[i], "--long"))
            tier = domcert::Tier::Long;
        else if (!std::strcmp(argv[i], "--data-dir") && i + 1 < argc)
            data_dir = argv[++i];
        else {
            std::cerr << "usage: acceptance [--quick|--standard|--long] [--data-dir DIR]\n";
            return 64;
        }
    }
    int failures = domcert::run_catalog(tier, data_dir, std::cout);
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures;
}
