#pragma once

#include <ostream>

#include "domcert/polytope.hpp"

namespace domcert {

enum class Tier { Quick = 0, Standard = 1, Long = 2 };

struct CatalogResult {
    std::string id;
    std::string name;
    Tier tier = Tier::Quick;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0;
};

// Built-in reproduction suite: counting cross-checks, certified growth-rate
// bounds, and stored-certificate verification.  Items above max_tier are
// reported as skipped.  Prints one line per item; returns the number of
// failures among the items that ran.
int run_catalog(Tier max_tier, const std::string &data_dir, std::ostream &out,
                std::vector<CatalogResult> *results = nullptr);

}  // namespace domcert
