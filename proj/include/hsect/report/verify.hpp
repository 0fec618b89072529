#pragma once

#include "hsect/report/tables.hpp"
#include "hsect/search/search.hpp"

namespace hsect {

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "pass" : "FAIL") + "  " + what);
    }
    void note(const std::string& what) { lines.push_back("      " + what); }
};

// fragment census + invariants + encoding bijection against the tables
VerifyReport verify_fragments(long degree);

// full search versus the published configuration data
VerifyReport verify_search(long degree, int workers, long node_budget = -1);

// range driver used by the CLI
VerifyReport verify_range(long lo, long hi, bool fragments_only, int workers);

// map: catalogue position -> published fragment index - 1 (by encoding keys)
std::vector<std::size_t> catalogue_to_published(long degree);

}  // namespace hsect
