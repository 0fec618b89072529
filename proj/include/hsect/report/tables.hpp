#pragma once

#include <string>
#include <vector>

namespace hsect {

// Published reference values: per-degree fragment rows (encoding and the
// (r, g, s) triple), the configuration counts, and the per-configuration
// censuses indexed by the published fragment numbering.
struct ExpectedFragment {
    int index;  // published numbering within the degree
    std::string encoding;
    int r;
    int g;
    long s;
};

struct ExpectedDegree {
    long degree;
    std::vector<ExpectedFragment> fragments;
    long max_hnum;      // -1 where unknown
    long config_count;  // -1 where unknown / out of scope
    // census vectors (indexed by published fragment index - 1) with multiplicity
    std::vector<std::pair<std::vector<long>, int>> censuses;
};

const std::vector<ExpectedDegree>& expected_table();
const ExpectedDegree* expected_for(long degree);

// saturated bouquet sizes of cube fragments at degree 8
const std::vector<long>& expected_bouquet_sizes_deg8();

}  // namespace hsect
