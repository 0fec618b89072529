#pragma once

#include <functional>

#include "hsect/search/glue.hpp"

namespace hsect {

struct SearchConfig {
    Int degree;
    int workers = 1;
    long node_budget = -1;  // processed-node limit, -1 = unlimited
    int r_min = 18;         // switch to one-vertex mode at this rank (2d <= 12)
    int report_min = 1;     // census threshold for the geometric-graph report
    bool long_run = false;  // gate for the degree-6 full enumeration
    std::string checkpoint_path;
};

struct HConfiguration {
    Multigraph graph;
    Int degree;
    std::vector<long> census;  // per catalogue fragment type
    long total = 0;
    int rank = 0;
    Int aut = 1;
    std::string key;
    bool geometric = false;  // the configuration graph is itself geometric
    bool maximal = false;
    std::string witness_kernel;  // kernel generators of the witness extension
};

struct GeometricGraphRecord {
    Multigraph graph;
    std::vector<long> census;
    long total = 0;
    int rank = 0;
    std::string key;
};

struct SearchResult {
    Int degree;
    std::vector<HConfiguration> configs;          // sorted by canonical key
    std::vector<GeometricGraphRecord> geometric;  // census >= report_min
    bool complete = true;
    long nodes = 0;
    long max_total = 0;
};

// The fragment-gluing search: every h-configuration of the degree, with a
// geometric witness. Degrees 2 and 4 are outside the completeness contract;
// degree 6 requires long_run.
SearchResult search(const SearchConfig& cfg);

// Geometric saturations of one admissible graph: Fn of each 2-geometric
// finite index extension of its Fano lattice.
std::vector<Multigraph> geometric_saturations(const Multigraph& g, const Int& degree);

}  // namespace hsect
