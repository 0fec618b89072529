#pragma once

#include "hsect/exact/int.hpp"
#include "hsect/graph/multigraph.hpp"

namespace hsect {

struct CanonicalForm {
    std::string key;        // equal iff graphs isomorphic (multiplicity-aware)
    Int aut_order;          // exact |Aut|
    std::vector<std::size_t> labeling;  // canonical position of each vertex
};

// Iterated degree/distance refinement with multiplicity-aware colors,
// backtracking over the orbit tree; leaves realizing the minimal adjacency
// string are counted (they form a single Aut-torsor).
CanonicalForm canonical_form(const Multigraph& g);

// cached canonical key only
std::string canonical_key(const Multigraph& g);
Int aut_order(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace hsect
