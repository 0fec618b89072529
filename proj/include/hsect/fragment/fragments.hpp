#pragma once

#include "hsect/fragment/fano.hpp"

namespace hsect {

// An h-fragment: 3-regular graph on 2d vertices whose Fano lattice is
// hyperbolic and 2-subgeometric, with its invariants (r, g, s) and encoding.
struct HFragment {
    Multigraph graph;
    Int degree;
    int rank = 0;
    int girth = 0;
    Int aut = 1;
    std::string encoding;
    std::string key;  // canonical
};

// |H| = 2d, 3-regular, sigma_+ = 1 and 2-subgeometric.
bool fragment_check(const Multigraph& g, const Int& degree);

// Complete catalogue for one degree, up to isomorphism, sorted by
// (r, g, s, key). Taxonomy search over the allowed fiber families with
// multisections permitted for 2d <= 8; results cached.
const std::vector<HFragment>& enumerate_fragments(const Int& degree);

// just the graphs, aligned with the catalogue order
std::vector<Multigraph> fragment_graphs(const Int& degree);

}  // namespace hsect
