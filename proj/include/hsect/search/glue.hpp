#pragma once

#include "hsect/fragment/fragments.hpp"

namespace hsect {

// Perfect induced subgraphs of h up to Aut(h): each outside vertex is
// adjacent to at most one subgraph vertex. Complement = outside vertices
// with no subgraph neighbor.
struct PerfectSubgraph {
    std::vector<std::size_t> delta;
    std::vector<std::size_t> complement;
};

std::vector<PerfectSubgraph> perfect_subgraphs(const Multigraph& h);

// All admissible unions Gamma_0 u H with strictly increased rank, up to
// isomorphism. frags0 = fragment occurrences of Gamma_0 (pairwise filters and
// the attachment constraints run against them).
std::vector<Multigraph> gluings(const Multigraph& g0, const std::vector<FragmentOccurrence>& frags0,
                                const std::vector<Multigraph>& catalogue, std::size_t htype,
                                const Int& degree);

// One-vertex extensions (u^2 = -2, u.h = 1, u.v in {0,1}) that keep the
// lattice hyperbolic and 2-admissible and strictly increase the rank.
std::vector<Multigraph> vertex_extensions(const Multigraph& g0,
                                          const std::vector<FragmentOccurrence>& frags0, const Int& degree);

}  // namespace hsect
