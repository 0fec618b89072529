#pragma once

#include "hsect/graph/canonical.hpp"
#include "hsect/graph/multigraph.hpp"
#include "hsect/lattice/k3.hpp"

namespace hsect {

// Fano_2d(Gamma) = (Z Gamma + Z h)/ker with u.u = -2, u.h = 1, u.v = mult.
struct FanoLattice {
    PolarizedLattice lattice;            // radical quotient, h recorded
    std::vector<IntVec> vertex_image;    // image of each graph vertex
    std::size_t kernel_rank = 0;
    std::vector<IntVec> kernel_basis;    // in (vertices..., h) coordinates
};

FanoLattice fano_lattice(const Multigraph& g, const Int& degree);

// Fn(N, h) = {u : u.u = -2, u.h = 1} with edges weighted by pairings.
struct FanoGraph {
    Multigraph graph;
    std::vector<IntVec> vectors;  // lattice coordinates per vertex
};

FanoGraph fano_graph(const PolarizedLattice& n);

// sat Gamma = Fn Fano_2d(Gamma); optionally through a finite index extension.
// Returns the saturation plus the positions of the original vertices in it.
struct Saturation {
    FanoGraph fano;
    std::vector<std::size_t> original_pos;  // index of each input vertex
    PolarizedLattice lattice;               // lattice of the saturation
};

Saturation saturate(const Multigraph& g, const Int& degree);
Saturation saturate_extended(const Multigraph& g, const Int& degree, const Extension& e,
                             const FanoLattice& base);

// all induced occurrences (vertex sets) of each catalogue graph
struct FragmentOccurrence {
    std::size_t type;  // index into the catalogue
    std::vector<std::size_t> vertices;
};

std::vector<FragmentOccurrence> find_fragments(const Multigraph& g, const std::vector<Multigraph>& catalogue);

// induced occurrences of one pattern, as sorted vertex sets
std::vector<std::vector<std::size_t>> find_induced(const Multigraph& host, const Multigraph& pattern);
bool has_induced(const Multigraph& host, const Multigraph& pattern);

// hp Gamma: union of all fragment vertex sets inside sat Gamma
struct HPart {
    Multigraph graph;
    std::vector<std::size_t> sat_vertices;  // positions in the saturation
    std::vector<FragmentOccurrence> fragments;  // relative to hp graph
};

HPart h_part(const Multigraph& g, const Int& degree, const std::vector<Multigraph>& catalogue);

}  // namespace hsect
