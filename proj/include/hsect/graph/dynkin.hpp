#pragma once

#include "hsect/exact/int.hpp"
#include "hsect/graph/multigraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hsect {

// Order on affine diagrams: Milnor number first, then A < D < E.
struct DynkinLabel {
    char family = 'A';
    int index = 0;     // Milnor number
    bool affine = false;

    std::string str() const;
    bool operator==(const DynkinLabel&) const = default;
    bool operator<(const DynkinLabel& o) const {
        if (index != o.index) return index < o.index;
        return family < o.family;
    }
};

struct DynkinClass {
    enum Kind { elliptic, affine, neither } kind = neither;
    DynkinLabel label;
    std::vector<Int> fundamental_cycle;  // kappa, affine only; kappa . v = 0 for all v
    // vertex roles for encoding purposes (affine A: cyclic order; D~: leaves first)
    std::vector<std::size_t> order;  // canonical vertex traversal
};

// Exact ADE / affine-ADE recognition of a connected multigraph.
DynkinClass dynkin_classify(const Multigraph& component);

// Standard affine diagram as a multigraph, for induced-subgraph probes.
Multigraph affine_diagram(const DynkinLabel& l);

// Taxonomy of a hyperbolic graph: minimal affine Phi, fibers Pi, sections.
struct PhiTaxonomy {
    DynkinLabel phi_label;
    std::vector<std::size_t> phi;                 // vertices of the chosen Phi
    std::vector<std::vector<std::size_t>> fibers; // components of Pi (Phi first)
    std::vector<std::size_t> sections;
};

// Throws if the graph has no affine induced subgraph.
PhiTaxonomy phi_taxonomy(const Multigraph& g);

// minimal affine label present in g (nullopt if none)
std::optional<DynkinLabel> minimal_affine_label(const Multigraph& g);

}  // namespace hsect
