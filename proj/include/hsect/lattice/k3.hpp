#pragma once

#include "hsect/lattice/enumerate.hpp"
#include "hsect/lattice/extend.hpp"

namespace hsect {

enum class Embed { yes, no, unknown };

// Existence of an even lattice with the given signature and discriminant
// form (signature condition via Gauss sums, p-adic Jordan assembly at every
// prime, exact).
bool even_lattice_exists(int t_plus, int t_minus, const FiniteQuadraticForm& q);

// Primitive embedding into the K3 lattice 2E8 + 3U: rank <= 11 is always
// embeddable; otherwise decided by existence of the complementary lattice of
// signature (2, 20-rank) with form -q.
Embed embeds_in_K3(const PolarizedLattice& n);

bool is_geometric(const PolarizedLattice& n, int m);
bool is_subgeometric(const PolarizedLattice& n, int m);

// Extensions whose overlattice is m-geometric ("m-geometric kernels").
std::vector<Extension> geometric_extensions(const PolarizedLattice& n, int m);

}  // namespace hsect
