#pragma once

#include "hsect/graph/dynkin.hpp"
#include "hsect/search/glue.hpp"

namespace hsect {

// fragments through a line; multiplicity = count
std::vector<FragmentOccurrence> bouquet_at(const Multigraph& g, std::size_t line,
                                           const std::vector<Multigraph>& catalogue);
long multiplicity_at(const Multigraph& g, std::size_t line, const std::vector<Multigraph>& catalogue);

// Dynkin components of the induced graph on the neighbors of a line
std::vector<DynkinClass> star_decomposition(const Multigraph& g, std::size_t line);

// counts of A2 / A1 components in the star
struct StarShape {
    int p = 0;        // A2 (triangle) components
    int q = 0;        // A1 components
    bool other = false;
};
StarShape star_shape(const Multigraph& g, std::size_t line);

// Hnum <= (max mult / 2d) * |Fn|
struct QuarticBound {
    long mult_cap;
    long fn_cap;
    long bound;
};
QuarticBound quartic_bound(long mult_cap, long fn_cap);
// the derived chain (6,48) -> 72 and (5,48) -> 60
std::vector<QuarticBound> quartic_bound_report();

// the (p, q) star table for smooth quartics: q_max indexed by p = 0..6
const std::vector<int>& quartic_star_table();

// hyperelliptic census (degree 2, 4, 6, 8); n bounds enforced
// degree 2: values {|Fn|/2}; degree 4: {n1*n2}; degree 6/8: binomials C(m, d-1)
std::vector<Int> hyperelliptic_census(const Int& degree, long n1, long n2 = -1);

// the hyperelliptic multigraph models of section 8: ell-pair + n double-edge
// pairs (degree 2: the pair alone with a triple edge)
Multigraph hyperelliptic_model(const Int& degree, long n, bool with_lines = true);

}  // namespace hsect
