#include <stdexcept>

#include "hsect/lattice/lattice.hpp"

namespace hsect {

PolarizedLattice::PolarizedLattice(IntMat g, IntVec hh) : gram(std::move(g)), h(std::move(hh)) {
    degree = pair_with(gram, h, h);
}

bool is_even(const IntMat& gram) {
    for (std::size_t i = 0; i < gram.rows(); ++i)
        if (mod_floor(gram(i, i), 2) != 0) return false;
    return true;
}

void validate_lattice(const PolarizedLattice& n) {
    if (!n.gram.is_symmetric()) throw std::invalid_argument("lattice: gram not symmetric");
    if (!is_even(n.gram)) throw std::invalid_argument("lattice: gram not even");
    if (n.h.size() != n.gram.rows()) throw std::invalid_argument("lattice: h dimension mismatch");
    if (n.degree <= 0) throw std::invalid_argument("lattice: h^2 must be positive");
    if (det(n.gram) == 0) throw std::invalid_argument("lattice: gram degenerate");
}

RatVec solve_rational(const IntMat& a, const RatVec& b) {
    std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_rational: shape");
    std::vector<RatVec> m(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("solve_rational: singular");
        std::swap(m[c], m[p]);
        Rat piv = m[c][c];
        for (std::size_t j = c; j <= n; ++j) m[c][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

}  // namespace hsect
