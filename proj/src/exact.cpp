#include <algorithm>
#include <stdexcept>

#include "hsect/exact/inertia.hpp"
#include "hsect/exact/snf.hpp"

namespace hsect {

namespace {

// abs-smallest nonzero entry of m in the block starting at (s, s)
bool find_pivot(const IntMat& m, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < m.rows(); ++i)
        for (std::size_t j = s; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
    SmithForm f{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
    IntMat& d = f.d;
    std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t s = 0; s < n; ++s) {
        std::size_t pi, pj;
        if (!find_pivot(d, s, pi, pj)) break;
        d.swap_rows(s, pi);
        f.u.swap_rows(s, pi);
        d.swap_cols(s, pj);
        f.v.swap_cols(s, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = s + 1; i < d.rows(); ++i) {
                if (d(i, s) == 0) continue;
                Int q = floor_div(d(i, s), d(s, s));
                d.add_row(i, s, -q);
                f.u.add_row(i, s, -q);
                if (d(i, s) != 0) {
                    // remainder strictly smaller, promote it to pivot
                    d.swap_rows(s, i);
                    f.u.swap_rows(s, i);
                    clean = false;
                }
            }
            for (std::size_t j = s + 1; j < d.cols(); ++j) {
                if (d(s, j) == 0) continue;
                Int q = floor_div(d(s, j), d(s, s));
                d.add_col(j, s, -q);
                f.v.add_col(j, s, -q);
                if (d(s, j) != 0) {
                    d.swap_cols(s, j);
                    f.v.swap_cols(s, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (d(s, s) < 0) {
            d.negate_row(s);
            f.u.negate_row(s);
        }
    }

    // enforce divisibility chain d_i | d_{i+1}
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d(i, i) != 0 && (d(i + 1, i + 1) % d(i, i) != 0)) {
                ok = false;
                // fold d_{i+1} into the pivot position and re-reduce the 2x2 block
                d.add_col(i, i + 1, 1);
                f.v.add_col(i, i + 1, 1);
                // clear the new off-diagonal entries by a local SNF pass
                for (;;) {
                    if (d(i + 1, i) != 0) {
                        Int q = floor_div(d(i + 1, i), d(i, i));
                        d.add_row(i + 1, i, -q);
                        f.u.add_row(i + 1, i, -q);
                        if (d(i + 1, i) != 0) {
                            d.swap_rows(i, i + 1);
                            f.u.swap_rows(i, i + 1);
                            continue;
                        }
                    }
                    if (d(i, i + 1) != 0) {
                        Int q = floor_div(d(i, i + 1), d(i, i));
                        d.add_col(i + 1, i, -q);
                        f.v.add_col(i + 1, i, -q);
                        if (d(i, i + 1) != 0) {
                            d.swap_cols(i, i + 1);
                            f.v.swap_cols(i, i + 1);
                            continue;
                        }
                    }
                    break;
                }
                if (d(i, i) < 0) {
                    d.negate_row(i);
                    f.u.negate_row(i);
                }
                if (d(i + 1, i + 1) < 0) {
                    d.negate_row(i + 1);
                    f.u.negate_row(i + 1);
                }
            }
        }
        if (ok) break;
    }
    // zero diagonal entries sort to the end already (pivots always found first)
    return f;
}

std::vector<IntVec> integer_kernel(const IntMat& m) {
    SmithForm f = smith_normal_form(m);
    std::vector<IntVec> basis;
    std::size_t n = m.cols();
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = j >= m.rows() || f.d(j, j) == 0;
        if (!zero) continue;
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = f.v(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_integer(const IntMat& m, const IntVec& b, IntVec& x) {
    SmithForm f = smith_normal_form(m);
    IntVec c = f.u * b;  // d y = c with x = v y
    IntVec y(m.cols());
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int di = (i < n) ? f.d(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return false;
        } else {
            if (c[i] % di != 0) return false;
            y[i] = c[i] / di;
        }
    }
    x = f.v * y;
    return true;
}

IntMat hnf_rows(const IntMat& m) {
    IntMat h = m;
    std::size_t r = 0;  // current pivot row
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // reduce column c below row r by gcd steps
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
            }
            if (best == h.rows()) break;  // column zero below r
            h.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Int q = floor_div(h(i, c), h(r, c));
                h.add_row(i, r, -q);
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            h.add_row(i, r, -q);
        }
        ++r;
    }
    return h;
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    // fraction-free Gaussian elimination (Bareiss)
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Inertia inertia(const IntMat& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("inertia: symmetric matrix required");
    std::size_t n = m.rows();
    // rational symmetric Gauss; pivot on nonzero diagonal first, else clear an
    // off-diagonal 2x2 block by a row+col move (keeps the form symmetric)
    std::vector<RatVec> a(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));

    Inertia sig;
    std::vector<bool> used(n, false);
    for (;;) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!used[i] && a[i][i] != 0) p = i;
        if (p == n) {
            // all remaining diagonal zero: find off-diagonal entry
            std::size_t i0 = n, j0 = n;
            for (std::size_t i = 0; i < n && i0 == n; ++i) {
                if (used[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!used[j] && j != i && a[i][j] != 0) {
                        i0 = i;
                        j0 = j;
                        break;
                    }
            }
            if (i0 == n) break;  // remaining block is zero
            // row/col i0 += row/col j0 makes a[i0][i0] = 2 a[i0][j0] != 0
            for (std::size_t k = 0; k < n; ++k) a[i0][k] += a[j0][k];
            for (std::size_t k = 0; k < n; ++k) a[k][i0] += a[k][j0];
            p = i0;
        }
        used[p] = true;
        const Rat piv = a[p][p];
        if (piv > 0)
            ++sig.sigma_plus;
        else
            ++sig.sigma_minus;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || a[i][p] == 0) continue;
            Rat c = a[i][p] / piv;
            for (std::size_t k = 0; k < n; ++k) a[i][k] -= c * a[p][k];
            for (std::size_t k = 0; k < n; ++k) a[k][i] -= c * a[k][p];
        }
    }
    sig.sigma_zero = static_cast<int>(n) - sig.sigma_plus - sig.sigma_minus;
    return sig;
}

std::vector<Int> char_poly(const IntMat& m) {
    std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_{k+1} = m (M_k + c_{n-k} I); divisions are exact
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMat mk = IntMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        Int ck = -tr / Int(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

Inertia inertia_charpoly(const IntMat& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("inertia: symmetric matrix required");
    std::vector<Int> c = char_poly(m);
    std::size_t n = m.rows();
    Inertia sig;
    // sigma_zero = multiplicity of the root 0
    std::size_t z = 0;
    while (z <= n && c[z] == 0) ++z;
    sig.sigma_zero = static_cast<int>(z);
    // Descartes' rule is exact when all roots are real: positive roots of
    // p(x)/x^z counted by sign changes in its coefficients
    int changes = 0;
    int last = 0;
    for (std::size_t k = z; k <= n; ++k) {
        if (c[k] == 0) continue;
        int s = sgn(c[k]);
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    sig.sigma_plus = changes;
    sig.sigma_minus = static_cast<int>(n) - sig.sigma_zero - sig.sigma_plus;
    return sig;
}

RadicalQuotient radical_quotient(const IntMat& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("radical_quotient: symmetric matrix required");
    SmithForm f = smith_normal_form(m);
    RadicalQuotient rq;
    std::size_t n = m.cols();
    for (std::size_t j = 0; j < n; ++j) {
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = f.v(i, j);
        if (f.d(j, j) == 0)
            rq.kernel_basis.push_back(std::move(v));
        else
            rq.complement.push_back(std::move(v));
    }
    std::size_t r = rq.complement.size();
    rq.quotient_gram = IntMat(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        IntVec mi = m * rq.complement[i];
        for (std::size_t j = 0; j < r; ++j) rq.quotient_gram(i, j) = dot(mi, rq.complement[j]);
    }
    return rq;
}

}  // namespace hsect
