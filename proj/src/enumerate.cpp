#include <algorithm>
#include <stdexcept>

#include "hsect/lattice/enumerate.hpp"

namespace hsect {

namespace {

// floor(mu + sqrt(rho)), rho >= 0, exact
Int floor_mu_plus_sqrt(const Rat& mu, const Rat& rho) {
    Int s = isqrt(rho.get_num() * rho.get_den()) / rho.get_den();  // floor(sqrt(rho))
    Int hi = floor_div(mu.get_num(), mu.get_den()) + s + 2;
    auto pred = [&](const Int& n) {
        Rat d = Rat(n) - mu;
        if (d <= 0) return true;
        return d * d <= rho;
    };
    while (!pred(hi)) --hi;
    return hi;
}

Int ceil_mu_minus_sqrt(const Rat& mu, const Rat& rho) { return -floor_mu_plus_sqrt(-mu, rho); }

// Q(v) = sum_i d_i (v_i + sum_{j>i} q_ij v_j)^2 over v = z - t, z integral.
// Levels processed from m-1 down to 0; s[i] carries sum_{j>i} q_ij v_j.
struct FpCtx {
    const std::vector<RatVec>& q;
    const RatVec& t;
    std::vector<IntVec>& out;
    IntVec z;
    RatVec s;
};

void fp_recurse(FpCtx& ctx, std::size_t level, const Rat& rem) {
    const Rat& d = ctx.q[level][level];
    Rat rho = rem / d;
    // w = z - t[level] + s[level]; |w| <= sqrt(rho): center mu = t[level] - s[level]
    Rat mu = ctx.t[level] - ctx.s[level];
    Int lo = ceil_mu_minus_sqrt(mu, rho);
    Int hi = floor_mu_plus_sqrt(mu, rho);
    for (Int zi = lo; zi <= hi; ++zi) {
        Rat w = Rat(zi) - mu;
        Rat used = d * w * w;
        if (used > rem) continue;
        ctx.z[level] = zi;
        if (level == 0) {
            if (used == rem) ctx.out.push_back(ctx.z);
            continue;
        }
        Rat v = Rat(zi) - ctx.t[level];
        RatVec saved(level);
        for (std::size_t i = 0; i < level; ++i) {
            saved[i] = ctx.s[i];
            ctx.s[i] += ctx.q[i][level] * v;
        }
        fp_recurse(ctx, level - 1, rem - used);
        for (std::size_t i = 0; i < level; ++i) ctx.s[i] = saved[i];
    }
}

}  // namespace

std::vector<IntVec> vectors_with(const PolarizedLattice& n, const Int& norm, const Int& pairing) {
    if (norm > 0) throw std::invalid_argument("vectors_with: norm must be <= 0");
    Inertia sig = inertia(n.gram);
    if (sig.sigma_plus != 1 || sig.sigma_zero != 0)
        throw std::invalid_argument("vectors_with: lattice must be hyperbolic nondegenerate");

    std::size_t nn = n.rank();
    IntVec gh = n.gram * n.h;
    IntMat row(1, nn);
    for (std::size_t j = 0; j < nn; ++j) row(0, j) = gh[j];
    IntVec u0;
    if (!solve_integer(row, IntVec{pairing}, u0)) return {};

    std::vector<IntVec> w = integer_kernel(row);  // h-perp basis
    std::size_t m = w.size();
    if (m != nn - 1) throw std::runtime_error("vectors_with: unexpected h-perp rank");

    if (m == 0) {
        if (n.norm(u0) == norm) return {u0};
        return {};
    }

    // x = u0 + W z: z^T A z + 2 c^T z = u0.u0 - norm with A = -(W^T G W) > 0,
    // c_i = -(u0 . w_i)
    IntMat a(m, m);
    std::vector<IntVec> gw(m);
    for (std::size_t i = 0; i < m; ++i) gw[i] = n.gram * w[i];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = -dot(gw[i], w[j]);
    RatVec c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = Rat(-dot(gw[i], u0));
    Rat r0 = Rat(n.norm(u0) - norm);

    // complete the square: t = -A^{-1} c, (z-t)^T A (z-t) = r0 - t.c
    RatVec t = solve_rational(a, c);
    for (Rat& x : t) x = -x;
    Rat r = r0;
    for (std::size_t i = 0; i < m; ++i) r -= t[i] * c[i];
    if (r < 0) return {};

    // LDL^T data in Fincke-Pohst layout: q[i][i] = d_i, q[i][j] = L_ji (j > i)
    std::vector<RatVec> q(m, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) q[i][j] = Rat(a(i, j));
    for (std::size_t i = 0; i < m; ++i) {
        if (q[i][i] <= 0) throw std::runtime_error("vectors_with: h-perp not definite");
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat f = q[i][j] / q[i][i];
            for (std::size_t k = j; k < m; ++k) q[j][k] -= f * q[i][k];
            q[i][j] = f;
        }
    }

    std::vector<IntVec> zs;
    FpCtx ctx{q, t, zs, IntVec(m), RatVec(m, Rat(0))};
    fp_recurse(ctx, m - 1, r);

    std::vector<IntVec> out;
    out.reserve(zs.size());
    for (const IntVec& zz : zs) {
        IntVec x = u0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < nn; ++k) x[k] += zz[i] * w[i][k];
        if (n.norm(x) != norm || n.pair_h(x) != pairing)
            throw std::runtime_error("vectors_with: internal verification failed");
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_m_admissible(const PolarizedLattice& n, int m) {
    if (!vectors_with(n, -2, 0).empty()) return false;
    for (int r = 1; r <= m; ++r)
        if (!vectors_with(n, 0, r).empty()) return false;
    return true;
}

}  // namespace hsect
