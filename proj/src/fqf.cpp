#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hsect/lattice/fqf.hpp"

namespace hsect {

namespace {

Rat mod2(const Rat& x) { return mod_rat(x, Rat(2)); }
Rat mod1(const Rat& x) { return mod_rat(x, Rat(1)); }

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> ps;
    n = abs(n);
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mod_floor(n, p) == 0) {
            ps.push_back(p);
            while (mod_floor(n, p) == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// p-valuation of a nonzero rational
int val_p(const Rat& x, const Int& p) {
    int v = 0;
    Int num = abs(x.get_num()), den = x.get_den();
    while (mod_floor(den, p) == 0) {
        den /= p;
        --v;
    }
    while (num != 0 && mod_floor(num, p) == 0) {
        num /= p;
        ++v;
    }
    return v;
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(IntVec orders, RatVec qv, std::vector<RatVec> bv)
    : orders_(std::move(orders)), q_(std::move(qv)), b_(std::move(bv)) {
    std::size_t k = orders_.size();
    if (q_.size() != k || b_.size() != k) throw std::invalid_argument("fqf: shape mismatch");
    for (std::size_t i = 0; i < k; ++i) {
        if (orders_[i] <= 1) throw std::invalid_argument("fqf: generator order must be > 1");
        q_[i] = mod2(q_[i]);
        if (b_[i].size() != k) throw std::invalid_argument("fqf: shape mismatch");
        for (std::size_t j = 0; j < k; ++j) b_[i][j] = mod1(b_[i][j]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (mod1(q_[i]) != b_[i][i]) throw std::invalid_argument("fqf: b(g,g) != q(g) mod Z");
        if (mod2(Rat(orders_[i] * orders_[i]) * q_[i]) != 0)
            throw std::invalid_argument("fqf: q denominator exceeds order");
        for (std::size_t j = 0; j < k; ++j) {
            if (b_[i][j] != b_[j][i]) throw std::invalid_argument("fqf: b not symmetric");
            if (mod1(Rat(orders_[i]) * b_[i][j]) != 0)
                throw std::invalid_argument("fqf: b denominator exceeds order");
        }
    }
}

Int FiniteQuadraticForm::group_order() const {
    Int n = 1;
    for (const Int& d : orders_) n *= d;
    return n;
}

Int FiniteQuadraticForm::exponent() const {
    Int e = 1;
    for (const Int& d : orders_) e = lcm(e, d);
    return e;
}

IntVec FiniteQuadraticForm::reduce(IntVec x) const {
    for (std::size_t i = 0; i < orders_.size(); ++i) x[i] = mod_floor(x[i], orders_[i]);
    return x;
}

Rat FiniteQuadraticForm::q_of(const IntVec& x) const {
    Rat s = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (x[i] == 0) continue;
        s += Rat(x[i] * x[i]) * q_[i];
        for (std::size_t j = i + 1; j < orders_.size(); ++j)
            if (x[j] != 0) s += Rat(2 * x[i] * x[j]) * b_[i][j];
    }
    return mod2(s);
}

Rat FiniteQuadraticForm::b_of(const IntVec& x, const IntVec& y) const {
    Rat s = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < orders_.size(); ++j) {
            if (y[j] == 0) continue;
            if (i == j)
                s += Rat(x[i] * y[i]) * b_[i][i];
            else
                s += Rat(x[i] * y[j]) * b_[i][j];
        }
    }
    return mod1(s);
}

Int FiniteQuadraticForm::order_of(const IntVec& x) const {
    Int o = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (mod_floor(x[i], orders_[i]) == 0) continue;
        Int d = orders_[i] / gcd(mod_floor(x[i], orders_[i]), orders_[i]);
        o = lcm(o, d);
    }
    return o;
}

std::vector<IntVec> FiniteQuadraticForm::all_elements(unsigned long cap) const {
    Int total = group_order();
    if (total > Int(cap)) throw std::runtime_error("fqf: group too large to enumerate: " + total.get_str());
    std::vector<IntVec> out;
    if (orders_.empty()) {
        out.push_back(IntVec{});
        return out;
    }
    out.reserve(total.get_ui());
    IntVec cur(orders_.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < orders_.size()) {
            cur[i] += 1;
            if (cur[i] < orders_[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == orders_.size()) break;
    }
    return out;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
    RatVec q2(q_.size());
    std::vector<RatVec> b2(b_.size(), RatVec(b_.size()));
    for (std::size_t i = 0; i < q_.size(); ++i) {
        q2[i] = mod2(-q_[i]);
        for (std::size_t j = 0; j < q_.size(); ++j) b2[i][j] = mod1(-b_[i][j]);
    }
    return FiniteQuadraticForm(orders_, q2, b2);
}

FiniteQuadraticForm FiniteQuadraticForm::direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    IntVec orders = a.orders_;
    orders.insert(orders.end(), b.orders_.begin(), b.orders_.end());
    RatVec q = a.q_;
    q.insert(q.end(), b.q_.begin(), b.q_.end());
    std::size_t n = orders.size(), na = a.orders_.size();
    std::vector<RatVec> bb(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) bb[i][j] = a.b_[i][j];
    for (std::size_t i = na; i < n; ++i)
        for (std::size_t j = na; j < n; ++j) bb[i][j] = b.b_[i - na][j - na];
    return FiniteQuadraticForm(orders, q, bb);
}

int FiniteQuadraticForm::length_at(const Int& p) const {
    int l = 0;
    for (const Int& d : orders_)
        if (mod_floor(d, p) == 0) ++l;
    return l;
}

std::vector<int> FiniteQuadraticForm::scale_ranks(const Int& p) const {
    std::vector<int> r;
    for (const Int& d : orders_) {
        Int m = d;
        int k = 0;
        while (mod_floor(m, p) == 0) {
            m /= p;
            ++k;
        }
        if (k == 0) continue;
        if (static_cast<std::size_t>(k) > r.size()) r.resize(k, 0);
        ++r[k - 1];
    }
    return r;
}

std::vector<FiniteQuadraticForm::PrimaryPart> FiniteQuadraticForm::primary_decomposition() const {
    std::set<Int> primes;
    for (const Int& d : orders_)
        for (const Int& p : prime_factors(d)) primes.insert(p);
    std::vector<PrimaryPart> parts;
    for (const Int& p : primes) {
        PrimaryPart part;
        part.p = p;
        IntVec orders;
        std::vector<IntVec> lifts;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            Int d = orders_[i];
            Int pk = 1;
            while (mod_floor(d, p) == 0) {
                d /= p;
                pk *= p;
            }
            if (pk == 1) continue;
            IntVec lift(orders_.size(), 0);
            lift[i] = orders_[i] / pk;  // (d_i / p^k) g_i has order p^k
            orders.push_back(pk);
            lifts.push_back(std::move(lift));
        }
        RatVec q(orders.size());
        std::vector<RatVec> b(orders.size(), RatVec(orders.size()));
        for (std::size_t i = 0; i < orders.size(); ++i) {
            q[i] = q_of(lifts[i]);
            for (std::size_t j = 0; j < orders.size(); ++j) b[i][j] = b_of(lifts[i], lifts[j]);
        }
        part.form = FiniteQuadraticForm(orders, q, b);
        part.lifts = lifts;
        parts.push_back(std::move(part));
    }
    return parts;
}

DiscriminantData discriminant_form(const IntMat& gram) {
    if (!gram.is_symmetric() || !is_even(gram)) throw std::invalid_argument("discriminant_form: even symmetric gram required");
    if (det(gram) == 0) throw std::invalid_argument("discriminant_form: degenerate gram");
    SmithForm f = smith_normal_form(gram);
    std::size_t n = gram.rows();
    DiscriminantData out;
    IntVec orders;
    std::vector<RatVec> coords;
    for (std::size_t i = 0; i < n; ++i) {
        Int di = f.d(i, i);
        if (di == 1) continue;
        RatVec x(n);
        for (std::size_t r = 0; r < n; ++r) x[r] = rat(f.v(r, i), di);
        orders.push_back(di);
        coords.push_back(std::move(x));
    }
    std::size_t k = orders.size();
    RatVec q(k);
    std::vector<RatVec> b(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            Rat s = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (gram(r, c) != 0) s += coords[i][r] * Rat(gram(r, c)) * coords[j][c];
            if (i == j) {
                q[i] = mod_rat(s, Rat(2));
                b[i][i] = mod_rat(s, Rat(1));
            } else {
                b[i][j] = b[j][i] = mod_rat(s, Rat(1));
            }
        }
    }
    out.form = FiniteQuadraticForm(orders, q, b);
    out.gen_coords = coords;
    return out;
}

// ---------------------------------------------------------------------------
// Gauss sums over 2-groups, exact arithmetic in Z[zeta], zeta = e^{i pi/2^m},
// represented in Z[x]/(x^{2^m} + 1).

Gauss2 gauss2(const FiniteQuadraticForm& q2, int j) {
    for (const Int& d : q2.orders()) {
        Int m = d;
        while (mod_floor(m, 2) == 0) m /= 2;
        if (m != 1) throw std::invalid_argument("gauss2: form not on a 2-group");
    }
    Int e = q2.exponent();
    int K = 2;
    while (pow_int(2, K) < 2 * e) ++K;
    const long dimL = to_long(pow_int(2, K));
    const Int dim = dimL;
    std::vector<Int> acc(dimL, 0);
    Int scale = pow_int(2, static_cast<unsigned long>(j));
    for (const IntVec& x : q2.all_elements()) {
        Rat ph = mod_rat(Rat(scale) * q2.q_of(x), Rat(2));  // in [0,2)
        Rat t = ph * Rat(dim);                              // e^{i pi ph} = zeta^t
        if (t.get_den() != 1) throw std::runtime_error("gauss2: phase not a 2-power root of unity");
        Int ti = mod_floor(t.get_num(), 2 * dim);
        if (ti < dim)
            acc[to_long(ti)] += 1;
        else
            acc[to_long(ti - dim)] -= 1;  // zeta^{2^m} = -1
    }
    bool zero = true;
    for (const Int& c : acc)
        if (c != 0) zero = false;
    if (zero) return Gauss2{true, 0, 0};

    auto mul_zeta_pow = [&](std::vector<Int>& v, long t) {
        t = ((t % (2 * dimL)) + 2 * dimL) % (2 * dimL);
        std::vector<Int> w(dimL, 0);
        for (long a = 0; a < dimL; ++a) {
            if (v[a] == 0) continue;
            long s = (a + t) % (2 * dimL);
            if (s < dimL)
                w[s] += v[a];
            else
                w[s - dimL] -= v[a];
        }
        v = std::move(w);
    };

    // |G|^2 = G * conj(G)
    std::vector<Int> prod(dimL, 0);
    for (long a = 0; a < dimL; ++a) {
        if (acc[a] == 0) continue;
        for (long b = 0; b < dimL; ++b) {
            if (acc[b] == 0) continue;
            long t = a - b;
            Int c = acc[a] * acc[b];
            t = ((t % (2 * dimL)) + 2 * dimL) % (2 * dimL);
            if (t < dimL)
                prod[t] += c;
            else
                prod[t - dimL] -= c;
        }
    }
    for (long t = 1; t < dimL; ++t)
        if (prod[t] != 0) throw std::runtime_error("gauss2: |G|^2 not rational");
    Int mag2 = prod[0];
    if (mag2 <= 0) throw std::runtime_error("gauss2: |G|^2 not positive");
    int nu = 0;
    Int m2 = mag2;
    while (mod_floor(m2, 2) == 0) {
        m2 /= 2;
        ++nu;
    }
    if (m2 != 1) throw std::runtime_error("gauss2: |G|^2 not a power of 2");

    const long z8 = dimL / 4;  // zeta^{z8} = zeta_8
    for (int sigma = 0; sigma < 8; ++sigma) {
        std::vector<Int> cand(dimL, 0);
        cand[0] = 1;
        for (int i = 0; i < nu; ++i) {
            // multiply by sqrt(2) = zeta_8 + zeta_8^{-1}
            std::vector<Int> w = cand, w2 = cand;
            mul_zeta_pow(w, z8);
            mul_zeta_pow(w2, -z8);
            for (long a = 0; a < dimL; ++a) w[a] += w2[a];
            cand = std::move(w);
        }
        mul_zeta_pow(cand, sigma * z8);
        if (cand == acc) return Gauss2{false, nu, sigma};
    }
    throw std::runtime_error("gauss2: phase is not an 8th root of unity");
}

// ---------------------------------------------------------------------------
// odd primary diagonalization

std::vector<OddBlock> diagonalize_odd(const FiniteQuadraticForm& qp, const Int& p) {
    if (p == 2) throw std::invalid_argument("diagonalize_odd: p must be odd");
    struct Gen {
        IntVec v;
        Int order;
    };
    std::vector<Gen> pending;
    for (std::size_t i = 0; i < qp.gens(); ++i) {
        IntVec e(qp.gens(), 0);
        e[i] = 1;
        pending.push_back({e, qp.orders()[i]});
    }
    std::vector<OddBlock> blocks;
    const int INF = 1 << 28;
    while (!pending.empty()) {
        // minimal p-valuation over all q-values and pairings
        int vmin = INF, di = -1;
        int oij_i = -1, oij_j = -1, ovmin = INF;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            Rat qq = qp.q_of(pending[i].v);
            if (qq != 0) {
                int v = val_p(qq, p);
                if (v < vmin) {
                    vmin = v;
                    di = static_cast<int>(i);
                }
            }
            for (std::size_t j = i + 1; j < pending.size(); ++j) {
                Rat bb = qp.b_of(pending[i].v, pending[j].v);
                if (bb != 0) {
                    int v = val_p(bb, p);
                    if (v < ovmin) {
                        ovmin = v;
                        oij_i = static_cast<int>(i);
                        oij_j = static_cast<int>(j);
                    }
                }
            }
        }
        if (di < 0 && oij_i < 0) throw std::runtime_error("diagonalize_odd: degenerate form");
        if (oij_i >= 0 && ovmin < vmin) {
            // promote the off-diagonal minimum to the diagonal: x_i += x_j
            for (std::size_t r = 0; r < pending[oij_i].v.size(); ++r)
                pending[oij_i].v[r] += pending[oij_j].v[r];
            pending[oij_i].v = qp.reduce(pending[oij_i].v);
            pending[oij_i].order = qp.order_of(pending[oij_i].v);
            continue;
        }
        Gen g = pending[di];
        pending.erase(pending.begin() + di);
        Int og = qp.order_of(g.v);
        Rat bgg = mod_rat(qp.q_of(g.v), Rat(1));  // b(g,g), minimal valuation
        for (Gen& x : pending) {
            Rat bxg = qp.b_of(x.v, g.v);
            if (bxg == 0) continue;
            Rat ratio = bxg / bgg;  // p-integral by pivot choice
            Int num = ratio.get_num(), den = ratio.get_den();
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), og.get_mpz_t()) == 0)
                throw std::runtime_error("diagonalize_odd: inversion failed");
            Int c = mod_floor(num * inv, og);
            for (std::size_t r = 0; r < x.v.size(); ++r) x.v[r] -= c * g.v[r];
            x.v = qp.reduce(x.v);
            x.order = qp.order_of(x.v);
        }
        pending.erase(std::remove_if(pending.begin(), pending.end(), [](const Gen& x) { return x.order == 1; }),
                      pending.end());
        Rat qq = qp.q_of(g.v);
        Int pk = og;
        int k = 0;
        for (Int t = pk; t > 1; t /= p) ++k;
        Rat v = qq * Rat(pk);
        if (v.get_den() != 1) throw std::runtime_error("diagonalize_odd: unexpected denominator");
        Int vv = mod_floor(v.get_num(), 2 * pk);
        if (gcd(vv, p) != 1) throw std::runtime_error("diagonalize_odd: block value not a unit");
        blocks.push_back(OddBlock{k, vv});
    }
    // sanity: the blocks account for the whole group
    Int tot = 1;
    for (const OddBlock& blk : blocks) tot *= pow_int(p, blk.k);
    if (tot != qp.group_order()) throw std::runtime_error("diagonalize_odd: block orders mismatch");
    return blocks;
}

// signature mod 8 of <v/p^k>: writing q(g) = 2a/p^k, k even gives 0;
// k odd gives 0/4 (p = 1 mod 4) or 2/6 (p = 3 mod 4) according to chi_p(a).
// Cross-checked against Milgram on explicit lattices in the test suite.
static int odd_block_signature(const Int& p, const OddBlock& blk) {
    if (blk.k % 2 == 0) return 0;
    Int inv2, two = 2;
    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
    Int a = mod_floor(blk.v * inv2, p);
    int chi = mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
    int base = (mod_floor(p, 4) == 1) ? 0 : 2;
    return (chi == 1) ? base : (base + 4) % 8;
}

int signature_mod8(const FiniteQuadraticForm& q) {
    int sig = 0;
    for (const auto& part : q.primary_decomposition()) {
        if (part.p == 2) {
            Gauss2 g = gauss2(part.form, 0);
            if (g.zero) throw std::runtime_error("signature_mod8: degenerate 2-part");
            sig += g.sigma;
        } else {
            for (const OddBlock& blk : diagonalize_odd(part.form, part.p)) sig += odd_block_signature(part.p, blk);
        }
    }
    return ((sig % 8) + 8) % 8;
}

// ---------------------------------------------------------------------------
// isomorphism test

namespace {

std::multiset<std::pair<std::string, std::string>> value_histogram(const FiniteQuadraticForm& f) {
    std::multiset<std::pair<std::string, std::string>> h;
    for (const IntVec& x : f.all_elements()) h.insert({f.order_of(x).get_str(), f.q_of(x).get_str()});
    return h;
}

bool extend_isomorphism(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                        const std::vector<IntVec>& belems, std::vector<IntVec>& images, std::size_t i) {
    if (i == a.gens()) {
        // images must generate B: covolume of the coefficient lattice is 1
        std::size_t k = b.gens();
        IntMat gen(images.size() + k, k);
        for (std::size_t r = 0; r < images.size(); ++r)
            for (std::size_t c = 0; c < k; ++c) gen(r, c) = images[r][c];
        for (std::size_t c = 0; c < k; ++c) gen(images.size() + c, c) = b.orders()[c];
        IntMat h = hnf_rows(gen);
        Int cov = 1;
        for (std::size_t c = 0; c < k; ++c) cov *= h(c, c);
        return cov == 1;
    }
    IntVec ei(a.gens(), 0);
    ei[i] = 1;
    Rat qi = a.q_of(ei);
    for (const IntVec& y : belems) {
        if (b.order_of(y) != a.orders()[i]) continue;
        if (b.q_of(y) != qi) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
            IntVec ej(a.gens(), 0);
            ej[j] = 1;
            if (b.b_of(y, images[j]) != a.b_of(ei, ej)) ok = false;
        }
        if (!ok) continue;
        images.push_back(y);
        if (extend_isomorphism(a, b, belems, images, i + 1)) return true;
        images.pop_back();
    }
    return false;
}

}  // namespace

bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    if (a.group_order() != b.group_order()) return false;
    for (const Int& p : prime_factors(a.group_order()))
        if (a.scale_ranks(p) != b.scale_ranks(p)) return false;
    if (value_histogram(a) != value_histogram(b)) return false;
    std::vector<IntVec> belems = b.all_elements();
    std::vector<IntVec> images;
    return extend_isomorphism(a, b, belems, images, 0);
}

// ---------------------------------------------------------------------------
// isotropic subgroups

namespace {

IntMat subgroup_hnf(const FiniteQuadraticForm& q, const std::vector<IntVec>& gens) {
    std::size_t k = q.gens();
    IntMat m(gens.size() + k, k);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < k; ++c) m(r, c) = gens[r][c];
    for (std::size_t c = 0; c < k; ++c) m(gens.size() + c, c) = q.orders()[c];
    return hnf_rows(m);
}

std::string hnf_key(const IntMat& h, std::size_t k) {
    std::string s;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            s += h(r, c).get_str();
            s += ',';
        }
    return s;
}

}  // namespace

std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& q) {
    std::vector<IntVec> iso;
    for (const IntVec& x : q.all_elements()) {
        bool zero = true;
        for (const Int& c : x)
            if (c != 0) zero = false;
        if (!zero && q.q_of(x) == 0) iso.push_back(x);
    }
    std::size_t k = q.gens();
    std::map<std::string, IsotropicSubgroup> seen;
    {
        IsotropicSubgroup trivial;
        seen[hnf_key(subgroup_hnf(q, {}), k)] = trivial;
    }
    std::vector<std::vector<IntVec>> frontier = {{}};
    while (!frontier.empty()) {
        std::vector<std::vector<IntVec>> next;
        for (const auto& gens : frontier) {
            for (const IntVec& x : iso) {
                // q vanishes on <gens, x> iff q(x) = 0 and b(x, g) = 0 for all g
                bool ok = true;
                for (const IntVec& g : gens)
                    if (q.b_of(x, g) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto gens2 = gens;
                gens2.push_back(x);
                IntMat h = subgroup_hnf(q, gens2);
                std::string key = hnf_key(h, k);
                if (seen.count(key)) continue;
                Int cov = 1;
                for (std::size_t c = 0; c < k; ++c) cov *= h(c, c);
                IsotropicSubgroup sg;
                sg.gens = gens2;
                sg.order = q.group_order() / cov;
                seen[key] = sg;
                next.push_back(std::move(gens2));
            }
        }
        frontier = std::move(next);
    }
    std::vector<IsotropicSubgroup> out;
    out.reserve(seen.size());
    for (auto& [kk, v] : seen) out.push_back(std::move(v));
    return out;
}

}  // namespace hsect
