#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "hsect/lattice/k3.hpp"

namespace hsect {

namespace {

// unit class in {1,3,5,7} of the prime-to-2 part of d (sign folded in mod 8)
int unit_class_2(Int d) {
    while (mod_floor(d, 2) == 0) d /= 2;
    return static_cast<int>(mod_floor(d, 8).get_ui());
}

// Legendre-style unit class test at odd p: true if u is a square unit mod p
bool is_square_unit(Int u, const Int& p) {
    u = mod_floor(u, p);
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
}

Int unit_part(Int d, const Int& p) {
    while (d != 0 && mod_floor(d, p) == 0) d /= p;
    return d;
}

struct Block2 {
    FiniteQuadraticForm form;  // 2-primary discriminant form of the block
    int det_class;             // unit class of det in {1,3,5,7}
    std::vector<Gauss2> sig;   // gauss2(form, j) for j = 0..J
};

// gram of x*U + y*V + diag(eps), scaled by 2^k
IntMat block_gram(int k, int x, int y, const std::vector<int>& eps) {
    std::size_t r = 2 * x + 2 * y + eps.size();
    IntMat g(r, r);
    Int s = pow_int(2, k);
    std::size_t at = 0;
    for (int i = 0; i < x; ++i) {
        g(at, at + 1) = s;
        g(at + 1, at) = s;
        at += 2;
    }
    for (int i = 0; i < y; ++i) {
        g(at, at) = 2 * s;
        g(at + 1, at + 1) = 2 * s;
        g(at, at + 1) = s;
        g(at + 1, at) = s;
        at += 2;
    }
    for (int e : eps) {
        g(at, at) = Int(e) * s;
        ++at;
    }
    return g;
}

// all candidate scale-k Jordan blocks of rank r, deduplicated by invariants
std::vector<Block2> scale_candidates(int k, int r, int maxJ) {
    std::vector<Block2> out;
    std::map<std::string, bool> seen;
    auto add = [&](int x, int y, const std::vector<int>& eps) {
        IntMat g = block_gram(k, x, y, eps);
        Block2 b;
        auto parts = discriminant_form(g).form.primary_decomposition();
        for (auto& p : parts)
            if (p.p == 2) b.form = p.form;
        b.det_class = unit_class_2(det(g));
        for (int j = 0; j <= maxJ; ++j) b.sig.push_back(gauss2(b.form, j));
        std::ostringstream key;
        key << b.det_class;
        for (const Gauss2& s : b.sig) key << "|" << s.zero << "," << s.nu << "," << s.sigma;
        // distinguish forms with equal coarse invariants by the value histogram
        std::multiset<std::string> vals;
        for (const IntVec& xx : b.form.all_elements()) vals.insert(b.form.q_of(xx).get_str());
        for (const auto& v : vals) key << ";" << v;
        if (seen.count(key.str())) return;
        seen[key.str()] = true;
        out.push_back(std::move(b));
    };
    // even type
    if (r % 2 == 0 && r > 0) {
        add(r / 2, 0, {});
        if (r >= 2) add(r / 2 - 1, 1, {});
    }
    // odd/mixed type: diag part of size j >= 1
    static const int units[4] = {1, 3, 5, 7};
    for (int j = 1; j <= r; ++j) {
        if ((r - j) % 2 != 0) continue;
        int pairs = (r - j) / 2;
        // multisets of units of size j
        std::vector<int> eps(j, 0);
        std::function<void(int, int)> rec = [&](int pos, int from) {
            if (pos == j) {
                for (int y = 0; y <= std::min(1, pairs); ++y) add(pairs - y, y, eps);
                return;
            }
            for (int u = from; u < 4; ++u) {
                eps[pos] = units[u];
                rec(pos + 1, u);
            }
        };
        rec(0, 0);
    }
    return out;
}

// p = 2 local existence: assemble Jordan blocks matching q2 with target det class
bool local2_exists(int n_rank, int target_det_class, const FiniteQuadraticForm& q2) {
    std::vector<int> rk = q2.scale_ranks(2);
    int l2 = 0;
    for (int r : rk) l2 += r;
    int m0 = n_rank - l2;
    if (m0 < 0 || m0 % 2 != 0) return false;
    // J_0 det classes
    std::vector<int> j0dets;
    if (m0 == 0)
        j0dets = {1};
    else {
        std::set<int> s;
        for (int x = 0; x <= m0 / 2; ++x) {
            int d = 1;
            for (int i = 0; i < x; ++i) d = d * 7 % 8;
            for (int i = 0; i < m0 / 2 - x; ++i) d = d * 3 % 8;
            s.insert(d);
        }
        j0dets.assign(s.begin(), s.end());
    }
    int maxJ = static_cast<int>(rk.size()) + 1;
    std::vector<Gauss2> target;
    for (int j = 0; j <= maxJ; ++j) target.push_back(gauss2(q2, j));

    std::vector<std::vector<Block2>> cands;
    for (std::size_t k = 0; k < rk.size(); ++k) {
        if (rk[k] == 0) {
            Block2 empty;
            empty.det_class = 1;
            for (int j = 0; j <= maxJ; ++j) empty.sig.push_back(Gauss2{false, 0, 0});
            cands.push_back({empty});
        } else {
            cands.push_back(scale_candidates(static_cast<int>(k) + 1, rk[k], maxJ));
        }
    }

    // product over scales with sigma-vector pruning, constructive check at leaves
    std::vector<const Block2*> choice(cands.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t at) -> bool {
        if (at == cands.size()) {
            // det check
            int d = 1;
            for (const Block2* b : choice) d = d * b->det_class % 8;
            bool detok = false;
            for (int j0 : j0dets)
                if (j0 * d % 8 == target_det_class) detok = true;
            if (!detok) return false;
            // sigma vector check
            for (int j = 0; j <= maxJ; ++j) {
                Gauss2 acc{false, 0, 0};
                for (const Block2* b : choice) {
                    const Gauss2& s = b->sig[j];
                    if (s.zero) acc.zero = true;
                    acc.nu += s.nu;
                    acc.sigma = (acc.sigma + s.sigma) % 8;
                }
                const Gauss2& t = target[j];
                if (acc.zero != t.zero) return false;
                if (!acc.zero && (acc.nu != t.nu || acc.sigma != t.sigma)) return false;
            }
            // constructive isomorphism
            FiniteQuadraticForm cand;
            for (const Block2* b : choice) cand = FiniteQuadraticForm::direct_sum(cand, b->form);
            return fqf_isomorphic(cand, q2);
        }
        for (const Block2& b : cands[at]) {
            choice[at] = &b;
            if (rec(at + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

std::mutex cache_mu;
std::map<std::string, bool> exists_cache;

}  // namespace

bool even_lattice_exists(int t_plus, int t_minus, const FiniteQuadraticForm& q) {
    if (t_plus < 0 || t_minus < 0) return false;
    int n = t_plus + t_minus;
    if (n == 0) return q.gens() == 0;

    std::ostringstream key;
    key << t_plus << "/" << t_minus << "/";
    for (std::size_t i = 0; i < q.gens(); ++i) {
        key << q.orders()[i].get_str() << ":";
        IntVec e(q.gens(), 0);
        e[i] = 1;
        key << q.q_of(e).get_str() << ":";
        for (std::size_t j = 0; j < q.gens(); ++j) {
            IntVec f(q.gens(), 0);
            f[j] = 1;
            key << q.b_of(e, f).get_str() << ",";
        }
        key << ";";
    }
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = exists_cache.find(key.str());
        if (it != exists_cache.end()) return it->second;
    }

    auto result = [&](bool v) {
        std::lock_guard<std::mutex> lock(cache_mu);
        exists_cache[key.str()] = v;
        return v;
    };

    Int a_order = q.group_order();
    // rank >= l_p(A) for every p
    auto parts = q.primary_decomposition();
    for (const auto& part : parts)
        if (n < part.form.length_at(part.p)) return result(false);

    // signature mod 8 (Milgram)
    int sig = q.gens() ? signature_mod8(q) : 0;
    if (((t_plus - t_minus) % 8 + 8) % 8 != sig) return result(false);

    Int target_det = (t_minus % 2 == 0) ? a_order : -a_order;

    bool has2 = false;
    for (const auto& part : parts) {
        if (part.p == 2) {
            has2 = true;
            if (!local2_exists(n, unit_class_2(target_det), part.form)) return result(false);
        } else {
            int lp = part.form.length_at(part.p);
            if (n > lp) continue;
            // rank equals l_p: the p-adic Jordan form is pinned, determinant must match
            Int kdet = 1;
            for (const OddBlock& blk : diagonalize_odd(part.form, part.p)) {
                // block <v/p^k> comes from lattice block <u p^k> with chi(u) = chi(v')
                // where q(g) = v/p^k = 1/(u p^k) mod 2Z_p: chi(u) = chi(v inverse) = chi(v)
                kdet *= blk.v;
            }
            Int tgt = unit_part(target_det, part.p);
            if (is_square_unit(kdet * tgt, part.p) == false) return result(false);
        }
    }
    if (!has2) {
        // evenness at 2 with trivial 2-part: need an even unimodular 2-adic
        // lattice of rank n with the right determinant class
        FiniteQuadraticForm trivial;
        if (!local2_exists(n, unit_class_2(target_det), trivial)) return result(false);
    }
    return result(true);
}

Embed embeds_in_K3(const PolarizedLattice& n) {
    Inertia sig = inertia(n.gram);
    if (sig.sigma_plus != 1 || sig.sigma_zero != 0)
        throw std::invalid_argument("embeds_in_K3: hyperbolic nondegenerate lattice required");
    int r = static_cast<int>(n.rank());
    if (r > 20) return Embed::no;
    if (r <= 11) return Embed::yes;  // half-rank criterion for 2E8 + 3U
    FiniteQuadraticForm qt = discriminant_form(n).form.negated();
    return even_lattice_exists(2, 20 - r, qt) ? Embed::yes : Embed::no;
}

bool is_geometric(const PolarizedLattice& n, int m) {
    if (!is_m_admissible(n, m)) return false;
    return embeds_in_K3(n) == Embed::yes;
}

std::vector<Extension> geometric_extensions(const PolarizedLattice& n, int m) {
    std::vector<Extension> out;
    for (Extension& e : finite_index_extensions(n)) {
        Inertia sig = inertia(e.lattice.gram);
        if (sig.sigma_plus != 1 || sig.sigma_zero != 0) continue;
        if (is_geometric(e.lattice, m)) out.push_back(std::move(e));
    }
    return out;
}

bool is_subgeometric(const PolarizedLattice& n, int m) { return !geometric_extensions(n, m).empty(); }

}  // namespace hsect
