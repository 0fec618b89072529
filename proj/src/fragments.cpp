#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "hsect/fragment/encoding.hpp"
#include "hsect/fragment/fragments.hpp"

namespace hsect {

namespace {

// sigma_+ of the Fano lattice; 2 means "prune the branch"
int sigma_plus_of(const Multigraph& g, const Int& degree) {
    std::size_t n = g.size();
    IntMat gram(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        gram(i, i) = -2;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) gram(i, j) = g.mult(i, j);
        gram(i, n) = 1;
        gram(n, i) = 1;
    }
    gram(n, n) = degree;
    return inertia(gram).sigma_plus;
}

// partial prune: hyperbolic and 2-admissible
bool partial_ok(const Multigraph& g, const Int& degree) {
    if (sigma_plus_of(g, degree) != 1) return false;
    FanoLattice fl = fano_lattice(g, degree);
    return is_m_admissible(fl.lattice, 2);
}

struct BranchState {
    Int degree;
    std::size_t girth_min;
    Multigraph g;                 // grows: Phi + sections first, fibers appended
    std::size_t sections_at;      // index of section 0
    std::size_t nsections;
    std::vector<int> cap;         // per-section remaining capacity
    std::vector<Multigraph>* out;
};

void collect(BranchState& st) { st.out->push_back(st.g); }

bool girth_ok(const Multigraph& g, std::size_t gmin) {
    int gg = g.girth();
    return gg == 0 || static_cast<std::size_t>(gg) >= gmin;
}

// ---- section-section edges ------------------------------------------------

void edge_fill(BranchState& st, std::size_t from_i, std::size_t from_j) {
    std::size_t S = st.nsections;
    std::size_t i = 0;
    while (i < S && st.cap[i] == 0) ++i;
    if (i == S) {
        if (girth_ok(st.g, st.girth_min)) collect(st);
        return;
    }
    std::size_t jstart = (i == from_i) ? from_j : i + 1;
    for (std::size_t j = jstart; j < S; ++j) {
        if (j == i || st.cap[j] == 0) continue;
        std::size_t vi = st.sections_at + i, vj = st.sections_at + j;
        if (st.g.mult(vi, vj) > 0) continue;
        st.g.set_mult(vi, vj, 1);
        --st.cap[i];
        --st.cap[j];
        if (girth_ok(st.g, st.girth_min)) edge_fill(st, i, j + 1);
        st.g.set_mult(vi, vj, 0);
        ++st.cap[i];
        ++st.cap[j];
    }
}

// ---- elliptic fibers --------------------------------------------------------

struct EllipticPlan {
    std::vector<int> sizes;  // path lengths (or 4 for the D4 star in DD branch)
    bool d4 = false;         // set per-entry via size marker -4
};

// slots for A_m: (2, 1, ..., 1, 2); m = 1 gives a single slot of 3
std::vector<int> path_slots(int m) {
    if (m == 1) return {3};
    std::vector<int> s(m, 1);
    s[0] = 2;
    s[m - 1] = 2;
    return s;
}

void place_elliptic(BranchState& st, const std::vector<int>& sizes, std::size_t at,
                    const std::string& prev_sig);

void next_elliptic_or_edges(BranchState& st, const std::vector<int>& sizes, std::size_t at,
                            const std::string& sig) {
    if (!partial_ok(st.g, st.degree)) return;
    place_elliptic(st, sizes, at + 1, sig);
}

// enumerate one elliptic fiber's section assignment
void place_elliptic(BranchState& st, const std::vector<int>& sizes, std::size_t at,
                    const std::string& prev_sig) {
    if (at == sizes.size()) {
        edge_fill(st, 0, 1);
        return;
    }
    int size = sizes[at];
    std::size_t S = st.nsections;
    bool same_as_prev = at > 0 && sizes[at - 1] == size;

    if (size == -4) {
        // D4 star: center + 3 leaves, each leaf two distinct sections
        std::vector<std::vector<int>> pairs;
        for (std::size_t a = 0; a < S; ++a)
            for (std::size_t b = a + 1; b < S; ++b) pairs.push_back({static_cast<int>(a), static_cast<int>(b)});
        std::function<void(std::size_t, std::vector<std::size_t>&, std::set<int>&)> rec =
            [&](std::size_t k, std::vector<std::size_t>& chosen, std::set<int>& used) {
                if (k == 3) {
                    // build
                    Multigraph save = st.g;
                    auto capsave = st.cap;
                    std::size_t base = st.g.size();
                    for (int t = 0; t < 4; ++t) st.g.add_vertex();
                    for (int t = 0; t < 3; ++t) st.g.set_mult(base + 3, base + t, 1);
                    bool ok = true;
                    for (int t = 0; t < 3 && ok; ++t)
                        for (int id : pairs[chosen[t]]) {
                            if (st.cap[id] == 0) {
                                ok = false;
                                break;
                            }
                            --st.cap[id];
                            st.g.add_edge(base + t, st.sections_at + id);
                        }
                    if (ok && girth_ok(st.g, st.girth_min)) {
                        std::string sig = "D4";
                        for (std::size_t c : chosen) sig += ":" + std::to_string(c);
                        if (!same_as_prev || sig >= prev_sig) next_elliptic_or_edges(st, sizes, at, sig);
                    }
                    st.g = std::move(save);
                    st.cap = std::move(capsave);
                    return;
                }
                for (std::size_t p = (k && chosen[k - 1] + 1 > 0 ? chosen[k - 1] + 1 : 0); p < pairs.size(); ++p) {
                    bool clash = false;
                    for (int id : pairs[p])
                        if (used.count(id)) clash = true;
                    if (clash) continue;
                    chosen.push_back(p);
                    for (int id : pairs[p]) used.insert(id);
                    rec(k + 1, chosen, used);
                    for (int id : pairs[p]) used.erase(id);
                    chosen.pop_back();
                }
            };
        std::vector<std::size_t> chosen;
        std::set<int> used;
        rec(0, chosen, used);
        return;
    }

    std::vector<int> slots = path_slots(size);
    // choose distinct sections per slot; canonical under path reversal
    std::vector<std::vector<int>> assign(slots.size());
    std::function<void(std::size_t, std::set<int>&)> rec = [&](std::size_t k, std::set<int>& used) {
        if (k == slots.size()) {
            // canonical orientation: tuple <= reversed tuple
            std::vector<std::vector<int>> fwd = assign, rev(assign.rbegin(), assign.rend());
            if (rev < fwd) return;
            std::string sig = "A" + std::to_string(size);
            for (auto& grp : fwd)
                for (int id : grp) sig += ":" + std::to_string(id);
            if (same_as_prev && sig < prev_sig) return;
            Multigraph save = st.g;
            auto capsave = st.cap;
            std::size_t base = st.g.size();
            for (int t = 0; t < size; ++t) st.g.add_vertex();
            for (int t = 0; t + 1 < size; ++t) st.g.set_mult(base + t, base + t + 1, 1);
            for (std::size_t t = 0; t < slots.size(); ++t)
                for (int id : assign[t]) {
                    --st.cap[id];
                    st.g.add_edge(base + t, st.sections_at + id);
                }
            if (girth_ok(st.g, st.girth_min)) next_elliptic_or_edges(st, sizes, at, sig);
            st.g = std::move(save);
            st.cap = std::move(capsave);
            return;
        }
        // pick slots[k] distinct unused sections with capacity, increasing ids
        std::vector<int> ids;
        std::function<void(int)> pick = [&](int from) {
            if (static_cast<int>(ids.size()) == slots[k]) {
                assign[k] = ids;
                for (int id : ids) used.insert(id);
                rec(k + 1, used);
                for (int id : ids) used.erase(id);
                return;
            }
            for (int id = from; id < static_cast<int>(S); ++id) {
                if (used.count(id) || st.cap[id] == 0) continue;
                ids.push_back(id);
                pick(id + 1);
                ids.pop_back();
            }
        };
        pick(0);
    };
    std::set<int> used;
    rec(0, used);
}

// ---- parabolic fibers -------------------------------------------------------

// attach one extra A~ fiber: cycle of S vertices, bijection to sections
void place_parabolic_cycles(BranchState& st, int remaining, const std::string& prev_sig,
                            const std::vector<int>& elliptic_sizes) {
    if (remaining == 0) {
        place_elliptic(st, elliptic_sizes, 0, "");
        return;
    }
    std::size_t S = st.nsections;
    std::vector<int> perm(S);
    for (std::size_t i = 0; i < S; ++i) perm[i] = static_cast<int>(i);
    // canonical necklaces: least among rotations/reflections, fixing perm[0]=0
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[0] != 0) break;  // rotations allow fixing the smallest first
        // reflection canonicity
        std::vector<int> refl(S);
        for (std::size_t i = 0; i < S; ++i) refl[i] = perm[(S - i) % S];
        // rotate refl so it starts at 0
        std::size_t z = std::find(refl.begin(), refl.end(), 0) - refl.begin();
        std::rotate(refl.begin(), refl.begin() + z, refl.end());
        if (refl < perm) continue;
        std::string sig;
        for (int p : perm) sig += ":" + std::to_string(p);
        if (!prev_sig.empty() && sig < prev_sig) continue;

        Multigraph save = st.g;
        auto capsave = st.cap;
        std::size_t base = st.g.size();
        for (std::size_t t = 0; t < S; ++t) st.g.add_vertex();
        for (std::size_t t = 0; t < S; ++t) st.g.set_mult(base + t, base + (t + 1) % S, 1);
        for (std::size_t t = 0; t < S; ++t) st.g.add_edge(base + t, st.sections_at + perm[t]);
        for (std::size_t i = 0; i < S; ++i) --st.cap[i];
        if (girth_ok(st.g, st.girth_min) && partial_ok(st.g, st.degree))
            place_parabolic_cycles(st, remaining - 1, sig, elliptic_sizes);
        st.g = std::move(save);
        st.cap = std::move(capsave);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// ---- A~n branch -------------------------------------------------------------

void branch_a(const Int& degree, int n, std::vector<Multigraph>& out) {
    std::size_t cyc = n + 1;
    long twod = to_long(degree);
    // base: cycle + sections
    Multigraph base(2 * cyc);
    for (std::size_t i = 0; i < cyc; ++i) {
        base.set_mult(i, (i + 1) % cyc, 1);
        base.set_mult(i, cyc + i, 1);
    }
    for (int pextra = 0; pextra <= 2; ++pextra) {
        long rest = twod - static_cast<long>(cyc) * (1 + pextra) - static_cast<long>(cyc);
        if (rest < 0) continue;
        int cap = 2 - pextra;
        if (cap < 0) continue;
        // elliptic size multisets, parts <= n-1, sum = rest
        std::vector<std::vector<int>> partitions;
        std::vector<int> cur;
        std::function<void(long, int)> part = [&](long left, int maxpart) {
            if (left == 0) {
                partitions.push_back(cur);
                return;
            }
            for (int p = std::min<long>(maxpart, left); p >= 1; --p) {
                cur.push_back(p);
                part(left - p, p);
                cur.pop_back();
            }
        };
        part(rest, n - 1);
        for (const auto& sizes : partitions) {
            long slots = 0;
            for (int s : sizes) slots += (s == 1) ? 3 : s + 2;
            long total_cap = static_cast<long>(cyc) * cap;
            if (slots > total_cap || (total_cap - slots) % 2 != 0) continue;
            BranchState st;
            st.degree = degree;
            st.girth_min = cyc;
            st.g = base;
            st.sections_at = cyc;
            st.nsections = cyc;
            st.cap.assign(cyc, cap);
            st.out = &out;
            if (!partial_ok(st.g, degree)) continue;
            place_parabolic_cycles(st, pextra, "", sizes);
        }
    }
}

// ---- D~5 branch --------------------------------------------------------------

// extra parabolic fiber kinds in the DD branch
enum class DdExtra { d5, a7 };

void place_dd_extras(BranchState& st, const std::vector<DdExtra>& extras, std::size_t at,
                     const std::string& prev_sig, const std::vector<int>& elliptic_sizes);

void place_one_dd(BranchState& st, const std::vector<DdExtra>& extras, std::size_t at,
                  const std::string& prev_sig, const std::vector<int>& elliptic_sizes) {
    // partition the 8 sections into 4 unordered pairs on the leaves, up to
    // the fiber's own symmetries (fork swaps and the fork exchange)
    std::vector<std::vector<int>> pairs;  // leaf i gets pairs[i]
    std::vector<bool> used(8, false);
    std::vector<std::vector<int>> chosen;
    std::function<void()> rec = [&]() {
        if (chosen.size() == 4) {
            // canonical under: swap within forks, swap forks
            std::vector<std::vector<int>> f1{chosen[0], chosen[1]}, f2{chosen[2], chosen[3]};
            std::sort(f1.begin(), f1.end());
            std::sort(f2.begin(), f2.end());
            if (std::vector<std::vector<std::vector<int>>>{f1, f2} !=
                std::min(std::vector<std::vector<std::vector<int>>>{f1, f2},
                         std::vector<std::vector<std::vector<int>>>{f2, f1}))
                return;
            if (chosen[0] > chosen[1] || chosen[2] > chosen[3]) return;
            std::string sig = "DD";
            for (auto& p : chosen) sig += ":" + std::to_string(p[0]) + "," + std::to_string(p[1]);
            bool same_as_prev = at > 0 && extras[at - 1] == DdExtra::d5;
            if (same_as_prev && sig < prev_sig) return;
            Multigraph save = st.g;
            auto capsave = st.cap;
            std::size_t base = st.g.size();
            for (int t = 0; t < 6; ++t) st.g.add_vertex();
            st.g.set_mult(base + 0, base + 4, 1);
            st.g.set_mult(base + 1, base + 4, 1);
            st.g.set_mult(base + 2, base + 5, 1);
            st.g.set_mult(base + 3, base + 5, 1);
            st.g.set_mult(base + 4, base + 5, 1);
            for (int t = 0; t < 4; ++t)
                for (int id : chosen[t]) {
                    --st.cap[id];
                    st.g.add_edge(base + t, st.sections_at + id);
                }
            if (girth_ok(st.g, st.girth_min) && partial_ok(st.g, st.degree))
                place_dd_extras(st, extras, at + 1, sig, elliptic_sizes);
            st.g = std::move(save);
            st.cap = std::move(capsave);
            return;
        }
        // first unused section anchors the next pair
        int a = 0;
        while (used[a]) ++a;
        for (int b = a + 1; b < 8; ++b) {
            if (used[b]) continue;
            used[a] = used[b] = true;
            chosen.push_back({a, b});
            rec();
            chosen.pop_back();
            used[a] = used[b] = false;
        }
    };
    rec();
}

void place_one_a7(BranchState& st, const std::vector<DdExtra>& extras, std::size_t at,
                  const std::string& prev_sig, const std::vector<int>& elliptic_sizes) {
    std::vector<int> perm(8);
    for (int i = 0; i < 8; ++i) perm[i] = i;
    do {
        if (perm[0] != 0) break;
        std::vector<int> refl(8);
        for (int i = 0; i < 8; ++i) refl[i] = perm[(8 - i) % 8];
        std::size_t z = std::find(refl.begin(), refl.end(), 0) - refl.begin();
        std::rotate(refl.begin(), refl.begin() + z, refl.end());
        if (refl < perm) continue;
        std::string sig = "A7";
        for (int p : perm) sig += ":" + std::to_string(p);
        bool same_as_prev = at > 0 && extras[at - 1] == DdExtra::a7;
        if (same_as_prev && sig < prev_sig) continue;
        Multigraph save = st.g;
        auto capsave = st.cap;
        std::size_t base = st.g.size();
        for (int t = 0; t < 8; ++t) st.g.add_vertex();
        for (int t = 0; t < 8; ++t) st.g.set_mult(base + t, base + (t + 1) % 8, 1);
        for (int t = 0; t < 8; ++t) {
            --st.cap[perm[t]];
            st.g.add_edge(base + t, st.sections_at + perm[t]);
        }
        if (girth_ok(st.g, st.girth_min) && partial_ok(st.g, st.degree))
            place_dd_extras(st, extras, at + 1, sig, elliptic_sizes);
        st.g = std::move(save);
        st.cap = std::move(capsave);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void place_dd_extras(BranchState& st, const std::vector<DdExtra>& extras, std::size_t at,
                     const std::string& prev_sig, const std::vector<int>& elliptic_sizes) {
    if (at == extras.size()) {
        place_elliptic(st, elliptic_sizes, 0, "");
        return;
    }
    if (extras[at] == DdExtra::d5)
        place_one_dd(st, extras, at, prev_sig, elliptic_sizes);
    else
        place_one_a7(st, extras, at, prev_sig, elliptic_sizes);
}

void branch_dd5(const Int& degree, std::vector<Multigraph>& out) {
    long twod = to_long(degree);
    if (twod < 14) return;
    // base: D~5 (a1..a4, b1, b2) + 8 sections, two per leaf
    Multigraph base(14);
    base.set_mult(0, 4, 1);
    base.set_mult(1, 4, 1);
    base.set_mult(2, 5, 1);
    base.set_mult(3, 5, 1);
    base.set_mult(4, 5, 1);
    for (int i = 0; i < 4; ++i) {
        base.set_mult(i, 6 + 2 * i, 1);
        base.set_mult(i, 6 + 2 * i + 1, 1);
    }
    // extras: multisets over {D~5 (6 vertices), A~7 (8 vertices)}, at most 2
    std::vector<std::vector<DdExtra>> extra_sets = {{},
                                                    {DdExtra::d5},
                                                    {DdExtra::a7},
                                                    {DdExtra::d5, DdExtra::d5},
                                                    {DdExtra::d5, DdExtra::a7},
                                                    {DdExtra::a7, DdExtra::a7}};
    for (const auto& extras : extra_sets) {
        long evtx = 0;
        for (DdExtra e : extras) evtx += (e == DdExtra::d5) ? 6 : 8;
        long rest = twod - 14 - evtx;
        if (rest < 0) continue;
        int cap = 2 - static_cast<int>(extras.size());
        if (cap < 0) continue;
        // elliptic multisets: A_m (m <= 6, m vertices) and D4 (4 vertices, marker -4)
        std::vector<std::vector<int>> plans;
        std::vector<int> cur;
        std::function<void(long, int, bool)> part = [&](long left, int maxpart, bool d4ok) {
            if (left == 0) {
                plans.push_back(cur);
                return;
            }
            if (d4ok && left >= 4) {
                cur.push_back(-4);
                part(left - 4, maxpart, true);
                cur.pop_back();
            }
            for (int p = std::min<long>(maxpart, left); p >= 1; --p) {
                cur.push_back(p);
                part(left - p, p, false);
                cur.pop_back();
            }
        };
        part(rest, 6, true);
        for (const auto& sizes : plans) {
            long slots = 0;
            for (int s : sizes) slots += (s == -4) ? 6 : (s == 1 ? 3 : s + 2);
            long total_cap = 8L * cap;
            if (slots > total_cap || (total_cap - slots) % 2 != 0) continue;
            BranchState st;
            st.degree = degree;
            st.girth_min = 7;
            st.g = base;
            st.sections_at = 6;
            st.nsections = 8;
            st.cap.assign(8, cap);
            st.out = &out;
            if (!partial_ok(st.g, degree)) continue;
            place_dd_extras(st, extras, 0, "", sizes);
        }
    }
}

// ---- multisection branches (2d <= 8) ----------------------------------------

// complete a seed to a 3-regular simple graph on exactly `target` vertices
void complete_to_cubic(Multigraph g, std::size_t target, std::vector<Multigraph>& out) {
    std::size_t u = g.size();
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.degree(v) < 3) {
            u = v;
            break;
        }
    if (u == g.size()) {
        if (g.size() == target) out.push_back(g);
        return;
    }
    for (std::size_t v = u + 1; v < g.size(); ++v) {
        if (g.degree(v) >= 3 || g.mult(u, v) > 0) continue;
        Multigraph g2 = g;
        g2.set_mult(u, v, 1);
        complete_to_cubic(std::move(g2), target, out);
    }
    if (g.size() < target) {
        Multigraph g2 = g;
        std::size_t w = g2.add_vertex();
        g2.set_mult(u, w, 1);
        complete_to_cubic(std::move(g2), target, out);
    }
}

void multisection_branches(const Int& degree, std::vector<Multigraph>& out) {
    long twod = to_long(degree);
    if (twod > 8) return;
    std::size_t target = static_cast<std::size_t>(twod);
    // A~2 with a triple section
    {
        Multigraph seed(4);
        seed.set_mult(0, 1, 1);
        seed.set_mult(1, 2, 1);
        seed.set_mult(0, 2, 1);
        for (int i = 0; i < 3; ++i) seed.set_mult(i, 3, 1);
        if (target >= 4) complete_to_cubic(seed, target, out);
    }
    // A~2 with a bisection
    {
        Multigraph seed(4);
        seed.set_mult(0, 1, 1);
        seed.set_mult(1, 2, 1);
        seed.set_mult(0, 2, 1);
        seed.set_mult(0, 3, 1);
        seed.set_mult(1, 3, 1);
        if (target >= 4) complete_to_cubic(seed, target, out);
    }
    // A~3 with a bisection
    {
        Multigraph seed(5);
        for (int i = 0; i < 4; ++i) seed.set_mult(i, (i + 1) % 4, 1);
        seed.set_mult(0, 4, 1);
        seed.set_mult(2, 4, 1);
        if (target >= 5) complete_to_cubic(seed, target, out);
    }
}

std::mutex cat_mu;
std::map<long, std::vector<HFragment>> cat_cache;

}  // namespace

bool fragment_check(const Multigraph& g, const Int& degree) {
    if (g.size() != static_cast<std::size_t>(to_long(degree))) return false;
    if (!g.regular(3)) return false;
    if (sigma_plus_of(g, degree) != 1) return false;
    FanoLattice fl = fano_lattice(g, degree);
    Inertia sig = inertia(fl.lattice.gram);
    if (sig.sigma_plus != 1 || sig.sigma_zero != 0) return false;
    return is_subgeometric(fl.lattice, 2);
}

const std::vector<HFragment>& enumerate_fragments(const Int& degree) {
    long twod = to_long(degree);
    {
        std::lock_guard<std::mutex> lock(cat_mu);
        auto it = cat_cache.find(twod);
        if (it != cat_cache.end()) return it->second;
    }
    if (twod < 2 || twod > 32 || twod % 2 != 0)
        throw std::invalid_argument("enumerate_fragments: degree must be even, 2 <= 2d <= 32");

    std::vector<Multigraph> candidates;
    if (twod == 2) {
        Multigraph g(2);
        g.set_mult(0, 1, 3);
        candidates.push_back(g);
    } else {
        for (int n = 2; n <= 5; ++n) branch_a(degree, n, candidates);
        branch_dd5(degree, candidates);
        multisection_branches(degree, candidates);
    }

    std::vector<HFragment> catalogue;
    std::set<std::string> seen;
    for (const Multigraph& g : candidates) {
        if (g.size() != static_cast<std::size_t>(twod)) continue;
        if (!g.regular(3)) continue;
        std::string key = canonical_key(g);
        if (seen.count(key)) continue;
        seen.insert(key);
        if (!fragment_check(g, degree)) continue;
        HFragment f;
        f.graph = g;
        f.degree = degree;
        FanoLattice fl = fano_lattice(g, degree);
        f.rank = static_cast<int>(fl.lattice.rank());
        f.girth = g.girth();
        f.aut = aut_order(g);
        f.encoding = print_encoding(g);
        f.key = key;
        catalogue.push_back(std::move(f));
    }
    std::sort(catalogue.begin(), catalogue.end(), [](const HFragment& a, const HFragment& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.girth != b.girth) return a.girth < b.girth;
        if (a.aut != b.aut) return a.aut < b.aut;
        return a.key < b.key;
    });

    std::lock_guard<std::mutex> lock(cat_mu);
    auto& slot = cat_cache[twod];
    if (slot.empty()) slot = std::move(catalogue);
    return slot;
}

std::vector<Multigraph> fragment_graphs(const Int& degree) {
    std::vector<Multigraph> out;
    for (const HFragment& f : enumerate_fragments(degree)) out.push_back(f.graph);
    return out;
}

}  // namespace hsect
