#include <algorithm>
#include <stdexcept>

#include "hsect/fragment/fano.hpp"
#include "hsect/graph/dynkin.hpp"

namespace hsect {

std::string DynkinLabel::str() const {
    std::string s;
    s += family;
    s += std::to_string(index);
    if (affine) s += "~";
    return s;
}

namespace {

// kappa: primitive positive kernel vector of the root gram (-2 on the
// diagonal, edge multiplicities off it)
std::vector<Int> fundamental_cycle_of(const Multigraph& g) {
    std::size_t n = g.size();
    IntMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        gram(i, i) = -2;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) gram(i, j) = g.mult(i, j);
    }
    auto ker = integer_kernel(gram);
    if (ker.size() != 1) throw std::runtime_error("fundamental_cycle: kernel rank != 1");
    IntVec k = ker[0];
    bool neg = false;
    for (const Int& c : k)
        if (c < 0) neg = true;
    if (neg)
        for (Int& c : k) c = -c;
    for (const Int& c : k)
        if (c <= 0) throw std::runtime_error("fundamental_cycle: not positive");
    return k;
}

// arm lengths from a center vertex in a tree
std::vector<int> arms_from(const Multigraph& g, std::size_t center) {
    std::vector<int> arms;
    for (std::size_t v : g.neighbors(center)) {
        int len = 1;
        std::size_t prev = center, cur = v;
        for (;;) {
            auto nb = g.neighbors(cur);
            if (nb.size() != 2) break;
            std::size_t next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

std::size_t edge_count(const Multigraph& g) {
    std::size_t e = 0;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v) e += g.mult(u, v);
    return e;
}

std::vector<std::size_t> path_order(const Multigraph& g) {
    // traversal of a path graph from one endpoint
    std::size_t start = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.neighbors(v).size() <= 1) {
            start = v;
            break;
        }
    std::vector<std::size_t> order{start};
    std::size_t prev = start;
    while (order.size() < g.size()) {
        std::size_t cur = order.back();
        for (std::size_t w : g.neighbors(cur))
            if (w != prev) {
                order.push_back(w);
                prev = cur;
                break;
            }
        if (order.back() == cur) break;  // safety
    }
    return order;
}

std::vector<std::size_t> cycle_order(const Multigraph& g) {
    std::vector<std::size_t> order{0};
    std::size_t prev = 0;
    auto nb0 = g.neighbors(0);
    order.push_back(nb0[0]);
    while (order.size() < g.size()) {
        std::size_t cur = order.back();
        for (std::size_t w : g.neighbors(cur))
            if (w != prev) {
                prev = cur;
                order.push_back(w);
                break;
            }
    }
    return order;
}

}  // namespace

DynkinClass dynkin_classify(const Multigraph& g) {
    DynkinClass out;
    std::size_t n = g.size();
    if (n == 0 || !g.connected()) throw std::invalid_argument("dynkin_classify: connected input required");

    bool multi = !g.simple();
    if (multi) {
        if (n == 2 && g.mult(0, 1) == 2) {
            out.kind = DynkinClass::affine;
            out.label = {'A', 1, true};
            out.fundamental_cycle = fundamental_cycle_of(g);
            out.order = {0, 1};
        }
        return out;  // anything else with a multiple edge is not a Dynkin diagram
    }
    if (n == 1) {
        out.kind = DynkinClass::elliptic;
        out.label = {'A', 1, false};
        out.order = {0};
        return out;
    }

    int max_deg = 0, deg3 = 0, deg4 = 0;
    for (std::size_t v = 0; v < n; ++v) {
        int d = static_cast<int>(g.neighbors(v).size());
        max_deg = std::max(max_deg, d);
        if (d == 3) ++deg3;
        if (d >= 4) ++deg4;
    }
    bool tree = edge_count(g) == n - 1;

    if (max_deg <= 2) {
        if (tree) {
            out.kind = DynkinClass::elliptic;
            out.label = {'A', static_cast<int>(n), false};
            out.order = path_order(g);
        } else if (n >= 3) {
            out.kind = DynkinClass::affine;
            out.label = {'A', static_cast<int>(n) - 1, true};
            out.fundamental_cycle = fundamental_cycle_of(g);
            out.order = cycle_order(g);
        }
        return out;
    }
    if (deg4 == 1 && max_deg == 4 && n == 5 && tree) {
        out.kind = DynkinClass::affine;
        out.label = {'D', 4, true};
        out.fundamental_cycle = fundamental_cycle_of(g);
        return out;
    }
    if (max_deg == 3 && deg3 == 1 && tree) {
        std::size_t center = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.neighbors(v).size() == 3) center = v;
        std::vector<int> a = arms_from(g, center);
        if (a[0] == 1 && a[1] == 1) {
            out.kind = DynkinClass::elliptic;
            out.label = {'D', static_cast<int>(n), false};
        } else if (a == std::vector<int>{1, 2, 2}) {
            out.kind = DynkinClass::elliptic;
            out.label = {'E', 6, false};
        } else if (a == std::vector<int>{1, 2, 3}) {
            out.kind = DynkinClass::elliptic;
            out.label = {'E', 7, false};
        } else if (a == std::vector<int>{1, 2, 4}) {
            out.kind = DynkinClass::elliptic;
            out.label = {'E', 8, false};
        } else if (a == std::vector<int>{2, 2, 2}) {
            out.kind = DynkinClass::affine;
            out.label = {'E', 6, true};
        } else if (a == std::vector<int>{1, 3, 3}) {
            out.kind = DynkinClass::affine;
            out.label = {'E', 7, true};
        } else if (a == std::vector<int>{1, 2, 5}) {
            out.kind = DynkinClass::affine;
            out.label = {'E', 8, true};
        }
        if (out.kind == DynkinClass::affine) out.fundamental_cycle = fundamental_cycle_of(g);
        return out;
    }
    if (max_deg == 3 && deg3 == 2 && tree) {
        // D~_m: every leaf hangs off a trivalent vertex
        bool ok = true;
        for (std::size_t v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            if (nb.size() == 1 && g.neighbors(nb[0]).size() != 3) ok = false;
        }
        int leaves = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.neighbors(v).size() == 1) ++leaves;
        if (ok && leaves == 4) {
            out.kind = DynkinClass::affine;
            out.label = {'D', static_cast<int>(n) - 1, true};
            out.fundamental_cycle = fundamental_cycle_of(g);
            // order: leaves of fork 1, leaves of fork 2, then centers
            std::vector<std::size_t> forks;
            for (std::size_t v = 0; v < n; ++v)
                if (g.neighbors(v).size() == 3) forks.push_back(v);
            for (std::size_t f : forks)
                for (std::size_t w : g.neighbors(f))
                    if (g.neighbors(w).size() == 1) out.order.push_back(w);
            out.order.push_back(forks[0]);
            out.order.push_back(forks[1]);
        }
        return out;
    }
    return out;
}

Multigraph affine_diagram(const DynkinLabel& l) {
    if (!l.affine) throw std::invalid_argument("affine_diagram: affine label required");
    if (l.family == 'A') {
        if (l.index == 1) {
            Multigraph g(2);
            g.set_mult(0, 1, 2);
            return g;
        }
        Multigraph g(l.index + 1);
        for (int i = 0; i <= l.index; ++i) g.set_mult(i, (i + 1) % (l.index + 1), 1);
        return g;
    }
    if (l.family == 'D') {
        // 4 leaves (0..3), path of index-3 internal vertices (4..)
        int n = l.index + 1;
        Multigraph g(n);
        if (l.index == 4) {
            for (int i = 0; i < 4; ++i) g.set_mult(i, 4, 1);
            return g;
        }
        int path = l.index - 3;
        for (int i = 0; i < path - 1; ++i) g.set_mult(4 + i, 5 + i, 1);
        g.set_mult(0, 4, 1);
        g.set_mult(1, 4, 1);
        g.set_mult(2, 4 + path - 1, 1);
        g.set_mult(3, 4 + path - 1, 1);
        return g;
    }
    if (l.family == 'E') {
        auto arms = (l.index == 6)   ? std::vector<int>{2, 2, 2}
                    : (l.index == 7) ? std::vector<int>{1, 3, 3}
                                     : std::vector<int>{1, 2, 5};
        Multigraph g(l.index + 1);
        std::size_t at = 1;
        for (int a : arms) {
            std::size_t prev = 0;
            for (int i = 0; i < a; ++i) {
                g.set_mult(prev, at, 1);
                prev = at;
                ++at;
            }
        }
        return g;
    }
    throw std::invalid_argument("affine_diagram: unknown family");
}

std::optional<DynkinLabel> minimal_affine_label(const Multigraph& g) {
    std::vector<DynkinLabel> candidates;
    int gg = g.girth();
    if (gg >= 2) candidates.push_back({'A', gg - 1, true});
    for (int m = 4; m <= 8; ++m)
        if (static_cast<std::size_t>(m + 1) <= g.size()) candidates.push_back({'D', m, true});
    for (int m = 6; m <= 8; ++m)
        if (static_cast<std::size_t>(m + 1) <= g.size()) candidates.push_back({'E', m, true});
    std::sort(candidates.begin(), candidates.end());
    for (const DynkinLabel& l : candidates) {
        if (l.family == 'A') return l;  // the girth cycle is an induced occurrence
        if (has_induced(g, affine_diagram(l))) return l;
    }
    return std::nullopt;
}

PhiTaxonomy phi_taxonomy(const Multigraph& g) {
    auto label = minimal_affine_label(g);
    if (!label) throw std::invalid_argument("phi_taxonomy: no affine induced subgraph");
    PhiTaxonomy out;
    out.phi_label = *label;
    auto occ = find_induced(g, affine_diagram(*label));
    if (occ.empty()) throw std::runtime_error("phi_taxonomy: occurrence vanished");
    out.phi = occ.front();  // canonically least vertex set
    // Pi = Phi + vertices with no edge to Phi
    std::vector<bool> in_phi(g.size(), false);
    for (std::size_t v : out.phi) in_phi[v] = true;
    std::vector<std::size_t> pi;
    std::vector<bool> in_pi(g.size(), false);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (in_phi[v]) {
            pi.push_back(v);
            in_pi[v] = true;
            continue;
        }
        bool touches = false;
        for (std::size_t w : out.phi)
            if (g.mult(v, w) > 0) touches = true;
        if (!touches) {
            pi.push_back(v);
            in_pi[v] = true;
        }
    }
    Multigraph pig = g.induced(pi);
    for (auto& comp : pig.components()) {
        std::vector<std::size_t> c;
        for (std::size_t i : comp) c.push_back(pi[i]);
        out.fibers.push_back(c);
    }
    // put the component containing Phi first
    for (std::size_t i = 0; i < out.fibers.size(); ++i) {
        if (std::find(out.fibers[i].begin(), out.fibers[i].end(), out.phi[0]) != out.fibers[i].end()) {
            std::swap(out.fibers[0], out.fibers[i]);
            break;
        }
    }
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!in_pi[v]) out.sections.push_back(v);
    return out;
}

}  // namespace hsect
