#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hsect/search/glue.hpp"

namespace hsect {

namespace {

bool is_perfect_in(const Multigraph& g, const std::vector<std::size_t>& delta) {
    std::vector<bool> in_d(g.size(), false);
    for (std::size_t v : delta) in_d[v] = true;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (in_d[u]) continue;
        int cnt = 0;
        for (std::size_t v : delta) cnt += (g.mult(u, v) > 0) ? 1 : 0;
        if (cnt > 1) return false;
    }
    return true;
}

std::vector<std::size_t> perfect_complement(const Multigraph& g, const std::vector<std::size_t>& delta) {
    std::vector<bool> in_d(g.size(), false);
    for (std::size_t v : delta) in_d[v] = true;
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (in_d[u]) continue;
        bool adj = false;
        for (std::size_t v : delta)
            if (g.mult(u, v) > 0) adj = true;
        if (!adj) out.push_back(u);
    }
    return out;
}

// canonical key of (graph, marked subset) for Aut-orbit dedup: a marker
// vertex with an unmistakable triple-edge tail is joined to the subset
std::string marked_key(const Multigraph& g, const std::vector<std::size_t>& subset) {
    Multigraph aug(g.size() + 2);
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.mult(u, v)) aug.set_mult(u, v, g.mult(u, v));
    std::size_t marker = g.size();
    aug.set_mult(marker, g.size() + 1, 3);
    for (std::size_t v : subset) aug.set_mult(marker, v, 1);
    return canonical_key(aug);
}

int sigma_plus_quick(const Multigraph& g, const Int& degree) {
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

bool admissible_partial(const Multigraph& g, const Int& degree) {
    if (sigma_plus_quick(g, degree) != 1) return false;
    FanoLattice fl = fano_lattice(g, degree);
    return is_m_admissible(fl.lattice, 2);
}

std::size_t lattice_rank(const Multigraph& g, const Int& degree) {
    return fano_lattice(g, degree).lattice.rank();
}

}  // namespace

std::vector<PerfectSubgraph> perfect_subgraphs(const Multigraph& h) {
    std::size_t n = h.size();
    if (n > 20) throw std::invalid_argument("perfect_subgraphs: graph too large");
    std::vector<PerfectSubgraph> out;
    std::set<std::string> seen;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> delta;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v)) delta.push_back(v);
        if (!is_perfect_in(h, delta)) continue;
        std::string key = marked_key(h, delta);
        if (seen.count(key)) continue;
        seen.insert(key);
        out.push_back({delta, perfect_complement(h, delta)});
    }
    std::sort(out.begin(), out.end(), [](const PerfectSubgraph& a, const PerfectSubgraph& b) {
        if (a.delta.size() != b.delta.size()) return a.delta.size() < b.delta.size();
        return a.delta < b.delta;
    });
    return out;
}

// ---------------------------------------------------------------------------
// gluing enumeration

namespace {

struct GlueEnum {
    const Multigraph& g0;
    const std::vector<FragmentOccurrence>& frags0;
    const Multigraph& h;
    Int degree;
    std::size_t htype;
    std::size_t rank0;
    bool prism_filter;  // degree 6, both prisms
    bool cube_filter;   // degree 8, both cubes

    std::set<std::string> seen;
    std::vector<Multigraph> out;

    std::vector<std::vector<std::size_t>> frag_of_vertex;  // g0 vertex -> occurrence indices

    // current delta map
    std::vector<int> phi;          // h vertex -> g0 vertex or -1
    std::vector<bool> g0_in_delta;

    GlueEnum(const Multigraph& g0_, const std::vector<FragmentOccurrence>& fr, const Multigraph& h_,
             const Int& deg, std::size_t ht)
        : g0(g0_), frags0(fr), h(h_), degree(deg), htype(ht) {
        rank0 = lattice_rank(g0, degree);
        prism_filter = cube_filter = false;
        frag_of_vertex.assign(g0.size(), {});
        for (std::size_t fi = 0; fi < frags0.size(); ++fi)
            for (std::size_t v : frags0[fi].vertices) frag_of_vertex[v].push_back(fi);
        phi.assign(h.size(), -1);
        g0_in_delta.assign(g0.size(), false);
    }

    // --- step 2: attachments ------------------------------------------------

    // overlap of delta with each occurrence must be perfect in the occurrence,
    // plus the degree-specific pairwise lemmas
    bool delta_pairwise_ok(const std::vector<std::size_t>& delta) {
        for (const auto& f : frags0) {
            std::vector<std::size_t> ov;
            for (std::size_t v : f.vertices)
                if (g0_in_delta[v]) ov.push_back(v);
            if (f.type == htype) {
                if (prism_filter && ov.size() != 0 && ov.size() != 3) return false;
                if (prism_filter && ov.size() == 3 &&
                    !(g0.mult(ov[0], ov[1]) && g0.mult(ov[0], ov[2]) && g0.mult(ov[1], ov[2])))
                    return false;
                if (cube_filter && ov.size() == 1) return false;
            }
            // prop.proper: pairwise intersection perfect inside the occurrence
            Multigraph fg = g0.induced(f.vertices);
            std::vector<std::size_t> ov_local;
            for (std::size_t i = 0; i < f.vertices.size(); ++i)
                if (g0_in_delta[f.vertices[i]]) ov_local.push_back(i);
            if (!is_perfect_in(fg, ov_local)) return false;
        }
        (void)delta;
        return true;
    }

    void run() {
        map_vertex(0);
    }

    // enumerate partial induced maps phi : H -> g0 (or -1)
    void map_vertex(std::size_t hu) {
        if (hu == h.size()) {
            finish_delta();
            return;
        }
        // option: new vertex
        phi[hu] = -1;
        map_vertex(hu + 1);
        // options: g0 vertices consistent with previous assignments
        for (std::size_t v = 0; v < g0.size(); ++v) {
            if (g0_in_delta[v]) continue;
            bool ok = true;
            for (std::size_t hw = 0; hw < hu && ok; ++hw) {
                if (phi[hw] < 0) continue;
                if (h.mult(hu, hw) != g0.mult(v, static_cast<std::size_t>(phi[hw]))) ok = false;
            }
            if (!ok) continue;
            phi[hu] = static_cast<int>(v);
            g0_in_delta[v] = true;
            map_vertex(hu + 1);
            g0_in_delta[v] = false;
            phi[hu] = -1;
        }
    }

    void finish_delta() {
        std::vector<std::size_t> delta;
        for (std::size_t v = 0; v < g0.size(); ++v)
            if (g0_in_delta[v]) delta.push_back(v);
        if (delta.size() == h.size()) return;  // whole H inside: no-op union
        if (!is_perfect_in(g0, delta)) return;  // prop.global
        if (!delta_pairwise_ok(delta)) return;

        // old vertices needing one attachment edge = g0-minus-delta complement
        std::vector<std::size_t> free_old = perfect_complement(g0, delta);
        std::vector<bool> needs(g0.size(), false);
        for (std::size_t v : free_old) needs[v] = true;

        // new-vertex placement order: BFS through H from delta
        std::vector<std::size_t> order;
        {
            std::vector<bool> seen_h(h.size(), false);
            std::vector<std::size_t> q;
            for (std::size_t u = 0; u < h.size(); ++u)
                if (phi[u] >= 0) {
                    seen_h[u] = true;
                    q.push_back(u);
                }
            std::size_t qi = 0;
            while (qi < q.size()) {
                std::size_t u = q[qi++];
                for (std::size_t w = 0; w < h.size(); ++w)
                    if (h.mult(u, w) > 0 && !seen_h[w]) {
                        seen_h[w] = true;
                        q.push_back(w);
                        order.push_back(w);
                    }
            }
            for (std::size_t u = 0; u < h.size(); ++u)
                if (!seen_h[u]) order.push_back(u);  // delta empty: arbitrary start
        }

        Multigraph ug = g0;
        std::vector<std::size_t> pos_of_h(h.size(), SIZE_MAX);
        for (std::size_t u = 0; u < h.size(); ++u)
            if (phi[u] >= 0) pos_of_h[u] = static_cast<std::size_t>(phi[u]);
        std::vector<bool> used(g0.size(), false);
        attach(ug, pos_of_h, order, 0, needs, used, free_old.size());
    }

    void attach(Multigraph& ug, std::vector<std::size_t>& pos_of_h, const std::vector<std::size_t>& order,
                std::size_t k, std::vector<bool>& needs, std::vector<bool>& used, std::size_t remaining) {
        if (k == order.size()) {
            if (remaining != 0) return;
            if (sigma_plus_quick(ug, degree) != 1) return;
            if (lattice_rank(ug, degree) <= rank0) return;
            std::string key = canonical_key(ug);
            if (seen.count(key)) return;
            seen.insert(key);
            out.push_back(ug);
            return;
        }
        std::size_t hu = order[k];
        // place new vertex hu
        Multigraph saved = ug;
        std::size_t uv = ug.add_vertex();
        pos_of_h[hu] = uv;
        for (std::size_t hw = 0; hw < h.size(); ++hw)
            if (h.mult(hu, hw) > 0 && pos_of_h[hw] != SIZE_MAX && hw != hu)
                ug.set_mult(uv, pos_of_h[hw], h.mult(hu, hw));

        // fragment needs for hu
        std::vector<int> need(frags0.size(), 1);
        bool feasible = true;
        for (std::size_t fi = 0; fi < frags0.size(); ++fi) {
            int have = 0;
            for (std::size_t v : frags0[fi].vertices)
                if (ug.mult(uv, v) > 0) ++have;
            need[fi] -= have;
            if (need[fi] < 0) feasible = false;
        }
        if (feasible) {
            std::vector<std::size_t> chosen;
            choose_cover(ug, pos_of_h, order, k, needs, used, remaining, uv, need, chosen);
        }
        pos_of_h[hu] = SIZE_MAX;
        ug = std::move(saved);
    }

    // choose the set att^{-1}(new vertex) covering each needy fragment once
    void choose_cover(Multigraph& ug, std::vector<std::size_t>& pos_of_h,
                      const std::vector<std::size_t>& order, std::size_t k, std::vector<bool>& needs,
                      std::vector<bool>& used, std::size_t remaining, std::size_t uv,
                      std::vector<int>& need, std::vector<std::size_t>& chosen) {
        std::size_t fi = frags0.size();
        for (std::size_t f = 0; f < frags0.size(); ++f)
            if (need[f] == 1) {
                fi = f;
                break;
            }
        if (fi == frags0.size()) {
            // all satisfied: edges placed already; prune and continue
            if (admissible_partial(ug, degree))
                attach(ug, pos_of_h, order, k + 1, needs, used, remaining - chosen.size());
            return;
        }
        for (std::size_t v : frags0[fi].vertices) {
            if (!needs[v] || used[v]) continue;
            // v covers every fragment containing it; all must be needy
            bool ok = true;
            for (std::size_t f : frag_of_vertex[v])
                if (need[f] != 1) ok = false;
            if (!ok) continue;
            for (std::size_t f : frag_of_vertex[v]) need[f] = 0;
            used[v] = true;
            ug.set_mult(uv, v, 1);
            chosen.push_back(v);
            choose_cover(ug, pos_of_h, order, k, needs, used, remaining, uv, need, chosen);
            chosen.pop_back();
            ug.set_mult(uv, v, 0);
            used[v] = false;
            for (std::size_t f : frag_of_vertex[v]) need[f] = 1;
        }
    }
};

}  // namespace

std::vector<Multigraph> gluings(const Multigraph& g0, const std::vector<FragmentOccurrence>& frags0,
                                const std::vector<Multigraph>& catalogue, std::size_t htype,
                                const Int& degree) {
    GlueEnum ge(g0, frags0, catalogue[htype], degree, htype);
    // degree-specific pairwise overlap filters
    ge.prism_filter = (degree == 6) && catalogue[htype].girth() == 3;
    ge.cube_filter = (degree == 8) && aut_order(catalogue[htype]) == 48;
    ge.run();
    return std::move(ge.out);
}

std::vector<Multigraph> vertex_extensions(const Multigraph& g0,
                                          const std::vector<FragmentOccurrence>& frags0, const Int& degree) {
    std::size_t n = g0.size();
    std::vector<std::vector<std::size_t>> frag_of_vertex(n);
    std::vector<bool> in_any(n, false);
    for (std::size_t fi = 0; fi < frags0.size(); ++fi)
        for (std::size_t v : frags0[fi].vertices) {
            frag_of_vertex[v].push_back(fi);
            in_any[v] = true;
        }
    std::vector<std::size_t> free_verts;
    for (std::size_t v = 0; v < n; ++v)
        if (!in_any[v]) free_verts.push_back(v);

    std::size_t rank0 = lattice_rank(g0, degree);
    std::set<std::string> seen;
    std::vector<Multigraph> out;

    Multigraph base = g0;
    std::size_t uv = base.add_vertex();

    std::vector<int> need(frags0.size(), 1);
    std::function<void(Multigraph&)> finish = [&](Multigraph& ug) {
        if (sigma_plus_quick(ug, degree) != 1) return;
        if (lattice_rank(ug, degree) <= rank0) return;
        FanoLattice fl = fano_lattice(ug, degree);
        if (!is_m_admissible(fl.lattice, 2)) return;
        std::string key = canonical_key(ug);
        if (seen.count(key)) return;
        seen.insert(key);
        out.push_back(ug);
    };
    std::function<void(Multigraph&, std::size_t)> free_bits = [&](Multigraph& ug, std::size_t at) {
        if (at == free_verts.size()) {
            finish(ug);
            return;
        }
        free_bits(ug, at + 1);
        ug.set_mult(uv, free_verts[at], 1);
        free_bits(ug, at + 1);
        ug.set_mult(uv, free_verts[at], 0);
    };
    std::function<void(Multigraph&)> cover = [&](Multigraph& ug) {
        std::size_t fi = frags0.size();
        for (std::size_t f = 0; f < frags0.size(); ++f)
            if (need[f] == 1) {
                fi = f;
                break;
            }
        if (fi == frags0.size()) {
            free_bits(ug, 0);
            return;
        }
        for (std::size_t v : frags0[fi].vertices) {
            bool ok = true;
            for (std::size_t f : frag_of_vertex[v])
                if (need[f] != 1) ok = false;
            if (!ok || ug.mult(uv, v) > 0) continue;
            for (std::size_t f : frag_of_vertex[v]) need[f] = 0;
            ug.set_mult(uv, v, 1);
            cover(ug);
            ug.set_mult(uv, v, 0);
            for (std::size_t f : frag_of_vertex[v]) need[f] = 1;
        }
    };
    cover(base);
    return out;
}

}  // namespace hsect
