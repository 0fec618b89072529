#include <algorithm>
#include <set>
#include <stdexcept>

#include "hsect/fragment/fano.hpp"

namespace hsect {

FanoLattice fano_lattice(const Multigraph& g, const Int& degree) {
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
    RadicalQuotient rq = radical_quotient(gram);

    FanoLattice out;
    out.kernel_basis = rq.kernel_basis;
    out.kernel_rank = rq.kernel_basis.size();
    out.lattice.gram = rq.quotient_gram;
    std::size_t r = rq.complement.size();

    // coordinates of e_i in the quotient basis: solve [K | C] y = e_i, take C-part
    std::size_t total = n + 1;
    IntMat v(total, total);
    for (std::size_t j = 0; j < out.kernel_rank; ++j)
        for (std::size_t i = 0; i < total; ++i) v(i, j) = rq.kernel_basis[j][i];
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < total; ++i) v(i, out.kernel_rank + j) = rq.complement[j][i];

    out.vertex_image.resize(n);
    for (std::size_t e = 0; e <= n; ++e) {
        RatVec rhs(total, Rat(0));
        rhs[e] = 1;
        RatVec y = solve_rational(v, rhs);
        IntVec img(r);
        for (std::size_t j = 0; j < r; ++j) {
            if (y[out.kernel_rank + j].get_den() != 1) throw std::runtime_error("fano_lattice: non-integral image");
            img[j] = y[out.kernel_rank + j].get_num();
        }
        if (e < n)
            out.vertex_image[e] = std::move(img);
        else
            out.lattice.h = std::move(img);
    }
    out.lattice.degree = pair_with(out.lattice.gram, out.lattice.h, out.lattice.h);
    if (out.lattice.degree != degree) throw std::runtime_error("fano_lattice: degree mismatch after quotient");
    return out;
}

FanoGraph fano_graph(const PolarizedLattice& n) {
    FanoGraph out;
    out.vectors = vectors_with(n, -2, 1);
    out.graph = Multigraph(out.vectors.size());
    for (std::size_t i = 0; i < out.vectors.size(); ++i)
        for (std::size_t j = i + 1; j < out.vectors.size(); ++j) {
            Int p = n.pair(out.vectors[i], out.vectors[j]);
            if (p < 0) throw std::runtime_error("fano_graph: negative pairing (lattice not 1-admissible)");
            out.graph.set_mult(i, j, static_cast<int>(to_long(p)));
        }
    return out;
}

namespace {

std::vector<std::size_t> locate_vertices(const FanoGraph& fg, const std::vector<IntVec>& images) {
    std::vector<std::size_t> pos(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto it = std::lower_bound(fg.vectors.begin(), fg.vectors.end(), images[i]);
        if (it == fg.vectors.end() || *it != images[i])
            throw std::runtime_error("saturate: original vertex missing from Fano graph");
        pos[i] = static_cast<std::size_t>(it - fg.vectors.begin());
    }
    return pos;
}

}  // namespace

Saturation saturate(const Multigraph& g, const Int& degree) {
    FanoLattice fl = fano_lattice(g, degree);
    Saturation s;
    s.lattice = fl.lattice;
    s.fano = fano_graph(fl.lattice);
    s.original_pos = locate_vertices(s.fano, fl.vertex_image);
    return s;
}

Saturation saturate_extended(const Multigraph& g, const Int& degree, const Extension& e,
                             const FanoLattice& base) {
    Saturation s;
    s.lattice = e.lattice;
    s.fano = fano_graph(e.lattice);
    std::vector<IntVec> images(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) images[i] = to_extension_coords(e, base.vertex_image[i]);
    s.original_pos = locate_vertices(s.fano, images);
    return s;
}

// ---------------------------------------------------------------------------
// induced subgraph search

namespace {

struct Matcher {
    const Multigraph& host;
    const Multigraph& pat;
    std::vector<std::size_t> order;   // pattern vertices, connectivity-first
    std::vector<int> assigned;        // pattern -> host or -1
    std::vector<bool> used;           // host vertex used
    std::set<std::vector<std::size_t>>* sets;
    bool stop_first = false;
    bool found = false;

    bool feasible(std::size_t pv, std::size_t hv) {
        for (std::size_t q = 0; q < pat.size(); ++q) {
            if (assigned[q] < 0) continue;
            if (pat.mult(pv, q) != host.mult(hv, assigned[q])) return false;
        }
        return true;
    }

    void rec(std::size_t k) {
        if (found && stop_first) return;
        if (k == order.size()) {
            std::vector<std::size_t> vs;
            vs.reserve(pat.size());
            for (int a : assigned) vs.push_back(static_cast<std::size_t>(a));
            std::sort(vs.begin(), vs.end());
            if (sets) sets->insert(std::move(vs));
            found = true;
            return;
        }
        std::size_t pv = order[k];
        for (std::size_t hv = 0; hv < host.size(); ++hv) {
            if (used[hv]) continue;
            if (host.degree(hv) < pat.degree(pv)) continue;
            if (!feasible(pv, hv)) continue;
            assigned[pv] = static_cast<int>(hv);
            used[hv] = true;
            rec(k + 1);
            used[hv] = false;
            assigned[pv] = -1;
            if (found && stop_first) return;
        }
    }
};

std::vector<std::size_t> match_order(const Multigraph& pat) {
    // BFS order so each new vertex has a mapped neighbor where possible
    std::vector<std::size_t> order;
    std::vector<bool> seen(pat.size(), false);
    for (std::size_t s = 0; s < pat.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> q{s};
        seen[s] = true;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.erase(q.begin());
            order.push_back(u);
            for (std::size_t v = 0; v < pat.size(); ++v)
                if (pat.mult(u, v) > 0 && !seen[v]) {
                    seen[v] = true;
                    q.push_back(v);
                }
        }
    }
    return order;
}

}  // namespace

std::vector<std::vector<std::size_t>> find_induced(const Multigraph& host, const Multigraph& pattern) {
    if (pattern.size() > host.size()) return {};
    std::set<std::vector<std::size_t>> sets;
    Matcher m{host, pattern, match_order(pattern), std::vector<int>(pattern.size(), -1),
              std::vector<bool>(host.size(), false), &sets};
    m.rec(0);
    return {sets.begin(), sets.end()};
}

bool has_induced(const Multigraph& host, const Multigraph& pattern) {
    if (pattern.size() > host.size()) return false;
    Matcher m{host, pattern, match_order(pattern), std::vector<int>(pattern.size(), -1),
              std::vector<bool>(host.size(), false), nullptr};
    m.stop_first = true;
    m.rec(0);
    return m.found;
}

std::vector<FragmentOccurrence> find_fragments(const Multigraph& g, const std::vector<Multigraph>& catalogue) {
    std::vector<FragmentOccurrence> out;
    for (std::size_t t = 0; t < catalogue.size(); ++t) {
        for (auto& vs : find_induced(g, catalogue[t])) out.push_back({t, vs});
    }
    return out;
}

HPart h_part(const Multigraph& g, const Int& degree, const std::vector<Multigraph>& catalogue) {
    Saturation s = saturate(g, degree);
    std::vector<FragmentOccurrence> occ = find_fragments(s.fano.graph, catalogue);
    std::set<std::size_t> verts;
    for (const auto& o : occ)
        for (std::size_t v : o.vertices) verts.insert(v);
    HPart hp;
    hp.sat_vertices.assign(verts.begin(), verts.end());
    hp.graph = s.fano.graph.induced(hp.sat_vertices);
    std::vector<int> back(s.fano.graph.size(), -1);
    for (std::size_t i = 0; i < hp.sat_vertices.size(); ++i) back[hp.sat_vertices[i]] = static_cast<int>(i);
    for (auto& o : occ) {
        FragmentOccurrence r{o.type, {}};
        for (std::size_t v : o.vertices) r.vertices.push_back(static_cast<std::size_t>(back[v]));
        std::sort(r.vertices.begin(), r.vertices.end());
        hp.fragments.push_back(std::move(r));
    }
    return hp;
}

}  // namespace hsect
