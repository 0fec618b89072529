#include <algorithm>
#include <map>
#include <mutex>

#include "hsect/graph/canonical.hpp"

namespace hsect {

namespace {

// color refinement: vertex signature = (color, sorted (mult, neighbor color))
std::vector<int> refine(const Multigraph& g, std::vector<int> color) {
    std::size_t n = g.size();
    for (;;) {
        std::vector<std::pair<std::vector<long>, std::size_t>> sig(n);
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<long> s;
            s.push_back(color[u]);
            std::vector<std::pair<int, int>> nb;
            for (std::size_t v = 0; v < n; ++v)
                if (g.mult(u, v) > 0) nb.emplace_back(g.mult(u, v), color[v]);
            std::sort(nb.begin(), nb.end());
            for (auto& [m, c] : nb) {
                s.push_back(m);
                s.push_back(c);
            }
            sig[u] = {std::move(s), u};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

struct CanonSearch {
    const Multigraph& g;
    std::string best;        // minimal adjacency string so far
    bool have_best = false;
    Int count = 0;           // leaves achieving best
    std::vector<std::size_t> best_labeling;

    std::string leaf_string(const std::vector<int>& color) {
        std::size_t n = g.size();
        std::vector<std::size_t> pos(n);
        for (std::size_t u = 0; u < n; ++u) pos[color[u]] = u;
        std::string s;
        s.reserve(n * n / 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += static_cast<char>(g.mult(pos[i], pos[j]));
        return s;
    }

    void run(std::vector<int> color) {
        color = refine(g, std::move(color));
        std::size_t n = g.size();
        // find first smallest non-singleton cell
        std::vector<std::vector<std::size_t>> cells;
        {
            int maxc = 0;
            for (int c : color) maxc = std::max(maxc, c);
            cells.assign(maxc + 1, {});
            for (std::size_t u = 0; u < n; ++u) cells[color[u]].push_back(u);
        }
        int target = -1;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() < 2) continue;
            if (target < 0 || cells[c].size() < cells[target].size()) target = static_cast<int>(c);
        }
        if (target < 0) {
            std::string s = leaf_string(color);
            if (!have_best || s < best) {
                best = s;
                have_best = true;
                count = 1;
                best_labeling.assign(n, 0);
                for (std::size_t u = 0; u < n; ++u) best_labeling[u] = color[u];
            } else if (s == best) {
                ++count;
            }
            return;
        }
        for (std::size_t v : cells[target]) {
            std::vector<int> c2 = color;
            // individualize v: its color precedes the rest of the cell
            for (std::size_t u = 0; u < n; ++u)
                if (c2[u] >= color[v] && u != v) ++c2[u];
            run(std::move(c2));
        }
    }
};

std::mutex canon_mu;
std::map<std::string, CanonicalForm> canon_cache;

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
    {
        std::lock_guard<std::mutex> lock(canon_mu);
        auto it = canon_cache.find(g.bytes());
        if (it != canon_cache.end()) return it->second;
    }
    CanonSearch s{g};
    s.run(std::vector<int>(g.size(), 0));
    CanonicalForm out;
    // prefix with size so keys of different orders never collide
    out.key = static_cast<char>(g.size() & 0xff);
    out.key += static_cast<char>((g.size() >> 8) & 0xff);
    out.key += s.best;
    out.aut_order = g.size() ? s.count : 1;
    out.labeling = s.best_labeling;
    {
        std::lock_guard<std::mutex> lock(canon_mu);
        canon_cache[g.bytes()] = out;
    }
    return out;
}

std::string canonical_key(const Multigraph& g) { return canonical_form(g).key; }

Int aut_order(const Multigraph& g) { return canonical_form(g).aut_order; }

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.size() != b.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace hsect
