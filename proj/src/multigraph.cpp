#include <algorithm>
#include <queue>

#include "hsect/graph/multigraph.hpp"

namespace hsect {

bool Multigraph::connected() const {
    if (n_ == 0) return true;
    return components().size() == 1;
}

std::vector<std::vector<std::size_t>> Multigraph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            out[id].push_back(u);
            for (std::size_t v = 0; v < n_; ++v)
                if (mult(u, v) > 0 && comp[v] < 0) {
                    comp[v] = id;
                    q.push(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

int Multigraph::girth() const {
    int best = 0;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (mult(u, v) >= 2) return 2;
    // BFS from every vertex; cycle closes when an edge joins two visited
    // vertices not on the tree path
    for (std::size_t s = 0; s < n_; ++s) {
        std::vector<int> dist(n_, -1), parent(n_, -1);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n_; ++v) {
                if (mult(u, v) == 0) continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = static_cast<int>(u);
                    q.push(v);
                } else if (static_cast<int>(v) != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

std::string Multigraph::bytes() const {
    std::string s;
    s.reserve(n_ * n_ + 8);
    s += static_cast<char>(n_ & 0xff);
    s += static_cast<char>((n_ >> 8) & 0xff);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v) s += static_cast<char>(mult(u, v));
    return s;
}

}  // namespace hsect
