#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hsect {

// Multigraph on vertices 0..n-1; symmetric edge multiplicities, zero diagonal.
// Vertices are line classes, multiplicity = intersection number u.v.
class Multigraph {
public:
    Multigraph() : n_(0) {}
    explicit Multigraph(std::size_t n) : n_(n), m_(n * n, 0) {}

    std::size_t size() const { return n_; }

    int mult(std::size_t u, std::size_t v) const { return m_[u * n_ + v]; }
    void set_mult(std::size_t u, std::size_t v, int m) {
        m_[u * n_ + v] = m;
        m_[v * n_ + u] = m;
    }
    void add_edge(std::size_t u, std::size_t v, int m = 1) { set_mult(u, v, mult(u, v) + m); }

    // valency counting multiplicity
    int degree(std::size_t u) const {
        int d = 0;
        for (std::size_t v = 0; v < n_; ++v) d += mult(u, v);
        return d;
    }
    bool regular(int k) const {
        for (std::size_t u = 0; u < n_; ++u)
            if (degree(u) != k) return false;
        return true;
    }
    bool simple() const {
        for (int m : m_)
            if (m > 1) return false;
        return true;
    }

    std::vector<std::size_t> neighbors(std::size_t u) const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n_; ++v)
            if (mult(u, v) > 0) out.push_back(v);
        return out;
    }

    std::size_t add_vertex() {
        Multigraph g(n_ + 1);
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = 0; v < n_; ++v) g.m_[u * (n_ + 1) + v] = m_[u * n_ + v];
        *this = std::move(g);
        return n_ - 1;
    }

    Multigraph induced(const std::vector<std::size_t>& verts) const {
        Multigraph g(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < verts.size(); ++j) g.m_[i * verts.size() + j] = mult(verts[i], verts[j]);
        return g;
    }

    bool connected() const;
    std::vector<std::vector<std::size_t>> components() const;

    // shortest cycle length; a multiple edge counts as a 2-cycle; 0 = none
    int girth() const;

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && m_ == o.m_; }
    std::string bytes() const;  // raw identity key (label-dependent)

private:
    std::size_t n_;
    std::vector<int> m_;
};

}  // namespace hsect
