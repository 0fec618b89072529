#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "hsect/search/search.hpp"

namespace hsect {

namespace {

struct Node {
    Multigraph g;
    int rank = 0;
    std::vector<FragmentOccurrence> frags;
};

struct Shared {
    SearchConfig cfg;
    std::vector<Multigraph> patterns;
    std::vector<std::size_t> insertion_order;

    std::mutex mu;
    std::set<std::string> node_seen;
    std::map<std::string, HConfiguration> configs;
    std::map<std::string, GeometricGraphRecord> geometric;
    std::deque<Node> queue;
    long nodes = 0;
    bool budget_hit = false;
    int active = 0;
    std::string error;
    std::condition_variable cv;
};

std::string render_kernel(const Extension& e) {
    if (e.kernel.gens.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < e.kernel.gens.size(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < e.kernel.gens[i].size(); ++j) {
            if (j) s += ",";
            s += e.kernel.gens[i][j].get_str();
        }
    }
    return s;
}

bool lattice_hyperbolic(const PolarizedLattice& n) {
    Inertia sig = inertia(n.gram);
    return sig.sigma_plus == 1 && sig.sigma_zero == 0;
}

// record hp(G) of a geometric graph G as an h-configuration
void record_geometric_graph(Shared& sh, const Multigraph& satg, const Extension& witness) {
    std::vector<FragmentOccurrence> occ = find_fragments(satg, sh.patterns);
    if (occ.empty()) return;
    std::set<std::size_t> verts;
    for (const auto& o : occ)
        for (std::size_t v : o.vertices) verts.insert(v);
    std::vector<std::size_t> hp_verts(verts.begin(), verts.end());
    Multigraph hp = satg.induced(hp_verts);
    std::string key = canonical_key(hp);

    std::vector<long> census(sh.patterns.size(), 0);
    for (const auto& o : occ) ++census[o.type];
    long total = static_cast<long>(occ.size());

    bool have_config, want_report;
    std::string gkey;
    {
        std::lock_guard<std::mutex> lock(sh.mu);
        have_config = sh.configs.count(key) > 0;
        want_report = total >= sh.cfg.report_min;
        if (want_report) {
            gkey = canonical_key(satg);
            want_report = sh.geometric.count(gkey) == 0;
        }
    }
    if (!have_config) {
        HConfiguration hc;
        hc.graph = hp;
        hc.degree = sh.cfg.degree;
        hc.census = census;
        hc.total = total;
        hc.rank = static_cast<int>(fano_lattice(hp, sh.cfg.degree).lattice.rank());
        hc.aut = aut_order(hp);
        hc.key = key;
        hc.witness_kernel = render_kernel(witness);
        hc.geometric = hp_verts.size() == satg.size();
        std::lock_guard<std::mutex> lock(sh.mu);
        if (!sh.configs.count(key)) sh.configs[key] = std::move(hc);
        // an existing record may lack the "geometric" mark this witness shows
        else if (hp_verts.size() == satg.size())
            sh.configs[key].geometric = true;
    } else if (hp_verts.size() == satg.size()) {
        std::lock_guard<std::mutex> lock(sh.mu);
        sh.configs[key].geometric = true;
    }
    if (want_report) {
        GeometricGraphRecord gr;
        gr.graph = satg;
        gr.census = census;
        gr.total = total;
        gr.rank = static_cast<int>(fano_lattice(satg, sh.cfg.degree).lattice.rank());
        gr.key = gkey;
        std::lock_guard<std::mutex> lock(sh.mu);
        if (!sh.geometric.count(gkey)) sh.geometric[gkey] = std::move(gr);
    }
}

void push_node(Shared& sh, Multigraph g) {
    std::string key = canonical_key(g);
    {
        std::lock_guard<std::mutex> lock(sh.mu);
        if (sh.node_seen.count(key)) return;
        sh.node_seen.insert(key);
    }
    Node n;
    n.rank = static_cast<int>(fano_lattice(g, sh.cfg.degree).lattice.rank());
    n.frags = find_fragments(g, sh.patterns);
    n.g = std::move(g);
    {
        std::lock_guard<std::mutex> lock(sh.mu);
        sh.queue.push_back(std::move(n));
    }
    sh.cv.notify_one();
}

// hp-normalized candidate from a raw union (fragment mode); subgeometric only
bool normalize_candidate(Shared& sh, const Multigraph& raw, Multigraph& out) {
    FanoLattice fl = fano_lattice(raw, sh.cfg.degree);
    if (!lattice_hyperbolic(fl.lattice)) return false;
    if (!is_m_admissible(fl.lattice, 2)) return false;
    if (!is_subgeometric(fl.lattice, 2)) return false;
    HPart hp = h_part(raw, sh.cfg.degree, sh.patterns);
    if (hp.graph.size() == 0) return false;
    out = hp.graph;
    return true;
}

void process_node(Shared& sh, const Node& node) {
    const Int& deg = sh.cfg.degree;
    long twod = to_long(deg);

    FanoLattice fl = fano_lattice(node.g, deg);
    for (const Extension& e : finite_index_extensions(fl.lattice)) {
        if (!lattice_hyperbolic(e.lattice)) continue;
        if (!is_geometric(e.lattice, 2)) continue;
        FanoGraph fg = fano_graph(e.lattice);
        record_geometric_graph(sh, fg.graph, e);
    }

    if (node.rank >= 20) return;  // rank cannot grow among embeddable lattices
    bool vertex_mode = (twod >= 14) || (node.rank >= sh.cfg.r_min);
    if (vertex_mode) {
        for (Multigraph& child : vertex_extensions(node.g, node.frags, deg)) {
            FanoLattice cf = fano_lattice(child, deg);
            if (!is_subgeometric(cf.lattice, 2)) continue;
            push_node(sh, std::move(child));
        }
    } else {
        for (std::size_t t : sh.insertion_order) {
            for (Multigraph& raw : gluings(node.g, node.frags, sh.patterns, t, deg)) {
                Multigraph norm;
                if (!normalize_candidate(sh, raw, norm)) continue;
                push_node(sh, std::move(norm));
            }
        }
    }
}

void write_checkpoint(Shared& sh) {
    if (sh.cfg.checkpoint_path.empty()) return;
    std::lock_guard<std::mutex> lock(sh.mu);
    std::ofstream out(sh.cfg.checkpoint_path);
    out << "#hsect checkpoint v1\n";
    out << "degree " << sh.cfg.degree.get_str() << "\n";
    out << "nodes " << sh.nodes << "\n";
    out << "complete " << (sh.budget_hit ? 0 : 1) << "\n";
    auto dump = [&out](const Multigraph& g) {
        out << g.size() << "\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) out << (j ? " " : "") << g.mult(i, j);
            out << "\n";
        }
    };
    for (const auto& [key, hc] : sh.configs) {
        out << "config total=" << hc.total << " rank=" << hc.rank << " adj ";
        dump(hc.graph);
    }
    out << "frontier " << sh.queue.size() << "\n";
    for (const Node& n : sh.queue) {
        out << "node adj ";
        dump(n.g);
    }
}

void worker(Shared& sh) {
    std::unique_lock<std::mutex> lock(sh.mu);
    for (;;) {
        while (sh.queue.empty() && sh.active > 0 && sh.error.empty())
            sh.cv.wait_for(lock, std::chrono::milliseconds(20));
        if (!sh.error.empty()) return;
        if (sh.queue.empty()) {
            sh.cv.notify_all();
            return;
        }
        if (sh.cfg.node_budget >= 0 && sh.nodes >= sh.cfg.node_budget) {
            sh.budget_hit = true;
            sh.cv.notify_all();
            return;
        }
        Node node = std::move(sh.queue.front());
        sh.queue.pop_front();
        ++sh.nodes;
        ++sh.active;
        lock.unlock();
        try {
            process_node(sh, node);
        } catch (const std::exception& ex) {
            lock.lock();
            --sh.active;
            if (sh.error.empty()) sh.error = ex.what();
            sh.cv.notify_all();
            return;
        }
        lock.lock();
        --sh.active;
        sh.cv.notify_all();
    }
}

}  // namespace

std::vector<Multigraph> geometric_saturations(const Multigraph& g, const Int& degree) {
    FanoLattice fl = fano_lattice(g, degree);
    std::vector<Multigraph> out;
    for (const Extension& e : finite_index_extensions(fl.lattice)) {
        if (!lattice_hyperbolic(e.lattice)) continue;
        if (!is_geometric(e.lattice, 2)) continue;
        out.push_back(fano_graph(e.lattice).graph);
    }
    return out;
}

SearchResult search(const SearchConfig& cfg) {
    long twod = to_long(cfg.degree);
    if (twod < 6 || twod % 2 != 0 || twod > 32)
        throw std::invalid_argument("search: the configuration search covers even degrees 6..32");
    if (twod == 6 && !cfg.long_run)
        throw std::invalid_argument("search: degree 6 full enumeration requires the long-run flag");

    Shared sh;
    sh.cfg = cfg;
    const auto& catalogue = enumerate_fragments(cfg.degree);
    for (const HFragment& f : catalogue) sh.patterns.push_back(f.graph);

    // gluing order: catalogue order, except degree 8 where the cube goes first
    for (std::size_t t = 0; t < sh.patterns.size(); ++t) sh.insertion_order.push_back(t);
    if (twod == 8) std::reverse(sh.insertion_order.begin(), sh.insertion_order.end());

    for (const HFragment& f : catalogue) {
        if (twod >= 14) {
            push_node(sh, f.graph);
        } else {
            Multigraph norm;
            if (normalize_candidate(sh, f.graph, norm)) push_node(sh, std::move(norm));
        }
    }

    int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (;;) {
            Node node;
            {
                std::lock_guard<std::mutex> lock(sh.mu);
                if (sh.queue.empty()) break;
                if (cfg.node_budget >= 0 && sh.nodes >= cfg.node_budget) {
                    sh.budget_hit = true;
                    break;
                }
                node = std::move(sh.queue.front());
                sh.queue.pop_front();
                ++sh.nodes;
            }
            process_node(sh, node);
            if (!cfg.checkpoint_path.empty() && sh.nodes % 50 == 0) write_checkpoint(sh);
        }
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back([&sh] { worker(sh); });
        for (auto& t : pool) t.join();
        if (!sh.error.empty()) throw std::runtime_error("search worker failed: " + sh.error);
    }

    SearchResult result;
    result.degree = cfg.degree;
    result.complete = !sh.budget_hit;
    result.nodes = sh.nodes;
    for (auto& [key, hc] : sh.configs) result.configs.push_back(std::move(hc));
    for (auto& [key, gr] : sh.geometric) result.geometric.push_back(std::move(gr));
    for (auto& c : result.configs) {
        c.maximal = true;
        for (const auto& d : result.configs) {
            if (d.key == c.key || d.graph.size() <= c.graph.size()) continue;
            if (!find_induced(d.graph, c.graph).empty()) c.maximal = false;
        }
        result.max_total = std::max(result.max_total, c.total);
    }
    for (auto& c : result.configs) {
        if (!c.geometric) {
            for (const Multigraph& s : geometric_saturations(c.graph, cfg.degree))
                if (s.size() == c.graph.size()) c.geometric = true;
        }
    }
    if (!cfg.checkpoint_path.empty()) write_checkpoint(sh);
    return result;
}

}  // namespace hsect
