#include <algorithm>
#include <map>
#include <sstream>

#include "hsect/fragment/encoding.hpp"
#include "hsect/fragment/fano.hpp"
#include "hsect/graph/canonical.hpp"

namespace hsect {

namespace {

struct FiberSpec {
    std::string kind;  // "AA", "DD", "A"
    int index = 0;
    std::vector<std::vector<int>> groups;  // 1-based section ids per vertex slot
};

struct Parsed {
    std::vector<FiberSpec> fibers;
    std::vector<std::pair<int, int>> meets;
};

struct Lexer {
    const std::string& s;
    std::size_t at = 0;

    void skip() {
        while (at < s.size() && (s[at] == ' ' || s[at] == '\t' || s[at] == '\n' || s[at] == '\r')) ++at;
    }
    bool eof() {
        skip();
        return at >= s.size();
    }
    bool take(const std::string& tok) {
        skip();
        if (s.compare(at, tok.size(), tok) == 0) {
            at += tok.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return at < s.size() ? s[at] : '\0';
    }
    int number() {
        skip();
        if (at >= s.size() || !isdigit(static_cast<unsigned char>(s[at]))) throw ParseError(at, "number expected");
        int v = 0;
        while (at < s.size() && isdigit(static_cast<unsigned char>(s[at]))) v = v * 10 + (s[at++] - '0');
        return v;
    }
    void expect(char c) {
        skip();
        if (at >= s.size() || s[at] != c) throw ParseError(at, std::string("'") + c + "' expected");
        ++at;
    }
};

Multigraph literal_k4() {
    Multigraph g(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) g.set_mult(i, j, 1);
    return g;
}

Multigraph literal_k33() {
    Multigraph g(6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) g.set_mult(i, j, 1);
    return g;
}

Multigraph literal_3k2() {
    Multigraph g(2);
    g.set_mult(0, 1, 3);
    return g;
}

Parsed parse_text(const std::string& text) {
    Lexer lx{text};
    Parsed p;
    while (!lx.eof()) {
        std::size_t save = lx.at;
        if (lx.take("AA") || lx.take("DD")) {
            FiberSpec f;
            f.kind = text.substr(save, 2);
            lx.expect('[');
            f.index = lx.number();
            lx.expect(']');
            lx.expect('(');
            for (;;) {
                std::vector<int> grp;
                grp.push_back(lx.number());
                while (lx.take(",")) grp.push_back(lx.number());
                f.groups.push_back(grp);
                if (lx.take(";")) continue;
                break;
            }
            lx.expect(')');
            p.fibers.push_back(std::move(f));
            continue;
        }
        if (lx.peek() == 'A') {
            lx.take("A");
            FiberSpec f;
            f.kind = "A";
            lx.expect('[');
            f.index = lx.number();
            lx.expect(']');
            lx.expect('(');
            for (;;) {
                std::vector<int> grp;
                grp.push_back(lx.number());
                while (lx.take(",")) grp.push_back(lx.number());
                f.groups.push_back(grp);
                if (lx.take(";")) continue;
                break;
            }
            lx.expect(')');
            p.fibers.push_back(std::move(f));
            continue;
        }
        if (lx.peek() == '(' || lx.peek() == '<') {
            char close = (lx.peek() == '(') ? ')' : '>';
            ++lx.at;
            int a = lx.number();
            lx.skip();
            if (lx.at >= text.size() || text[lx.at] != 'x') throw ParseError(lx.at, "'x' expected");
            ++lx.at;
            int b = lx.number();
            lx.expect(close);
            p.meets.emplace_back(a, b);
            continue;
        }
        throw ParseError(lx.at, "fiber or intersection expected");
    }
    if (p.fibers.empty()) throw ParseError(0, "empty encoding");
    return p;
}

}  // namespace

Multigraph parse_encoding(const std::string& text) {
    // literals
    {
        std::string t;
        for (char c : text)
            if (!isspace(static_cast<unsigned char>(c))) t += c;
        if (t == "K(4)") return literal_k4();
        if (t == "K(3,3)") return literal_k33();
        if (t == "3K(2)") return literal_3k2();
    }
    Parsed p = parse_text(text);

    const FiberSpec& phi = p.fibers.front();
    int sections = 0;
    if (phi.kind == "AA")
        sections = phi.index + 1;
    else if (phi.kind == "DD" && phi.index == 5)
        sections = 8;
    else
        throw ParseError(0, "first fiber must be AA[n] or DD[5]");

    // layout: fiber vertices in order, then sections
    std::size_t nfiber = 0;
    for (const FiberSpec& f : p.fibers) {
        if (f.kind == "AA")
            nfiber += f.index + 1;
        else if (f.kind == "DD")
            nfiber += f.index + 1;
        else
            nfiber += f.index;
    }
    Multigraph g(nfiber + sections);
    auto sec = [&](int id) -> std::size_t {
        if (id < 1 || id > sections) throw ParseError(0, "section index " + std::to_string(id) + " out of range");
        return nfiber + id - 1;
    };

    std::size_t base = 0;
    for (const FiberSpec& f : p.fibers) {
        if (f.kind == "AA") {
            int nv = f.index + 1;
            if (static_cast<int>(f.groups.size()) != nv) throw ParseError(0, "AA[n] needs n+1 groups");
            if (f.index == 1) {
                g.set_mult(base, base + 1, 2);
            } else {
                for (int i = 0; i < nv; ++i) g.set_mult(base + i, base + (i + 1) % nv, 1);
            }
            for (int i = 0; i < nv; ++i)
                for (int id : f.groups[i]) g.add_edge(base + i, sec(id));
            base += nv;
        } else if (f.kind == "DD") {
            if (f.index != 5) throw ParseError(0, "only DD[5] fibers are supported");
            if (f.groups.size() != 4) throw ParseError(0, "DD[5] needs 4 groups");
            // a1 a2 a3 a4 b1 b2: a1,a2 - b1; a3,a4 - b2; b1 - b2
            g.set_mult(base + 0, base + 4, 1);
            g.set_mult(base + 1, base + 4, 1);
            g.set_mult(base + 2, base + 5, 1);
            g.set_mult(base + 3, base + 5, 1);
            g.set_mult(base + 4, base + 5, 1);
            for (int i = 0; i < 4; ++i) {
                if (f.groups[i].size() != 2) throw ParseError(0, "DD[5] groups carry two sections");
                for (int id : f.groups[i]) g.add_edge(base + i, sec(id));
            }
            base += 6;
        } else {  // elliptic A[m], path
            int nv = f.index;
            if (static_cast<int>(f.groups.size()) != nv) throw ParseError(0, "A[m] needs m groups");
            for (int i = 0; i + 1 < nv; ++i) g.set_mult(base + i, base + i + 1, 1);
            for (int i = 0; i < nv; ++i)
                for (int id : f.groups[i]) g.add_edge(base + i, sec(id));
            base += nv;
        }
    }
    for (auto& [a, b] : p.meets) {
        if (a == b) throw ParseError(0, "self-intersection");
        g.add_edge(sec(a), sec(b));
    }
    // regularity check
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.degree(v) != 3) throw ParseError(0, "encoding is not 3-regular at vertex " + std::to_string(v));
    return g;
}

// ---------------------------------------------------------------------------
// canonical printer

namespace {

struct SectionNumbering {
    std::vector<std::size_t> sec_of;   // 1-based id -> vertex
    std::map<std::size_t, int> id_of;  // vertex -> 1-based id
};

// encode one non-Phi fiber given a section numbering
std::string fiber_string(const Multigraph& g, const std::vector<std::size_t>& fiber,
                         const SectionNumbering& num) {
    Multigraph fg = g.induced(fiber);
    DynkinClass dc = dynkin_classify(fg);
    auto ids_of = [&](std::size_t v) {
        std::vector<int> ids;
        for (auto& [sv, id] : num.id_of)
            if (g.mult(v, sv) > 0) ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    auto group_str = [](const std::vector<int>& ids) {
        std::string s;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ids[i]);
        }
        return s;
    };
    if (dc.kind == DynkinClass::affine && dc.label.family == 'A') {
        // cycle: minimal rotation/reflection of per-vertex section ids
        std::vector<std::size_t> cyc;
        for (std::size_t i : dc.order) cyc.push_back(fiber[i]);
        std::size_t nv = cyc.size();
        std::string best;
        for (int refl = 0; refl < 2; ++refl) {
            for (std::size_t rot = 0; rot < nv; ++rot) {
                std::string s = "AA[" + std::to_string(nv - 1) + "](";
                for (std::size_t i = 0; i < nv; ++i) {
                    std::size_t v = refl ? cyc[(rot + nv - i) % nv] : cyc[(rot + i) % nv];
                    if (i) s += ";";
                    s += group_str(ids_of(v));
                }
                s += ")";
                if (best.empty() || s < best) best = s;
            }
        }
        return best;
    }
    if (dc.kind == DynkinClass::affine && dc.label.family == 'D' && dc.label.index == 5) {
        // leaves in fork pairs from dc.order (a1 a2 a3 a4 b1 b2)
        std::vector<std::size_t> lv;
        for (int i = 0; i < 4; ++i) lv.push_back(fiber[dc.order[i]]);
        std::string best;
        int perms[8][4] = {{0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2},
                           {2, 3, 0, 1}, {3, 2, 0, 1}, {2, 3, 1, 0}, {3, 2, 1, 0}};
        for (auto& pm : perms) {
            std::string s = "DD[5](";
            for (int i = 0; i < 4; ++i) {
                if (i) s += ";";
                s += group_str(ids_of(lv[pm[i]]));
            }
            s += ")";
            if (best.empty() || s < best) best = s;
        }
        return best;
    }
    if (dc.kind == DynkinClass::elliptic && dc.label.family == 'A') {
        std::vector<std::size_t> path;
        for (std::size_t i : dc.order) path.push_back(fiber[i]);
        auto render = [&](bool rev) {
            std::string s = "A[" + std::to_string(path.size()) + "](";
            for (std::size_t i = 0; i < path.size(); ++i) {
                std::size_t v = rev ? path[path.size() - 1 - i] : path[i];
                if (i) s += ";";
                s += group_str(ids_of(v));
            }
            s += ")";
            return s;
        };
        return std::min(render(false), render(true));
    }
    if (dc.kind == DynkinClass::elliptic && dc.label.family == 'D' && dc.label.index == 4) {
        // star: 3 leaves with sorted pairs
        std::vector<std::string> grp;
        for (std::size_t i : fiber)
            if (g.induced(fiber).size() && std::count_if(fiber.begin(), fiber.end(), [&](std::size_t w) {
                    return g.mult(i, w) > 0;
                }) == 1)
                grp.push_back(group_str(ids_of(i)));
        std::sort(grp.begin(), grp.end());
        std::string s = "D[4](";
        for (std::size_t i = 0; i < grp.size(); ++i) {
            if (i) s += ";";
            s += grp[i];
        }
        return s + ")";
    }
    throw std::runtime_error("print_encoding: unsupported fiber type " + dc.label.str());
}

// sort key: parabolic fibers first in Dynkin order, then elliptic by
// decreasing size; ties by string
std::tuple<int, int, std::string> fiber_key(const Multigraph& g, const std::vector<std::size_t>& fiber,
                                            const std::string& str) {
    DynkinClass dc = dynkin_classify(g.induced(fiber));
    if (dc.kind == DynkinClass::affine) return {0, dc.label.index * 2 + (dc.label.family == 'A' ? 0 : 1), str};
    return {1, -static_cast<int>(fiber.size()), str};
}

std::string encode_with_phi(const Multigraph& g, const std::vector<std::size_t>& phi_cycle_or_leaves,
                            bool phi_is_dd, const std::vector<std::size_t>& phi_all) {
    // build section numbering from the ordered Phi data
    SectionNumbering num;
    std::vector<bool> in_phi(g.size(), false);
    for (std::size_t v : phi_all) in_phi[v] = true;

    std::string phi_str;
    if (!phi_is_dd) {
        std::size_t nv = phi_cycle_or_leaves.size();
        num.sec_of.assign(nv + 1, 0);
        for (std::size_t i = 0; i < nv; ++i) {
            std::size_t a = phi_cycle_or_leaves[i];
            std::size_t s = g.size();
            for (std::size_t w = 0; w < g.size(); ++w)
                if (g.mult(a, w) > 0 && !in_phi[w]) {
                    if (s != g.size()) return {};  // two sections on one cycle vertex: invalid labeling
                    s = w;
                }
            if (s == g.size()) return {};
            num.sec_of[i + 1] = s;
            if (num.id_of.count(s)) return {};  // multisection: not encodable
            num.id_of[s] = static_cast<int>(i + 1);
        }
        phi_str = "AA[" + std::to_string(nv - 1) + "](";
        for (std::size_t i = 1; i <= nv; ++i) {
            if (i > 1) phi_str += ";";
            phi_str += std::to_string(i);
        }
        phi_str += ")";
    } else {
        // phi_cycle_or_leaves = a1 a2 a3 a4 in chosen order; sections 2i-1, 2i at a_i
        num.sec_of.assign(9, 0);
        int id = 1;
        phi_str = "DD[5](";
        for (std::size_t i = 0; i < 4; ++i) {
            std::size_t a = phi_cycle_or_leaves[i];
            std::vector<std::size_t> ss;
            for (std::size_t w = 0; w < g.size(); ++w)
                if (g.mult(a, w) > 0 && !in_phi[w]) ss.push_back(w);
            if (ss.size() != 2) return {};
            for (std::size_t w : ss) {
                num.sec_of[id] = w;
                if (num.id_of.count(w)) return {};
                num.id_of[w] = id++;
            }
            if (i) phi_str += ";";
            phi_str += std::to_string(id - 2);
            phi_str += ",";
            phi_str += std::to_string(id - 1);
        }
        phi_str += ")";
    }

    // fibers: components after removing Phi's component... Pi = Phi + untouched
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (in_phi[v] || num.id_of.count(v)) continue;
        rest.push_back(v);
    }
    Multigraph rg = g.induced(rest);
    std::vector<std::pair<std::tuple<int, int, std::string>, std::string>> fibers;
    for (auto& comp : rg.components()) {
        std::vector<std::size_t> fiber;
        for (std::size_t i : comp) fiber.push_back(rest[i]);
        std::string fs;
        try {
            fs = fiber_string(g, fiber, num);
        } catch (const std::exception&) {
            return {};
        }
        fibers.push_back({fiber_key(g, fiber, fs), fs});
    }
    std::sort(fibers.begin(), fibers.end());

    std::string out = phi_str;
    for (auto& [k, fs] : fibers) {
        out += " ";
        out += fs;
    }
    // section intersections
    std::string meets;
    for (std::size_t i = 1; i < num.sec_of.size(); ++i)
        for (std::size_t j = i + 1; j < num.sec_of.size(); ++j)
            if (g.mult(num.sec_of[i], num.sec_of[j]) > 0)
                meets += "(" + std::to_string(i) + "x" + std::to_string(j) + ")";
    if (!meets.empty()) {
        out += " ";
        out += meets;
    }
    return out;
}

}  // namespace

std::string print_encoding(const Multigraph& g) {
    std::string key = canonical_key(g);
    if (key == canonical_key(literal_k4())) return "K(4)";
    if (key == canonical_key(literal_k33())) return "K(3,3)";
    if (key == canonical_key(literal_3k2())) return "3K(2)";

    auto label = minimal_affine_label(g);
    if (!label) throw std::runtime_error("print_encoding: no affine subgraph");
    std::string best;
    if (label->family == 'A') {
        auto occs = find_induced(g, affine_diagram(*label));
        for (auto& occ : occs) {
            Multigraph cg = g.induced(occ);
            DynkinClass dc = dynkin_classify(cg);
            std::vector<std::size_t> cyc;
            for (std::size_t i : dc.order) cyc.push_back(occ[i]);
            std::size_t nv = cyc.size();
            for (int refl = 0; refl < 2; ++refl)
                for (std::size_t rot = 0; rot < nv; ++rot) {
                    std::vector<std::size_t> lab(nv);
                    for (std::size_t i = 0; i < nv; ++i)
                        lab[i] = refl ? cyc[(rot + nv - i) % nv] : cyc[(rot + i) % nv];
                    std::string s = encode_with_phi(g, lab, false, occ);
                    if (!s.empty() && (best.empty() || s < best)) best = s;
                }
        }
    } else if (label->family == 'D' && label->index == 5) {
        auto occs = find_induced(g, affine_diagram(*label));
        for (auto& occ : occs) {
            Multigraph cg = g.induced(occ);
            DynkinClass dc = dynkin_classify(cg);
            std::vector<std::size_t> lv;
            for (int i = 0; i < 4; ++i) lv.push_back(occ[dc.order[i]]);
            int perms[8][4] = {{0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2},
                               {2, 3, 0, 1}, {3, 2, 0, 1}, {2, 3, 1, 0}, {3, 2, 1, 0}};
            for (auto& pm : perms) {
                std::vector<std::size_t> lab{lv[pm[0]], lv[pm[1]], lv[pm[2]], lv[pm[3]]};
                std::string s = encode_with_phi(g, lab, true, occ);
                if (!s.empty() && (best.empty() || s < best)) best = s;
            }
        }
    } else {
        throw std::runtime_error("print_encoding: unsupported Phi " + label->str());
    }
    if (best.empty()) throw std::runtime_error("print_encoding: no valid labeling");
    return best;
}

}  // namespace hsect
