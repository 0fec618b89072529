#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hsect/fragment/encoding.hpp"
#include "hsect/report/verify.hpp"

namespace hsect {

std::vector<std::size_t> catalogue_to_published(long degree) {
    const ExpectedDegree* exp = expected_for(degree);
    const auto& cat = enumerate_fragments(Int(degree));
    if (!exp) throw std::invalid_argument("no published data for degree " + std::to_string(degree));
    std::map<std::string, std::size_t> by_key;
    for (const ExpectedFragment& ef : exp->fragments) {
        Multigraph g = parse_encoding(ef.encoding);
        by_key[canonical_key(g)] = static_cast<std::size_t>(ef.index - 1);
    }
    std::vector<std::size_t> out(cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        auto it = by_key.find(cat[i].key);
        if (it == by_key.end()) throw std::runtime_error("catalogue fragment missing from published list");
        out[i] = it->second;
    }
    return out;
}

VerifyReport verify_fragments(long degree) {
    VerifyReport rep;
    const ExpectedDegree* exp = expected_for(degree);
    const auto& cat = enumerate_fragments(Int(degree));
    std::size_t expected_count = exp ? exp->fragments.size() : 0;
    {
        std::ostringstream os;
        os << "degree " << degree << ": " << cat.size() << " fragment(s), expected " << expected_count;
        rep.check(cat.size() == expected_count, os.str());
    }
    if (!exp) return rep;

    // bijection via encodings, then (r, g, s) per published row
    std::map<std::string, const HFragment*> by_key;
    for (const HFragment& f : cat) by_key[f.key] = &f;
    for (const ExpectedFragment& ef : exp->fragments) {
        Multigraph g;
        try {
            g = parse_encoding(ef.encoding);
        } catch (const std::exception& e) {
            rep.check(false, "parse " + ef.encoding + ": " + e.what());
            continue;
        }
        auto it = by_key.find(canonical_key(g));
        std::ostringstream os;
        os << "degree " << degree << " fragment " << ef.index << " (" << ef.r << "," << ef.g << "," << ef.s
           << ")";
        if (it == by_key.end()) {
            rep.check(false, os.str() + " not found in catalogue");
            continue;
        }
        const HFragment* f = it->second;
        bool ok = f->rank == ef.r && f->girth == ef.g && f->aut == ef.s;
        if (!ok) {
            std::ostringstream got;
            got << " got (" << f->rank << "," << f->girth << "," << f->aut.get_str() << ")";
            rep.check(false, os.str() + got.str());
        } else {
            rep.check(true, os.str());
        }
        // round-trip stability
        std::string printed = print_encoding(f->graph);
        Multigraph re = parse_encoding(printed);
        rep.check(canonical_key(re) == f->key && print_encoding(re) == printed,
                  "degree " + std::to_string(degree) + " fragment " + std::to_string(ef.index) +
                      " encoding round-trip");
    }
    return rep;
}

VerifyReport verify_search(long degree, int workers, long node_budget) {
    VerifyReport rep;
    const ExpectedDegree* exp = expected_for(degree);
    if (!exp || exp->config_count < 0) {
        rep.check(false, "degree " + std::to_string(degree) + ": no published configuration data");
        return rep;
    }
    SearchConfig cfg;
    cfg.degree = degree;
    cfg.workers = workers;
    cfg.node_budget = node_budget;
    cfg.long_run = (degree == 6);
    SearchResult res = search(cfg);
    {
        std::ostringstream os;
        os << "degree " << degree << ": search complete (" << res.nodes << " nodes)";
        rep.check(res.complete, os.str());
    }
    {
        std::ostringstream os;
        os << "degree " << degree << ": " << res.configs.size() << " h-configuration(s), expected "
           << exp->config_count;
        rep.check(static_cast<long>(res.configs.size()) == exp->config_count, os.str());
    }
    {
        std::ostringstream os;
        os << "degree " << degree << ": max # = " << res.max_total << ", expected " << exp->max_hnum;
        rep.check(res.max_total == exp->max_hnum, os.str());
    }
    if (!exp->censuses.empty()) {
        // remap catalogue censuses into the published fragment numbering and
        // compare as multisets (column order in the tables is not canonical)
        std::vector<std::size_t> remap = catalogue_to_published(degree);
        std::multiset<std::vector<long>> got, want;
        for (const HConfiguration& c : res.configs) {
            std::vector<long> v(exp->fragments.size(), 0);
            for (std::size_t i = 0; i < c.census.size(); ++i) v[remap[i]] += c.census[i];
            got.insert(v);
        }
        for (const auto& [v, mult] : exp->censuses)
            for (int i = 0; i < mult; ++i) want.insert(v);
        std::ostringstream os;
        os << "degree " << degree << ": per-configuration censuses match the table";
        rep.check(got == want, os.str());
        if (got != want) {
            for (const auto& v : got) {
                std::ostringstream line;
                line << "got census:";
                for (long x : v) line << " " << x;
                rep.note(line.str());
            }
        }
    }
    return rep;
}

VerifyReport verify_range(long lo, long hi, bool fragments_only, int workers) {
    VerifyReport rep;
    for (long d = lo; d <= hi; ++d) {
        if (d % 2 != 0) continue;
        VerifyReport fr = verify_fragments(d);
        rep.pass = rep.pass && fr.pass;
        rep.lines.insert(rep.lines.end(), fr.lines.begin(), fr.lines.end());
        if (fragments_only) continue;
        const ExpectedDegree* exp = expected_for(d);
        if (!exp || exp->config_count <= 0) continue;
        if (d == 6) continue;  // long-run only
        VerifyReport sr = verify_search(d, workers);
        rep.pass = rep.pass && sr.pass;
        rep.lines.insert(rep.lines.end(), sr.lines.begin(), sr.lines.end());
    }
    return rep;
}

}  // namespace hsect
