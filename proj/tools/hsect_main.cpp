#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hsect/fragment/encoding.hpp"
#include "hsect/report/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

long parse_budget(const std::string& s) {
    if (s.empty()) return -1;
    if (s == "tiny") return 5;
    if (s == "small") return 200;
    return std::stol(s);
}

bool parse_degrees(const std::string& s, long& lo, long& hi) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stol(s);
        } else {
            lo = std::stol(s.substr(0, dots));
            hi = std::stol(s.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

void print_graph(std::ostream& os, const hsect::Multigraph& g, const std::string& format) {
    if (format == "records") {
        os << "adj " << g.size() << "\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) os << (j ? " " : "") << g.mult(i, j);
            os << "\n";
        }
    } else {
        for (std::size_t i = 0; i < g.size(); ++i) {
            os << "  " << i << ":";
            for (std::size_t j = 0; j < g.size(); ++j)
                for (int m = 0; m < g.mult(i, j); ++m) os << " " << j;
            os << "\n";
        }
    }
}

std::string key_hex(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : key) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"split hyperplane sections of polarized K3 surfaces: fragments, configurations, verification"};
    app.require_subcommand(1);

    long degree = 0;
    std::string degrees_range, format = "text", budget, checkpoint, text, infile;
    int workers = 1;
    bool fragments_only = false, long_run = false;

    auto* cmd_fragments = app.add_subcommand("fragments", "list the h-fragment catalogue of a degree");
    cmd_fragments->add_option("--degree", degree, "even degree 2..32")->required();
    cmd_fragments->add_option("--format", format, "text|records");

    auto* cmd_search = app.add_subcommand("search", "enumerate h-configurations of a degree");
    cmd_search->add_option("--degree", degree, "even degree 6..32 (6 needs --long-run)")->required();
    cmd_search->add_option("--format", format, "text|records");
    cmd_search->add_option("--workers", workers, "worker threads");
    cmd_search->add_option("--budget", budget, "node budget: tiny|small|<count>");
    cmd_search->add_option("--checkpoint", checkpoint, "checkpoint file path");
    cmd_search->add_flag("--long-run", long_run, "allow the degree-6 full enumeration");

    auto* cmd_verify = app.add_subcommand("verify", "check fragments and configurations against the tables");
    cmd_verify->add_option("--degrees", degrees_range, "degree or range A..B")->required();
    cmd_verify->add_flag("--fragments-only", fragments_only, "verify fragment catalogues only");
    cmd_verify->add_option("--workers", workers, "worker threads");

    auto* cmd_encode = app.add_subcommand("encode", "canonical encoding of a graph given as an encoding");
    cmd_encode->add_option("text", text, "encoding string");
    cmd_encode->add_option("--file", infile, "read the encoding from a file");

    auto* cmd_decode = app.add_subcommand("decode", "decode an encoding string to adjacency and invariants");
    cmd_decode->add_option("text", text, "encoding string");
    cmd_decode->add_option("--file", infile, "read the encoding from a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_fragments->parsed()) {
            if (degree < 2 || degree > 32 || degree % 2 != 0) {
                std::cerr << "error: degree must be even, 2 <= 2d <= 32\n";
                return kExitUsage;
            }
            const auto& cat = hsect::enumerate_fragments(hsect::Int(degree));
            if (format == "records") {
                std::cout << "#hsect fragments v1\n";
                std::cout << "degree " << degree << "\n";
                std::cout << "count " << cat.size() << "\n";
            } else {
                std::cout << cat.size() << " fragment(s) of degree " << degree << "\n";
            }
            for (std::size_t i = 0; i < cat.size(); ++i) {
                const auto& f = cat[i];
                if (format == "records") {
                    std::cout << "fragment " << (i + 1) << "\n";
                    std::cout << "encoding " << f.encoding << "\n";
                    std::cout << "r " << f.rank << "\n";
                    std::cout << "g " << f.girth << "\n";
                    std::cout << "s " << f.aut.get_str() << "\n";
                } else {
                    std::cout << "H" << (i + 1) << "  (r,g,s) = (" << f.rank << "," << f.girth << ","
                              << f.aut.get_str() << ")  " << f.encoding << "\n";
                }
                print_graph(std::cout, f.graph, format);
            }
            return kExitOk;
        }

        if (cmd_search->parsed()) {
            hsect::SearchConfig cfg;
            cfg.degree = degree;
            cfg.workers = workers;
            cfg.node_budget = parse_budget(budget);
            cfg.checkpoint_path = checkpoint;
            cfg.long_run = long_run;
            hsect::SearchResult res = hsect::search(cfg);
            if (format == "records") {
                std::cout << "#hsect configs v1\n";
                std::cout << "degree " << degree << "\n";
                std::cout << "complete " << (res.complete ? 1 : 0) << "\n";
                std::cout << "count " << res.configs.size() << "\n";
                for (const auto& c : res.configs) {
                    std::cout << "config key=" << key_hex(c.key) << " rank=" << c.rank
                              << " aut=" << c.aut.get_str() << " total=" << c.total
                              << " geometric=" << (c.geometric ? 1 : 0) << " maximal=" << (c.maximal ? 1 : 0)
                              << " kernel=" << c.witness_kernel << " complete=" << (res.complete ? 1 : 0)
                              << "\n";
                    std::cout << "census";
                    for (long x : c.census) std::cout << " " << x;
                    std::cout << "\n";
                    print_graph(std::cout, c.graph, format);
                }
            } else {
                std::cout << res.configs.size() << " h-configuration(s) of degree " << degree
                          << (res.complete ? "" : " [INCOMPLETE RUN]") << "\n";
                std::cout << "max # of split hyperplane sections: " << res.max_total << "\n";
                for (std::size_t i = 0; i < res.configs.size(); ++i) {
                    const auto& c = res.configs[i];
                    std::cout << "config " << (i + 1) << ": |V| = " << c.graph.size() << ", rank " << c.rank
                              << ", |Aut| = " << c.aut.get_str() << ", census:";
                    for (long x : c.census) std::cout << " " << x;
                    std::cout << " (total " << c.total << ")" << (c.maximal ? " maximal" : "")
                              << (c.geometric ? " geometric" : "") << "\n";
                }
            }
            return res.complete ? kExitOk : kExitBudget;
        }

        if (cmd_verify->parsed()) {
            long lo, hi;
            if (!parse_degrees(degrees_range, lo, hi)) {
                std::cerr << "error: bad degree range\n";
                return kExitUsage;
            }
            hsect::VerifyReport rep = hsect::verify_range(lo, hi, fragments_only, workers);
            for (const std::string& line : rep.lines) std::cout << line << "\n";
            std::cout << (rep.pass ? "VERIFIED" : "MISMATCH") << "\n";
            return rep.pass ? kExitOk : kExitMismatch;
        }

        if (cmd_encode->parsed() || cmd_decode->parsed()) {
            if (!infile.empty()) {
                std::ifstream in(infile);
                std::stringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            if (text.empty()) {
                std::cerr << "error: no encoding given\n";
                return kExitUsage;
            }
            hsect::Multigraph g = hsect::parse_encoding(text);
            if (cmd_encode->parsed()) {
                std::cout << hsect::print_encoding(g) << "\n";
            } else {
                int gg = g.girth();
                std::cout << "vertices " << g.size() << "\n";
                std::cout << "girth " << (gg == 0 ? std::string("inf") : std::to_string(gg)) << "\n";
                std::cout << "aut " << hsect::aut_order(g).get_str() << "\n";
                print_graph(std::cout, g, "text");
            }
            return kExitOk;
        }
    } catch (const hsect::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
