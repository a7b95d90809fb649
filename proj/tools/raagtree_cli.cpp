// Command-line front end: presentations, oracle verification, rank tables
// and stabilization checks for braid groups of linear trees.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "raagtree/cube_complex.hpp"
#include "raagtree/oracle.hpp"
#include "raagtree/presentation.hpp"
#include "raagtree/star_complex.hpp"
#include "raagtree/tree.hpp"

namespace fs = std::filesystem;
using namespace raagtree;

namespace {

enum Exit { ok = 0, io_or_parse = 1, not_linear = 2, verification_failed = 3, resource_cap = 4 };

struct RunConfig {
    std::string tree_path;
    int n = -1;
    int n_min = -1;
    int n_max = -1;
    std::string format = "json";
    bool verify = false;
    int d_max = 3;
    int subdivision = 0;  // 0: n + 1
    std::size_t cell_cap = default_cell_cap;
    std::string out_dir;
    std::string dump_cells;
    int k = -1;
    int k_min = 2;
    int k_max = 5;

    std::pair<int, int> n_range(int lo_default, int hi_default) const {
        if (n >= 0) return {n, n};
        int lo = n_min >= 0 ? n_min : lo_default;
        int hi = n_max >= 0 ? n_max : (n_min >= 0 ? n_min : hi_default);
        if (hi < lo) throw CLI::ValidationError("--n-max must not be smaller than --n-min");
        return {lo, hi};
    }
};

void write_atomically(const fs::path& target, const std::string& content) {
    fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out) throw std::ios_base::failure("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

int oracle_subdivision(const RunConfig& cfg, int n) {
    if (cfg.subdivision == 0) return n + 1;
    if (cfg.subdivision < n + 1) {
        std::cerr << "warning: subdivision " << cfg.subdivision << " is too coarse for n=" << n << "; using "
                  << n + 1 << "\n";
        return n + 1;
    }
    return cfg.subdivision;
}

struct Verdict {
    bool pass = true;
    std::string row;
};

Verdict verify_level(const RunConfig& cfg, const Tree& tree, const Presentation& pres) {
    const int n = pres.n;
    std::ostringstream row;
    auto cliques = raag_cliques(pres, 3);
    row << "n=" << n << "  generators=" << cliques[0] << " relations=" << cliques[1] << " triangles=" << cliques[2];
    if (n == 0) {
        // The configuration space of zero points is a single point.
        row << "  | trivial complex  PASS";
        return {cliques[0] == 0, row.str()};
    }
    const int pieces = oracle_subdivision(cfg, n);
    Tree fine = subdivide_edges(tree, pieces);
    CubeComplex complex(fine, n, cfg.d_max, cfg.cell_cap);
    if (!cfg.dump_cells.empty()) {
        std::ostringstream dump;
        complex.dump(dump, fine);
        write_atomically(fs::path(cfg.dump_cells) / ("cells_n" + std::to_string(n) + ".txt"), dump.str());
    }
    HomologyReport report = betti(complex, true);
    if (!cfg.out_dir.empty())
        write_atomically(fs::path(cfg.out_dir) / ("homology_n" + std::to_string(n) + ".json"), report.to_json());

    bool pass = report.boundary_squares_vanish && report.torsion_free() && report.betti[0] == 1 &&
                report.betti[1] == cliques[0];
    row << "  | subdivision=" << pieces << " b=(";
    for (std::size_t d = 0; d < report.betti.size(); ++d) row << (d ? "," : "") << report.betti[d];
    row << ")";
    if (report.betti.size() >= 3)
        pass = pass && report.betti[2] == cliques[1];
    else
        row << " b2=n/a";
    row << (report.torsion_free() ? " torsion-free" : " TORSION");
    if (!report.boundary_squares_vanish) row << " BOUNDARY-SQUARE-NONZERO";
    row << (pass ? "  PASS" : "  FAIL");
    return {pass, row.str()};
}

int cmd_present(const RunConfig& cfg) {
    Tree tree = load_tree(cfg.tree_path);
    StarDecomposition d = decompose(tree);
    auto format = parse_export_format(cfg.format);
    auto [lo, hi] = cfg.n_range(0, 0);
    bool all_pass = true;
    for (int n = lo; n <= hi; ++n) {
        Presentation p = assemble(d, n);
        std::string text = export_presentation(p, format);
        if (cfg.out_dir.empty())
            std::cout << text;
        else
            write_atomically(fs::path(cfg.out_dir) / ("presentation_n" + std::to_string(n) + "." + cfg.format), text);
        if (cfg.verify) {
            auto v = verify_level(cfg, tree, p);
            std::cerr << v.row << "\n";
            all_pass = all_pass && v.pass;
        }
    }
    return all_pass ? ok : verification_failed;
}

int cmd_verify(const RunConfig& cfg) {
    Tree tree = load_tree(cfg.tree_path);
    StarDecomposition d = decompose(tree);
    auto [lo, hi] = cfg.n_range(1, 3);
    bool all_pass = true;
    for (int n = lo; n <= hi; ++n) {
        auto v = verify_level(cfg, tree, assemble(d, n));
        std::cout << v.row << std::endl;
        all_pass = all_pass && v.pass;
    }
    return all_pass ? ok : verification_failed;
}

int cmd_table(const RunConfig& cfg) {
    int k_lo = cfg.k >= 0 ? cfg.k : cfg.k_min;
    int k_hi = cfg.k >= 0 ? cfg.k : cfg.k_max;
    if (k_lo < 2) throw CLI::ValidationError("arm counts start at 2");
    auto [lo, hi] = cfg.n_range(0, 6);
    std::cout << "rank of the star braid group (rows: arms k, columns: strands n)\n";
    std::cout << "k\\n";
    for (int n = lo; n <= hi; ++n) std::cout << std::setw(8) << n;
    std::cout << "\n";
    bool consistent = true;
    int variant_defined = 0, variant_disagree = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
        std::cout << std::setw(3) << k;
        for (int n = lo; n <= hi; ++n) {
            try {
                std::cout << std::setw(8) << rank(k, n);
            } catch (const std::logic_error& e) {
                consistent = false;
                std::cout << std::setw(8) << "ERR";
                std::cerr << e.what() << "\n";
            }
            std::int64_t variant;
            if (rank_closed_form_variant(k, n, variant)) {
                ++variant_defined;
                if (variant != rank_closed_form(k, n)) ++variant_disagree;
            }
        }
        std::cout << "\n";
    }
    std::cout << "check: basis size = 1 - chi(D_n) = 1 + (k-1)C(n+k-2,k-1) - C(n+k-1,k-1): "
              << (consistent ? "all entries agree" : "MISMATCH") << "\n";
    std::cout << "note: with C(n-k-1,k-1) as the last term the formula is undefined for n < k+1 and disagrees at "
              << variant_disagree << " of " << variant_defined << " defined entries\n";
    return consistent ? ok : verification_failed;
}

int cmd_stabilize(const RunConfig& cfg) {
    Tree tree = load_tree(cfg.tree_path);
    StarDecomposition d = decompose(tree);
    auto [lo, hi] = cfg.n_range(1, 1);
    if (cfg.n >= 0) lo = 1;
    if (hi < 1) throw CLI::ValidationError("stabilization needs n >= 1");
    for (int n = std::max(lo, 1); n <= hi; ++n) {
        try {
            auto map = stabilize(d, n);
            std::cout << "n=" << n - 1 << "->" << n << ": generators " << map.source.generators.size() << " -> "
                      << map.target.generators.size() << " (all mapped), relations " << map.source.relations.size()
                      << " -> " << map.target.relations.size() << " (" << map.mapped_relations << " mapped)  OK\n";
        } catch (const std::logic_error& e) {
            std::cout << "n=" << n - 1 << "->" << n << ": FAIL " << e.what() << "\n";
            return verification_failed;
        }
    }
    return ok;
}

int cmd_dump_star(const RunConfig& cfg) {
    if (cfg.k < 2 || cfg.n < 0) throw CLI::ValidationError("dump-star needs --k >= 2 and --n >= 0");
    dump_star_complex(std::cout, cfg.k, cfg.n);
    return ok;
}

void add_n_options(CLI::App* cmd, RunConfig& cfg) {
    auto* single = cmd->add_option("--n", cfg.n, "strand count")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n-min", cfg.n_min, "first strand count of a range")->check(CLI::NonNegativeNumber)->excludes(single);
    cmd->add_option("--n-max", cfg.n_max, "last strand count of a range")->check(CLI::NonNegativeNumber)->excludes(single);
}

void add_oracle_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--dmax", cfg.d_max, "highest cube dimension built")->check(CLI::IsMember({2, 3}));
    cmd->add_option("--subdivision", cfg.subdivision, "edges per original edge (default n+1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cell-cap", cfg.cell_cap, "refuse complexes with more cells in any dimension");
    cmd->add_option("--dump-cells", cfg.dump_cells, "directory for one-cell-per-line dumps");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Right-angled Artin presentations of braid groups of linear trees"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* present = app.add_subcommand("present", "write the presentation for each n");
    present->add_option("--tree", cfg.tree_path, "tree file (JSON or edge list)")->required();
    add_n_options(present, cfg);
    present->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot"}));
    present->add_option("--out", cfg.out_dir, "output directory (default: stdout)");
    present->add_flag("--verify", cfg.verify, "also compare against the cube complex homology");
    add_oracle_options(present, cfg);

    auto* verify = app.add_subcommand("verify", "compare presentations with cube complex homology");
    verify->add_option("--tree", cfg.tree_path, "tree file (JSON or edge list)")->required();
    add_n_options(verify, cfg);
    verify->add_option("--out", cfg.out_dir, "directory for homology report JSON");
    add_oracle_options(verify, cfg);

    auto* table = app.add_subcommand("table", "rank table of star braid groups");
    table->add_option("--k", cfg.k, "single arm count")->check(CLI::Range(2, 64));
    table->add_option("--k-min", cfg.k_min, "first arm count")->check(CLI::Range(2, 64));
    table->add_option("--k-max", cfg.k_max, "last arm count")->check(CLI::Range(2, 64));
    add_n_options(table, cfg);

    auto* stab = app.add_subcommand("stabilize", "check the stabilization chain 0 -> 1 -> ... -> n");
    stab->add_option("--tree", cfg.tree_path, "tree file (JSON or edge list)")->required();
    add_n_options(stab, cfg);

    auto* dump = app.add_subcommand("dump-star", "list the edges of D_n for a k-armed star");
    dump->add_option("--k", cfg.k, "arm count")->required();
    dump->add_option("--n", cfg.n, "strand count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : io_or_parse;
    }

    try {
        if (*present) return cmd_present(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*table) return cmd_table(cfg);
        if (*stab) return cmd_stabilize(cfg);
        if (*dump) return cmd_dump_star(cfg);
    } catch (const NotLinearError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return not_linear;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return resource_cap;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_or_parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_or_parse;
    }
    return io_or_parse;
}
