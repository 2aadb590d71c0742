// dqa: classical and directed Q-analysis of digraphs from the command line.

#include "dqa/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
    dqa::cli::AnalysisConfig config;
    std::string di_range;
    std::string dj_range;
    int max_dim = -1;
    int n = -1;

    CLI::App app{"Q-analysis of directed flag complexes"};
    app.require_subcommand(1);
    app.add_option("-i,--input", config.input, "input file");
    app.add_option("--format", config.format, "input format")
        ->check(CLI::IsMember({"auto", "edges", "matrix", "named", "complex"}));
    app.add_option("--emit", config.emit, "report format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("-o,--out", config.out, "write the report here instead of stdout");
    app.add_option("--max-dim", max_dim, "highest simplex dimension enumerated");
    app.add_option("--q", config.q, "connection dimension");
    app.add_option("--di", config.di, "face index of the first simplex");
    app.add_option("--dj", config.dj, "face index of the second simplex");
    app.add_option("--di-range", di_range, "e.g. 0..5 or 0,2,4");
    app.add_option("--dj-range", dj_range, "e.g. 0..5 or 0,2,4");
    app.add_flag("--include-diagonal", config.include_diagonal, "paths: keep cells with di = dj");
    app.add_option("--guard", config.guard, "simplex ceiling per dimension");
    app.add_option("--retries", config.retries, "condensation paths tried per cell");
    app.add_option("--k", config.k, "clique size for communities");
    app.add_option("--n", n, "dimension for pm-check (default: complex dimension)");
    app.add_flag("--directed", config.directed, "pm-check along (di, dj)");
    app.add_option("--threads", config.threads, "worker threads (0 = all cores)");
    app.add_option("--dump-paths", config.dump_paths, "paths: directory for per-cell JSON reports");
    app.add_option("--map-out", config.map_out, "convert: write the id to label dictionary here");

    const std::map<std::string, std::string> blurbs{
        {"count", "simplex counts per dimension"},
        {"classic", "structure vectors and betti numbers of the unordered complex"},
        {"qgraph", "q-graph size and component count"},
        {"communities", "k-clique communities"},
        {"pm-check", "pseudomanifold certificate"},
        {"dq-build", "(q,i,j) connectivity digraph"},
        {"condense", "strongly connected components of the connectivity digraph"},
        {"paths", "longest simplicial path per (di,dj) cell"},
        {"topology", "betti numbers and height of the condensation poset"},
        {"convert", "normalize labelled or matrix input to an edge list"},
    };
    for (const auto& name : dqa::cli::commands()) {
        app.add_subcommand(name, blurbs.at(name))->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);
    config.command = app.get_subcommands().front()->get_name();
    if (max_dim >= 0) {
        config.max_dim = max_dim;
    }
    if (n >= 0) {
        config.n = n;
    }
    try {
        if (!di_range.empty()) {
            config.di_range = dqa::cli::parse_range(di_range);
        }
        if (!dj_range.empty()) {
            config.dj_range = dqa::cli::parse_range(dj_range);
        }
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return dqa::cli::kParseError;
    }

    const auto result = dqa::cli::run(config);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
