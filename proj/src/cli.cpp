#include "dqa/cli.hpp"

#include "dqa/classic.hpp"
#include "dqa/directed.hpp"
#include "dqa/error.hpp"
#include "dqa/export.hpp"
#include "dqa/flag_complex.hpp"
#include "dqa/paths.hpp"
#include "dqa/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace dqa::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::string vec(const auto& values) {
    std::string out = "(";
    bool first = true;
    for (const auto& v : values) {
        out += (first ? "" : ",");
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Fraction>) {
            out += to_string(v);
        } else {
            out += std::to_string(v);
        }
        first = false;
    }
    return out + ")";
}

bool is_integer(const std::string& token) {
    return !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open input '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string detect_format(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        for (char& ch : line) {
            if (ch == ',' || ch == ';') {
                ch = ' ';
            }
        }
        std::istringstream tokens(line);
        std::vector<std::string> parts;
        for (std::string t; tokens >> t;) {
            parts.push_back(t);
        }
        if (parts.empty()) {
            continue;
        }
        if (parts.front() == "dim") {
            return "complex";
        }
        if (!std::all_of(parts.begin(), parts.end(), is_integer)) {
            return "named";
        }
        return parts.size() == 2 ? "edges" : "matrix";
    }
    return "edges";
}

struct Input {
    std::optional<Digraph> graph;
    std::vector<std::string> labels;
    std::optional<DirectedFlagComplex> complex;
};

Input load(const AnalysisConfig& config) {
    if (config.input.empty()) {
        throw UsageError("no input file given (--input)");
    }
    const std::string text = read_file(config.input);
    const std::string format = config.format == "auto" ? detect_format(text) : config.format;
    std::istringstream in(text);
    Input input;
    if (format == "edges") {
        input.graph = load_edge_list(in);
    } else if (format == "matrix") {
        input.graph = load_adjacency_matrix(in);
    } else if (format == "named") {
        auto labeled = load_labeled_edge_list(in);
        input.graph = std::move(labeled.graph);
        input.labels = std::move(labeled.labels);
    } else if (format == "complex") {
        input.complex = read_complex(in);
    } else {
        throw UsageError("unknown input format '" + format + "'");
    }
    return input;
}

const Digraph& need_graph(const Input& input, const std::string& command) {
    if (!input.graph) {
        throw UsageError(command + " needs a digraph input, not a complex");
    }
    return *input.graph;
}

DirectedFlagComplex complex_of(const Input& input, const AnalysisConfig& config) {
    if (input.complex) {
        return *input.complex;
    }
    BuildOptions options;
    options.max_dim = config.max_dim;
    options.simplex_ceiling = config.guard;
    options.workers = config.threads;
    return build_complex(*input.graph, options);
}

void require_emit(const AnalysisConfig& config, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (config.emit == a) {
            return;
        }
    }
    throw UsageError("--emit " + config.emit + " is not available for " + config.command);
}

ConnectionSpec spec_of(const AnalysisConfig& config) {
    if (config.q < 0) {
        throw UsageError("q must be non-negative");
    }
    return {config.q, config.di, config.dj};
}

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void cmd_count(const AnalysisConfig& config, CommandResult& r) {
    require_emit(config, {"text", "json"});
    const auto input = load(config);
    const auto complex = complex_of(input, config);
    const auto counts = simplex_counts(complex);
    if (complex.total() == 0) {
        r.err += "warning: input has no vertices\n";
    }
    if (config.emit == "json") {
        r.out = json_text({{"counts", counts}});
        return;
    }
    for (std::size_t d = 0; d < counts.size(); ++d) {
        r.out += (d ? " " : "") + std::string("dim") + std::to_string(d) + ":" + std::to_string(counts[d]);
    }
    r.out += "\n";
}

void cmd_classic(const AnalysisConfig& config, CommandResult& r) {
    require_emit(config, {"text", "json", "csv"});
    const auto view = SimplicialComplexView::from_directed(complex_of(load(config), config));
    const auto v = structure_vectors(view);
    const auto betti = betti_z2(view, std::max(view.dim(), 0));
    if (config.emit == "csv") {
        std::ostringstream out;
        write_structure_csv(out, v);
        out << "betti";
        for (auto b : betti) {
            out << ',' << b;
        }
        out << "\n";
        r.out = out.str();
    } else if (config.emit == "json") {
        std::vector<std::string> t;
        for (const auto& f : v.T) {
            t.push_back(to_string(f));
        }
        r.out = json_text({{"Q", v.Q}, {"N", v.N}, {"T", t}, {"Qhat", v.Qhat}, {"betti", betti}});
    } else {
        r.out = "Q=" + vec(v.Q) + " N=" + vec(v.N) + " T=" + vec(v.T) + " Qhat=" + vec(v.Qhat) +
                " betti=" + vec(betti) + "\n";
    }
}

void cmd_qgraph(const AnalysisConfig& config, CommandResult& r) {
    require_emit(config, {"text", "json", "dot"});
    const auto view = SimplicialComplexView::from_directed(complex_of(load(config), config));
    const auto g = build_q_graph(view, config.q);
    const auto components = q_components(g);
    if (config.emit == "dot") {
        std::ostringstream out;
        write_dot(out, g, view);
        r.out = out.str();
    } else if (config.emit == "json") {
        r.out = json_text({{"q", g.q}, {"nodes", g.size()}, {"edges", g.edges.size()}, {"components", components.size()}});
    } else {
        r.out = "q=" + std::to_string(g.q) + " nodes=" + std::to_string(g.size()) +
                " edges=" + std::to_string(g.edges.size()) + " components=" + std::to_string(components.size()) + "\n";
    }
}

void cmd_communities(const AnalysisConfig& config, CommandResult& r) {
    require_emit(config, {"text", "json"});
    const auto input = load(config);
    const auto communities = clique_communities(need_graph(input, config.command), config.k);
    if (config.emit == "json") {
        r.out = json_text({{"k", config.k}, {"communities", communities}});
        return;
    }
    for (const auto& community : communities) {
        std::string line;
        for (const auto& clique : community) {
            line += (line.empty() ? "" : " ") + tuple_string(clique);
        }
        r.out += line + "\n";
    }
}

void cmd_pm_check(const AnalysisConfig& config, CommandResult& r) {
    require_emit(config, {"text", "json"});
    const auto complex = complex_of(load(config), config);
    const int n = config.n.value_or(complex.dim());
    const auto cert = config.directed
                          ? directed_pseudomanifold_check(complex, n, config.di, config.dj)
                          : pseudomanifold_check(SimplicialComplexView::from_directed(complex), n);
    if (config.emit == "json") {
        r.out = json_text({{"n", n},
                           {"pseudomanifold", cert.is_pm},
                           {"with_boundary", cert.with_boundary},
                           {"boundary", cert.boundary},
                           {"violations", cert.violations}});
        return;
    }
    r.out = std::string("pseudomanifold=") + (cert.is_pm ? "yes" : "no") +
            " with_boundary=" + (cert.with_boundary ? "yes" : "no") + "\n";
    for (const auto& b : cert.boundary) {
        r.out += "boundary " + tuple_string(b) + "\n";
    }
    for (const auto& v : cert.violations) {
        r.out += "violation: " + v + "\n";
    }
}

void cmd_dq(const AnalysisConfig& config, CommandResult& r, bool condensed) {
    require_emit(config, {"text", "json", "dot"});
    const auto complex = complex_of(load(config), config);
    DigraphOptions options;
    options.workers = config.threads;
    const auto g = build_connectivity_digraph(complex, spec_of(config), options);
    const auto c = condense(g);
    if (config.emit == "dot") {
        std::ostringstream out;
        if (condensed) {
            write_dot(out, c, g);
        } else {
            write_dot(out, g);
        }
        r.out = out.str();
    } else if (config.emit == "json") {
        r.out = json_text(summary_json(g, c));
    } else if (condensed) {
        r.out = to_string(g.spec()) + " components=" + std::to_string(c.size()) +
                " edges=" + std::to_string(c.dag.num_edges()) + "\n";
    } else {
        r.out = to_string(g.spec()) + " nodes=" + std::to_string(g.size()) +
                " edges=" + std::to_string(g.num_edges()) + "\n";
    }
}

struct Cell {
    ConnectionSpec spec;
    bool skipped = false;
    std::optional<SimplicialPath> path;
    std::string problem;
};

void cmd_paths(const AnalysisConfig& config, CommandResult& r) {
    require_emit(config, {"text", "json", "csv"});
    const auto complex = complex_of(load(config), config);
    const auto rows = config.di_range.value_or(std::vector<std::size_t>{config.di});
    const auto cols = config.dj_range.value_or(std::vector<std::size_t>{config.dj});
    spec_of(config);

    if (config.q > complex.dim()) {
        r.err += "no simplices of dimension >= " + std::to_string(config.q) + "; nothing to compute\n";
        if (config.emit == "csv") {
            r.out = "";
        } else if (config.emit == "json") {
            r.out = json_text({{"q", config.q}, {"cells", nlohmann::ordered_json::array()}});
        }
        return;
    }

    std::vector<Cell> cells;
    for (auto i : rows) {
        for (auto j : cols) {
            cells.push_back({{config.q, i, j}, i == j && !config.include_diagonal, std::nullopt, ""});
        }
    }
    PathOptions options;
    options.retries = config.retries;
    auto solve = [&](Cell& cell) {
        try {
            cell.path = longest_simplicial_path(complex, cell.spec, options);
        } catch (const InfeasiblePath& e) {
            cell.problem = e.what();
        }
    };
    const unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    std::vector<std::future<void>> running;
    for (auto& cell : cells) {
        if (cell.skipped) {
            continue;
        }
        if (running.size() >= workers) {
            running.front().get();
            running.erase(running.begin());
        }
        running.push_back(std::async(std::launch::async, solve, std::ref(cell)));
    }
    for (auto& f : running) {
        f.get();
    }

    bool infeasible = false;
    for (const auto& cell : cells) {
        if (!cell.skipped && !cell.path) {
            infeasible = true;
            r.err += "infeasible " + to_string(cell.spec) + ": " + cell.problem + "\n";
        }
    }
    if (!config.dump_paths.empty()) {
        std::filesystem::create_directories(config.dump_paths);
        for (const auto& cell : cells) {
            if (cell.path) {
                std::ofstream f(std::filesystem::path(config.dump_paths) /
                                ("path_q" + std::to_string(cell.spec.q) + "_i" + std::to_string(cell.spec.i) + "_j" +
                                 std::to_string(cell.spec.j) + ".json"));
                f << json_text(path_json(*cell.path));
            }
        }
    }

    if (config.emit == "csv") {
        std::vector<std::string> row_labels;
        std::vector<std::string> col_labels;
        for (auto i : rows) {
            row_labels.push_back("d" + std::to_string(i));
        }
        for (auto j : cols) {
            col_labels.push_back("d" + std::to_string(j));
        }
        std::vector<std::vector<std::optional<std::string>>> lengths(rows.size());
        std::vector<std::vector<std::optional<std::string>>> fractions(rows.size());
        for (std::size_t a = 0; a < rows.size(); ++a) {
            for (std::size_t b = 0; b < cols.size(); ++b) {
                const auto& cell = cells[a * cols.size() + b];
                if (cell.skipped) {
                    lengths[a].push_back("");
                    fractions[a].push_back("");
                } else if (cell.path) {
                    lengths[a].push_back(std::to_string(cell.path->length()));
                    std::ostringstream f;
                    f.precision(4);
                    f << to_double(cell.path->fraction);
                    fractions[a].push_back(f.str());
                } else {
                    lengths[a].push_back(std::nullopt);
                    fractions[a].push_back(std::nullopt);
                }
            }
        }
        std::ostringstream out;
        out << "# lengths q=" << config.q << "\n";
        write_grid_csv(out, "di\\dj", row_labels, col_labels, lengths);
        out << "\n# fractions q=" << config.q << "\n";
        write_grid_csv(out, "di\\dj", row_labels, col_labels, fractions);
        r.out = out.str();
    } else if (config.emit == "json") {
        auto list = nlohmann::ordered_json::array();
        for (const auto& cell : cells) {
            if (cell.path) {
                list.push_back(path_json(*cell.path));
            } else if (!cell.skipped) {
                list.push_back({{"spec", {{"q", cell.spec.q}, {"i", cell.spec.i}, {"j", cell.spec.j}}},
                                {"status", "infeasible"}});
            }
        }
        r.out = json_text({{"q", config.q}, {"cells", list}});
    } else {
        for (const auto& cell : cells) {
            if (cell.skipped) {
                continue;
            }
            if (cell.path) {
                std::ostringstream f;
                f.precision(4);
                f << to_double(cell.path->fraction);
                r.out += to_string(cell.spec) + " length=" + std::to_string(cell.path->length()) +
                         " fraction=" + f.str() + "\n";
            } else {
                r.out += to_string(cell.spec) + " length=NA fraction=NA\n";
            }
        }
    }
    if (infeasible) {
        r.exit_code = kInfeasible;
    }
}

void cmd_topology(const AnalysisConfig& config, CommandResult& r) {
    require_emit(config, {"text", "json"});
    const auto complex = complex_of(load(config), config);
    const auto g = build_connectivity_digraph(complex, spec_of(config));
    const auto c = condense(g);
    const Poset poset(c.dag);
    const auto order = order_complex(poset, std::numeric_limits<int>::max(), std::min<std::size_t>(config.guard, 1'000'000));
    const auto betti = betti_z2(order, std::max(order.dim(), 0));
    const auto height = poset_height(poset);
    if (config.emit == "json") {
        r.out = json_text({{"q", config.q},
                           {"i", config.di},
                           {"j", config.dj},
                           {"poset_size", poset.size()},
                           {"height", height},
                           {"betti", betti}});
        return;
    }
    r.out = to_string(g.spec()) + " betti=" + vec(betti) + " height=" + std::to_string(height) + "\n";
}

void cmd_convert(const AnalysisConfig& config, CommandResult& r) {
    const auto input = load(config);
    std::ostringstream out;
    write_edge_list(out, need_graph(input, config.command));
    r.out = out.str();
    if (!config.map_out.empty()) {
        std::ofstream map(config.map_out);
        if (!map) {
            throw Error("cannot write '" + config.map_out + "'");
        }
        for (std::size_t v = 0; v < input.labels.size(); ++v) {
            map << v << ' ' << input.labels[v] << '\n';
        }
    }
}

}  // namespace

std::vector<std::size_t> parse_range(const std::string& text) {
    auto number = [&](std::string_view s) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed range '" + text + "'");
        }
        return v;
    };
    std::vector<std::size_t> out;
    const std::string_view t(text);
    std::size_t sep = t.find("..");
    std::size_t width = 2;
    if (sep == std::string_view::npos && t.find(',') == std::string_view::npos) {
        sep = t.find('-');
        width = 1;
    }
    if (sep != std::string_view::npos) {
        const auto lo = number(t.substr(0, sep));
        const auto hi = number(t.substr(sep + width));
        for (auto v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
    } else {
        std::size_t start = 0;
        while (start <= t.size()) {
            const auto comma = t.find(',', start);
            out.push_back(number(t.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty range '" + text + "'");
    }
    return out;
}

CommandResult run(const AnalysisConfig& config) {
    CommandResult r;
    try {
        const auto& c = config.command;
        if (c == "count") {
            cmd_count(config, r);
        } else if (c == "classic") {
            cmd_classic(config, r);
        } else if (c == "qgraph") {
            cmd_qgraph(config, r);
        } else if (c == "communities") {
            cmd_communities(config, r);
        } else if (c == "pm-check") {
            cmd_pm_check(config, r);
        } else if (c == "dq-build") {
            cmd_dq(config, r, false);
        } else if (c == "condense") {
            cmd_dq(config, r, true);
        } else if (c == "paths") {
            cmd_paths(config, r);
        } else if (c == "topology") {
            cmd_topology(config, r);
        } else if (c == "convert") {
            cmd_convert(config, r);
        } else {
            throw UsageError("unknown command '" + c + "'");
        }
        if (!config.out.empty()) {
            std::ofstream f(config.out, std::ios::binary);
            if (!f) {
                throw Error("cannot write '" + config.out + "'");
            }
            f << r.out;
            r.out.clear();
        }
    } catch (const ParseError& e) {
        r = {kParseError, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const UsageError& e) {
        r = {kParseError, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        r = {kParseError, "", std::string("invalid input: ") + e.what() + "\n"};
    } catch (const GuardExceeded& e) {
        r = {kGuardExceeded, "", std::string("guard exceeded: ") + e.what() + "\n"};
        if (!e.partial_counts().empty()) {
            r.err += "partial counts: " + vec(e.partial_counts()) + "\n";
        }
    } catch (const InfeasiblePath& e) {
        r = {kInfeasible, "", std::string("infeasible: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        r = {kFailure, "", std::string("error: ") + e.what() + "\n"};
    }
    return r;
}

}  // namespace dqa::cli
