#include "dqa/export.hpp"

#include <ostream>

namespace dqa {

namespace {

std::string set_string(std::span<const Vertex> s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        out += (k ? "," : "") + std::to_string(s[k]);
    }
    return out + "}";
}

}  // namespace

void write_dot(std::ostream& out, const QGraph& g, const SimplicialComplexView& k) {
    out << "graph qgraph_" << g.q << " {\n";
    for (NodeId v = 0; v < g.size(); ++v) {
        out << "  n" << v << " [label=\"" << set_string(k.simplex(g.nodes[v])) << "\"];\n";
    }
    for (const auto& [a, b] : g.edges) {
        out << "  n" << a << " -- n" << b << ";\n";
    }
    out << "}\n";
}

void write_dot(std::ostream& out, const ConnectivityDigraph& g) {
    const auto& s = g.spec();
    out << "digraph q" << s.q << "_d" << s.i << "_d" << s.j << " {\n";
    for (NodeId v = 0; v < g.size(); ++v) {
        out << "  n" << v << " [label=\"" << tuple_string(g.simplex(v)) << "\"];\n";
    }
    for (const auto& [a, b] : g.graph().edges()) {
        out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
}

void write_dot(std::ostream& out, const Condensation& c, const ConnectivityDigraph& g) {
    out << "digraph condensation {\n";
    for (NodeId x = 0; x < c.size(); ++x) {
        std::string label;
        for (NodeId m : c.members(x)) {
            label += (label.empty() ? "" : " ") + tuple_string(g.simplex(m));
        }
        out << "  c" << x << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [a, b] : c.dag.edges()) {
        out << "  c" << a << " -> c" << b << ";\n";
    }
    out << "}\n";
}

nlohmann::ordered_json summary_json(const ConnectivityDigraph& g, const Condensation& c) {
    return {{"q", g.spec().q},       {"i", g.spec().i},         {"j", g.spec().j},
            {"nodes", g.size()},     {"edges", g.num_edges()},  {"scc_count", c.size()},
            {"condensation_edges", c.dag.num_edges()}};
}

nlohmann::ordered_json path_json(const SimplicialPath& p) {
    nlohmann::ordered_json simplices = nlohmann::ordered_json::array();
    for (const auto& s : p.simplices) {
        simplices.push_back(std::vector<Vertex>(s.begin(), s.end()));
    }
    return {{"spec", {{"q", p.spec.q}, {"i", p.spec.i}, {"j", p.spec.j}}},
            {"length", p.length()},
            {"fraction", to_double(p.fraction)},
            {"fraction_exact", to_string(p.fraction)},
            {"simplices", simplices},
            {"condensation_path_node_sizes", p.condensation_sizes}};
}

void write_structure_csv(std::ostream& out, const StructureVectors& v) {
    out << "vector";
    for (std::size_t k = 0; k < v.Q.size(); ++k) {
        out << ",q" << v.Q.size() - 1 - k;
    }
    out << "\n";
    auto row = [&](const char* name, const auto& values, auto&& fmt) {
        out << name;
        for (const auto& x : values) {
            out << ',' << fmt(x);
        }
        out << "\n";
    };
    auto plain = [](auto x) { return std::to_string(x); };
    row("Q", v.Q, plain);
    row("N", v.N, plain);
    row("T", v.T, [](const Fraction& f) { return to_string(f); });
    row("Qhat", v.Qhat, plain);
}

void write_grid_csv(std::ostream& out, const std::string& corner, const std::vector<std::string>& rows,
                    const std::vector<std::string>& cols, const std::vector<std::vector<std::optional<std::string>>>& cells,
                    const std::string& missing) {
    out << corner;
    for (const auto& c : cols) {
        out << ',' << c;
    }
    out << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << rows[r];
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << ',' << cells[r][c].value_or(missing);
        }
        out << "\n";
    }
}

}  // namespace dqa
