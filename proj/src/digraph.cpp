#include "dqa/digraph.hpp"

#include "dqa/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dqa {

namespace {

/// Strips a '#' comment and surrounding whitespace.
std::string_view strip_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tokens(std::string_view line, std::string_view separators) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(separators, pos);
        if (start == std::string_view::npos) {
            break;
        }
        auto end = line.find_first_of(separators, start);
        if (end == std::string_view::npos) {
            end = line.size();
        }
        tokens.push_back(line.substr(start, end - start));
        pos = end;
    }
    return tokens;
}

std::optional<std::uint64_t> parse_unsigned(std::string_view token) {
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        return std::nullopt;
    }
    return value;
}

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool by_source,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& neighbors) {
    offsets.assign(n + 1, 0);
    for (const auto& e : edges) {
        ++offsets[(by_source ? e.source : e.target) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        offsets[v + 1] += offsets[v];
    }
    neighbors.resize(edges.size());
    auto cursor = offsets;
    for (const auto& e : edges) {
        const Vertex key = by_source ? e.source : e.target;
        neighbors[cursor[key]++] = by_source ? e.target : e.source;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                  neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
    }
}

}  // namespace

Digraph::Digraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.source == e.target) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.source));
        }
        if (e.source >= num_vertices_ || e.target >= num_vertices_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_csr(num_vertices_, edges_, true, out_offsets_, out_targets_);
    build_csr(num_vertices_, edges_, false, in_offsets_, in_sources_);
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
    return {out_targets_.data() + out_offsets_.at(v), out_offsets_.at(v + 1) - out_offsets_[v]};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
    return {in_sources_.data() + in_offsets_.at(v), in_offsets_.at(v + 1) - in_offsets_[v]};
}

bool Digraph::has_edge(Vertex source, Vertex target) const {
    if (source >= num_vertices_ || target >= num_vertices_) {
        return false;
    }
    const auto out = out_neighbors(source);
    return std::binary_search(out.begin(), out.end(), target);
}

Digraph load_edge_list(std::istream& in, std::optional<std::size_t> num_vertices) {
    std::vector<Edge> edges;
    std::size_t max_id_plus_one = 0;
    std::optional<std::size_t> declared;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // "# vertices N" is written by write_edge_list so isolated vertices survive a round trip.
        if (constexpr std::string_view header = "# vertices "; std::string_view(line).starts_with(header)) {
            declared = parse_unsigned(strip_line(std::string_view(line).substr(header.size())));
        }
        const auto content = strip_line(line);
        if (content.empty()) {
            continue;
        }
        const auto tokens = split_tokens(content, " \t,");
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two vertex ids, found " + std::to_string(tokens.size()) +
                                          " tokens");
        }
        const auto src = parse_unsigned(tokens[0]);
        const auto dst = parse_unsigned(tokens[1]);
        if (!src || !dst) {
            throw ParseError(line_no, "malformed vertex id");
        }
        if (*src > UINT32_MAX - 1 || *dst > UINT32_MAX - 1) {
            throw ParseError(line_no, "vertex id too large");
        }
        if (*src == *dst) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(*src));
        }
        if (num_vertices && (*src >= *num_vertices || *dst >= *num_vertices)) {
            throw ParseError(line_no, "vertex id exceeds declared vertex count");
        }
        max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(*src, *dst) + 1);
        edges.push_back({static_cast<Vertex>(*src), static_cast<Vertex>(*dst)});
    }
    if (!num_vertices && declared) {
        num_vertices = std::max(*declared, max_id_plus_one);
    }
    return Digraph(num_vertices.value_or(max_id_plus_one), std::move(edges));
}

LabeledDigraph load_labeled_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = strip_line(line);
        if (content.empty()) {
            continue;
        }
        const auto tokens = split_tokens(content, " \t,");
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two vertex labels, found " + std::to_string(tokens.size()) +
                                          " tokens");
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError(line_no, "self-loop at vertex " + std::string(tokens[0]));
        }
        raw.emplace_back(tokens[0], tokens[1]);
    }

    std::vector<std::string> labels;
    for (const auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const bool numeric = std::all_of(labels.begin(), labels.end(),
                                     [](const std::string& s) { return parse_unsigned(s).has_value(); });
    if (numeric) {
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            return *parse_unsigned(a) < *parse_unsigned(b);
        });
    }
    std::map<std::string, Vertex> ids;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        ids.emplace(labels[v], static_cast<Vertex>(v));
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) {
        edges.push_back({ids.at(a), ids.at(b)});
    }
    return {Digraph(labels.size(), std::move(edges)), std::move(labels)};
}

Digraph load_adjacency_matrix(std::istream& in) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::size_t> row_lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = strip_line(line);
        if (content.empty()) {
            continue;
        }
        std::vector<std::uint8_t> row;
        for (const auto token : split_tokens(content, " \t,;")) {
            if (token == "0") {
                row.push_back(0);
            } else if (token == "1") {
                row.push_back(1);
            } else {
                throw ParseError(line_no, "non-binary matrix entry '" + std::string(token) + "'");
            }
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }
    const std::size_t n = rows.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ParseError(row_lines[i], "matrix is not square: row has " + std::to_string(rows[i].size()) +
                                               " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] == 0) {
                continue;
            }
            if (i == j) {
                throw ParseError(row_lines[i], "nonzero diagonal entry at " + std::to_string(i));
            }
            edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return Digraph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Digraph& g) {
    out << "# vertices " << g.num_vertices() << '\n';
    for (const auto& e : g.edges()) {
        out << e.source << ' ' << e.target << '\n';
    }
}

Digraph orient_ascending(const Digraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const auto& e : g.edges()) {
        edges.push_back({std::min(e.source, e.target), std::max(e.source, e.target)});
    }
    return Digraph(g.num_vertices(), std::move(edges));
}

}  // namespace dqa
