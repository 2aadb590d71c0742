#include "dqa/simplicial_complex.hpp"

#include "dqa/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dqa {

namespace {

void close_under_subsets(std::vector<std::vector<Vertex>>& levels) {
    for (std::size_t d = levels.size(); d-- > 1;) {
        sort_unique_tuples(levels[d], d + 1);
        const std::size_t width = d + 1;
        const std::size_t n = levels[d].size() / width;
        auto& below = levels[d - 1];
        for (std::size_t t = 0; t < n; ++t) {
            const Vertex* tuple = levels[d].data() + t * width;
            for (std::size_t drop = 0; drop < width; ++drop) {
                for (std::size_t m = 0; m < width; ++m) {
                    if (m != drop) {
                        below.push_back(tuple[m]);
                    }
                }
            }
        }
    }
}

}  // namespace

SimplicialComplexView SimplicialComplexView::from_simplices(const std::vector<std::vector<Vertex>>& simplices) {
    std::vector<std::vector<Vertex>> levels;
    for (auto s : simplices) {
        if (s.empty()) {
            continue;
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw std::invalid_argument("simplex has repeated vertices");
        }
        const std::size_t d = s.size() - 1;
        if (levels.size() <= d) {
            levels.resize(d + 1);
        }
        levels[d].insert(levels[d].end(), s.begin(), s.end());
    }
    close_under_subsets(levels);
    return from_store(SimplexStore(std::move(levels)));
}

SimplicialComplexView SimplicialComplexView::from_directed(const DirectedFlagComplex& c) {
    std::vector<std::vector<Vertex>> levels(static_cast<std::size_t>(std::max(c.dim() + 1, 0)));
    for (int d = 0; d <= c.dim(); ++d) {
        auto& level = levels[static_cast<std::size_t>(d)];
        level = c.store().level(d);
        const auto width = static_cast<std::ptrdiff_t>(d + 1);
        for (auto it = level.begin(); it != level.end(); it += width) {
            std::sort(it, it + width);
        }
    }
    // Every subset of a directed clique is an ordered subsequence, so the
    // sorted tuples are already subset-closed.
    return from_store(SimplexStore(std::move(levels)));
}

SimplicialComplexView SimplicialComplexView::from_store(SimplexStore store) {
    SimplicialComplexView view;
    view.store_ = std::move(store);
    return view;
}

std::optional<SimplexIndex> SimplicialComplexView::find(std::span<const Vertex> vertices) const {
    if (std::is_sorted(vertices.begin(), vertices.end())) {
        return store_.find(vertices);
    }
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    return store_.find(sorted);
}

SimplicialComplexView read_simplices(std::istream& in) {
    std::vector<std::vector<Vertex>> simplices;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::string token;
        std::vector<Vertex> vertices;
        while (tokens >> token) {
            if (vertices.empty() && token == "dim") {
                vertices.clear();
                break;
            }
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParseError(line_no, "malformed vertex id '" + token + "'");
            }
            vertices.push_back(v);
        }
        if (vertices.empty()) {
            continue;
        }
        auto sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ParseError(line_no, "simplex has repeated vertices");
        }
        simplices.push_back(std::move(vertices));
    }
    return SimplicialComplexView::from_simplices(simplices);
}

}  // namespace dqa
