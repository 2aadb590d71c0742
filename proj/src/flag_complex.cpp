#include "dqa/flag_complex.hpp"

#include "dqa/error.hpp"

#include <atomic>
#include <charconv>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dqa {

OrderedSimplex::OrderedSimplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("an ordered simplex needs at least one vertex");
    }
    auto sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("ordered simplex has repeated vertices");
    }
}

std::string tuple_string(std::span<const Vertex> vertices) {
    std::string out = "(";
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += std::to_string(vertices[k]);
    }
    return out + ")";
}

std::string OrderedSimplex::to_string() const { return tuple_string(vertices_); }

OrderedSimplex face(const OrderedSimplex& s, std::size_t i) {
    if (s.dim() < 1) {
        throw std::out_of_range("face map needs a simplex of dimension at least 1");
    }
    if (i > static_cast<std::size_t>(s.dim())) {
        throw std::out_of_range("face index " + std::to_string(i) + " exceeds dimension " +
                                std::to_string(s.dim()));
    }
    std::vector<Vertex> out(s.begin(), s.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return OrderedSimplex(std::move(out));
}

std::optional<OrderedSimplex> face_hat(const OrderedSimplex& s, std::size_t i) {
    if (s.dim() == 0) {
        return std::nullopt;
    }
    return face(s, face_hat_position(s.dim(), i));
}

bool is_face(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t k = 0;
    for (std::size_t m = 0; m < b.size() && k < a.size(); ++m) {
        if (b[m] == a[k]) {
            ++k;
        }
    }
    return k == a.size() && !a.empty();
}

namespace {

/// Adds every codimension-one face of each level into the level below, top down.
void close_downwards(std::vector<std::vector<Vertex>>& levels) {
    for (std::size_t d = levels.size(); d-- > 1;) {
        sort_unique_tuples(levels[d], d + 1);
        const std::size_t width = d + 1;
        const std::size_t n = levels[d].size() / width;
        auto& below = levels[d - 1];
        below.reserve(below.size() + n * width * d);
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

using Levels = std::vector<std::vector<Vertex>>;

class CliqueEnumerator {
public:
    CliqueEnumerator(const Digraph& g, int max_dim, std::size_t ceiling, std::atomic<std::size_t>* counts,
                     std::atomic<bool>& abort)
        : g_(g), max_dim_(max_dim), ceiling_(ceiling), counts_(counts), abort_(abort) {}

    void run_root(Vertex root, Levels& out) {
        prefix_.assign(1, root);
        const auto out_root = g_.out_neighbors(root);
        ensure_depth(0);
        candidates_[0].assign(out_root.begin(), out_root.end());
        extend(0, out);
    }

private:
    void ensure_depth(std::size_t depth) {
        if (candidates_.size() <= depth) {
            candidates_.resize(depth + 1);
        }
    }

    bool emit(Levels& out) {
        const std::size_t d = prefix_.size() - 1;
        if (out.size() <= d) {
            out.resize(d + 1);
        }
        out[d].insert(out[d].end(), prefix_.begin(), prefix_.end());
        if (counts_[d].fetch_add(1, std::memory_order_relaxed) + 1 > ceiling_) {
            abort_.store(true, std::memory_order_relaxed);
        }
        return !abort_.load(std::memory_order_relaxed);
    }

    // Emits prefix_ and recurses on sink-end extensions by common out-neighbors.
    bool extend(std::size_t depth, Levels& out) {
        if (!emit(out)) {
            return false;
        }
        if (static_cast<int>(depth) >= max_dim_) {
            return true;
        }
        ensure_depth(depth + 1);
        for (std::size_t k = 0; k < candidates_[depth].size(); ++k) {
            const Vertex w = candidates_[depth][k];
            const auto out_w = g_.out_neighbors(w);
            auto& next = candidates_[depth + 1];
            next.clear();
            std::set_intersection(candidates_[depth].begin(), candidates_[depth].end(), out_w.begin(), out_w.end(),
                                  std::back_inserter(next));
            prefix_.push_back(w);
            const bool keep_going = extend(depth + 1, out);
            prefix_.pop_back();
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    const Digraph& g_;
    int max_dim_;
    std::size_t ceiling_;
    std::atomic<std::size_t>* counts_;
    std::atomic<bool>& abort_;
    std::vector<Vertex> prefix_;
    std::vector<std::vector<Vertex>> candidates_;
};

}  // namespace

DirectedFlagComplex DirectedFlagComplex::from_store(SimplexStore store, std::size_t num_vertices) {
    DirectedFlagComplex c;
    c.store_ = std::move(store);
    c.num_vertices_ = num_vertices;
    if (c.store_.dim() >= 0) {
        const auto& top = c.store_.level(0);
        for (Vertex v : top) {
            c.num_vertices_ = std::max<std::size_t>(c.num_vertices_, std::size_t{v} + 1);
        }
    }
    c.index_cofaces();
    return c;
}

DirectedFlagComplex DirectedFlagComplex::from_simplices(const std::vector<OrderedSimplex>& simplices,
                                                        std::size_t num_vertices) {
    Levels levels;
    for (const auto& s : simplices) {
        const auto d = static_cast<std::size_t>(s.dim());
        if (levels.size() <= d) {
            levels.resize(d + 1);
        }
        levels[d].insert(levels[d].end(), s.begin(), s.end());
    }
    close_downwards(levels);
    return from_store(SimplexStore(std::move(levels)), num_vertices);
}

void DirectedFlagComplex::index_cofaces() {
    const int top = dim();
    coface_offsets_.assign(static_cast<std::size_t>(std::max(top, 0)), {});
    coface_targets_.assign(static_cast<std::size_t>(std::max(top, 0)), {});
    std::vector<Vertex> buffer;
    for (int d = 0; d < top; ++d) {
        const std::size_t lower = count(d);
        const std::size_t upper = count(d + 1);
        std::vector<std::pair<SimplexIndex, SimplexIndex>> pairs;
        pairs.reserve(upper * static_cast<std::size_t>(d + 2));
        for (SimplexIndex t = 0; t < upper; ++t) {
            const auto tuple = simplex(d + 1, t);
            for (std::size_t drop = 0; drop < tuple.size(); ++drop) {
                buffer.clear();
                for (std::size_t m = 0; m < tuple.size(); ++m) {
                    if (m != drop) {
                        buffer.push_back(tuple[m]);
                    }
                }
                const auto f = find(buffer);
                if (!f) {
                    throw std::logic_error("complex is not closed under faces: missing face of " +
                                           OrderedSimplex(tuple).to_string());
                }
                pairs.emplace_back(*f, t);
            }
        }
        auto& offsets = coface_offsets_[static_cast<std::size_t>(d)];
        auto& targets = coface_targets_[static_cast<std::size_t>(d)];
        offsets.assign(lower + 1, 0);
        for (const auto& [f, t] : pairs) {
            ++offsets[f + 1];
        }
        for (std::size_t k = 0; k < lower; ++k) {
            offsets[k + 1] += offsets[k];
        }
        targets.resize(pairs.size());
        auto cursor = offsets;
        for (const auto& [f, t] : pairs) {
            targets[cursor[f]++] = t;
        }
        for (std::size_t k = 0; k < lower; ++k) {
            std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[k]),
                      targets.begin() + static_cast<std::ptrdiff_t>(offsets[k + 1]));
        }
    }
}

std::span<const SimplexIndex> DirectedFlagComplex::cofaces(int d, SimplexIndex i) const {
    if (d < 0 || d >= dim()) {
        return {};
    }
    const auto& offsets = coface_offsets_[static_cast<std::size_t>(d)];
    const auto& targets = coface_targets_[static_cast<std::size_t>(d)];
    return {targets.data() + offsets.at(i), offsets.at(i + 1) - offsets[i]};
}

DirectedFlagComplex build_complex(const Digraph& g, const BuildOptions& options) {
    const std::size_t n = g.num_vertices();
    const int max_dim = options.max_dim.value_or(static_cast<int>(std::max<std::size_t>(n, 1)) - 1);
    if (max_dim < 0) {
        throw std::invalid_argument("max_dim must be non-negative");
    }
    const std::size_t slots = static_cast<std::size_t>(std::min<int>(max_dim, static_cast<int>(n))) + 1;
    auto counts = std::make_unique<std::atomic<std::size_t>[]>(slots);
    std::atomic<bool> abort{false};

    constexpr std::size_t kBlock = 32;
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<Levels> results(blocks);
    std::atomic<std::size_t> next_block{0};

    auto work = [&] {
        CliqueEnumerator enumerator(g, max_dim, options.simplex_ceiling, counts.get(), abort);
        for (;;) {
            const std::size_t b = next_block.fetch_add(1);
            if (b >= blocks || abort.load()) {
                return;
            }
            for (std::size_t v = b * kBlock; v < std::min(n, (b + 1) * kBlock) && !abort.load(); ++v) {
                enumerator.run_root(static_cast<Vertex>(v), results[b]);
            }
        }
    };

    unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(blocks, 1))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    if (abort.load()) {
        std::vector<std::size_t> partial;
        for (std::size_t d = 0; d < slots && counts[d].load() > 0; ++d) {
            partial.push_back(counts[d].load());
        }
        throw GuardExceeded("simplex ceiling of " + std::to_string(options.simplex_ceiling) +
                                " per dimension exceeded",
                            std::move(partial));
    }

    // Blocks cover ascending root ranges and each is emitted depth-first in
    // ascending order, so concatenation is already lexicographically sorted.
    Levels levels;
    for (auto& block : results) {
        if (levels.size() < block.size()) {
            levels.resize(block.size());
        }
        for (std::size_t d = 0; d < block.size(); ++d) {
            levels[d].insert(levels[d].end(), block[d].begin(), block[d].end());
        }
        block.clear();
    }
    return DirectedFlagComplex::from_store(SimplexStore(std::move(levels)), n);
}

std::vector<std::size_t> simplex_counts(const DirectedFlagComplex& c) {
    auto counts = c.store().counts();
    if (counts.empty()) {
        counts.push_back(0);
    }
    return counts;
}

void write_complex(std::ostream& out, const DirectedFlagComplex& c) {
    for (int d = 0; d <= c.dim(); ++d) {
        out << "dim " << d << '\n';
        for (SimplexIndex i = 0; i < c.count(d); ++i) {
            const auto s = c.simplex(d, i);
            for (std::size_t k = 0; k < s.size(); ++k) {
                out << (k ? " " : "") << s[k];
            }
            out << '\n';
        }
    }
}

DirectedFlagComplex read_complex(std::istream& in) {
    std::vector<OrderedSimplex> simplices;
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
        bool header = false;
        while (tokens >> token) {
            if (vertices.empty() && !header && token == "dim") {
                header = true;
                break;
            }
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParseError(line_no, "malformed vertex id '" + token + "'");
            }
            vertices.push_back(v);
        }
        if (header || vertices.empty()) {
            continue;
        }
        try {
            simplices.emplace_back(std::move(vertices));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return DirectedFlagComplex::from_simplices(simplices);
}

}  // namespace dqa
