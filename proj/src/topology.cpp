#include "dqa/topology.hpp"

#include "dqa/error.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <unordered_map>

namespace dqa {

Poset::Poset(CsrGraph relation) : relation_(std::move(relation)) {
    for (NodeId v = 0; v < relation_.size(); ++v) {
        if (relation_.has_edge(v, v)) {
            throw std::invalid_argument("poset relation has a loop");
        }
    }
    auto order = topological_order(relation_);
    if (!order) {
        throw std::invalid_argument("poset relation has a directed cycle");
    }
    order_ = std::move(*order);
}

std::size_t poset_height(const Poset& p) {
    std::vector<std::size_t> height(p.size(), 0);
    std::size_t best = 0;
    const auto& order = p.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (NodeId s : p.relation().successors(*it)) {
            height[*it] = std::max(height[*it], height[s] + 1);
        }
        best = std::max(best, height[*it]);
    }
    return best;
}

SimplicialComplexView order_complex(const Poset& p, int max_dim, std::size_t ceiling) {
    const std::size_t n = p.size();
    // Strict up-sets, memoized in reverse topological order.
    std::vector<std::vector<NodeId>> above(n);
    std::size_t relations = 0;
    const auto& order = p.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<NodeId> acc;
        for (NodeId s : p.relation().successors(*it)) {
            std::vector<NodeId> merged;
            merged.reserve(acc.size() + above[s].size() + 1);
            std::set_union(acc.begin(), acc.end(), above[s].begin(), above[s].end(), std::back_inserter(merged));
            const auto pos = std::lower_bound(merged.begin(), merged.end(), s);
            if (pos == merged.end() || *pos != s) {
                merged.insert(pos, s);
            }
            acc = std::move(merged);
        }
        relations += acc.size();
        if (max_dim >= 1 && n + relations > ceiling) {
            throw GuardExceeded("order complex exceeds " + std::to_string(ceiling) + " simplices");
        }
        above[*it] = std::move(acc);
    }

    std::vector<std::vector<Vertex>> levels(1);
    std::size_t produced = 0;
    std::vector<NodeId> chain;
    std::vector<Vertex> sorted;

    auto emit = [&] {
        if (++produced > ceiling) {
            throw GuardExceeded("order complex exceeds " + std::to_string(ceiling) + " simplices");
        }
        const std::size_t d = chain.size() - 1;
        if (levels.size() <= d) {
            levels.resize(d + 1);
        }
        sorted.assign(chain.begin(), chain.end());
        std::sort(sorted.begin(), sorted.end());
        levels[d].insert(levels[d].end(), sorted.begin(), sorted.end());
    };

    auto extend = [&](auto&& self) -> void {
        emit();
        if (static_cast<int>(chain.size()) - 1 >= max_dim) {
            return;
        }
        for (NodeId next : above[chain.back()]) {
            chain.push_back(next);
            self(self);
            chain.pop_back();
        }
    };

    for (NodeId x = 0; x < n; ++x) {
        chain.assign(1, x);
        extend(extend);
    }
    if (n == 0) {
        levels.clear();
    }
    return SimplicialComplexView::from_store(SimplexStore(std::move(levels)));
}

namespace {

std::vector<SimplexIndex> boundary_column(const SimplexStore& store, int d, SimplexIndex i,
                                          std::vector<Vertex>& buffer) {
    const auto tuple = store.at(d, i);
    std::vector<SimplexIndex> column;
    column.reserve(tuple.size());
    for (std::size_t drop = 0; drop < tuple.size(); ++drop) {
        buffer.clear();
        for (std::size_t m = 0; m < tuple.size(); ++m) {
            if (m != drop) {
                buffer.push_back(tuple[m]);
            }
        }
        const auto f = store.find(buffer);
        if (!f) {
            throw std::logic_error("complex is not closed under faces");
        }
        column.push_back(*f);
    }
    std::sort(column.begin(), column.end());
    // Equal faces cancel in pairs over Z2.
    std::vector<SimplexIndex> reduced;
    for (std::size_t a = 0; a < column.size();) {
        std::size_t b = a;
        while (b < column.size() && column[b] == column[a]) {
            ++b;
        }
        if ((b - a) % 2 == 1) {
            reduced.push_back(column[a]);
        }
        a = b;
    }
    return reduced;
}

void symmetric_difference_into(std::vector<SimplexIndex>& target, const std::vector<SimplexIndex>& other) {
    std::vector<SimplexIndex> out;
    out.reserve(target.size() + other.size());
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(), std::back_inserter(out));
    target = std::move(out);
}

}  // namespace

ChainComplexZ2 ChainComplexZ2::from(const SimplicialComplexView& k) {
    return from_store(k.store());
}

ChainComplexZ2 ChainComplexZ2::from(const DirectedFlagComplex& k) {
    return from_store(k.store());
}

// Faces of a sorted tuple stay sorted and faces of an ordered tuple are its
// d_i images, so dropping one position covers both cases.
ChainComplexZ2 ChainComplexZ2::from_store(const SimplexStore& store) {
    ChainComplexZ2 chains;
    std::vector<Vertex> buffer;
    for (int d = 0; d <= store.dim(); ++d) {
        chains.cells_.push_back(store.count(d));
        std::vector<Column> columns;
        if (d > 0) {
            columns.reserve(store.count(d));
            for (SimplexIndex i = 0; i < store.count(d); ++i) {
                columns.push_back(boundary_column(store, d, i, buffer));
            }
        }
        chains.boundaries_.push_back(std::move(columns));
    }
    return chains;
}

std::size_t ChainComplexZ2::rank(int k) const {
    if (k < 1 || k > dim()) {
        return 0;
    }
    std::unordered_map<SimplexIndex, std::size_t> pivot_owner;
    std::vector<Column> reduced = boundary(k);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < reduced.size(); ++c) {
        auto& column = reduced[c];
        while (!column.empty()) {
            const auto it = pivot_owner.find(column.back());
            if (it == pivot_owner.end()) {
                pivot_owner.emplace(column.back(), c);
                ++rank;
                break;
            }
            symmetric_difference_into(column, reduced[it->second]);
        }
    }
    return rank;
}

bool ChainComplexZ2::boundary_squares_to_zero() const {
    for (int k = 2; k <= dim(); ++k) {
        const auto& lower = boundary(k - 1);
        for (const auto& column : boundary(k)) {
            std::vector<SimplexIndex> sum;
            for (SimplexIndex face : column) {
                symmetric_difference_into(sum, lower[face]);
            }
            if (!sum.empty()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> betti_z2(const ChainComplexZ2& chains, int up_to) {
    std::vector<std::size_t> betti;
    for (int k = 0; k <= up_to; ++k) {
        betti.push_back(chains.cells(k) - chains.rank(k) - chains.rank(k + 1));
    }
    return betti;
}

std::vector<std::size_t> betti_z2(const SimplicialComplexView& k, int up_to) {
    return betti_z2(ChainComplexZ2::from(k), up_to);
}

std::vector<std::size_t> betti_z2(const DirectedFlagComplex& k, int up_to) {
    return betti_z2(ChainComplexZ2::from(k), up_to);
}

long long euler_characteristic(const std::vector<std::size_t>& counts) {
    long long chi = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
    }
    return chi;
}

}  // namespace dqa
