#include "dqa/simplex_store.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dqa {

void sort_unique_tuples(std::vector<Vertex>& flat, std::size_t width) {
    if (width == 0 || flat.size() % width != 0) {
        throw std::invalid_argument("tuple array length is not a multiple of the width");
    }
    const std::size_t n = flat.size() / width;
    auto tuple = [&](std::size_t i) { return std::span<const Vertex>(flat.data() + i * width, width); };
    auto less = [&](std::size_t a, std::size_t b) {
        const auto ta = tuple(a);
        const auto tb = tuple(b);
        return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
    };
    bool sorted = true;
    for (std::size_t i = 1; i < n && sorted; ++i) {
        sorted = less(i - 1, i);
    }
    if (sorted) {
        return;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), less);
    std::vector<Vertex> result;
    result.reserve(flat.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto t = tuple(order[k]);
        if (k > 0 && std::equal(t.begin(), t.end(), result.end() - static_cast<std::ptrdiff_t>(width))) {
            continue;
        }
        result.insert(result.end(), t.begin(), t.end());
    }
    flat = std::move(result);
}

SimplexStore::SimplexStore(std::vector<std::vector<Vertex>> levels) : levels_(std::move(levels)) {
    for (std::size_t d = 0; d < levels_.size(); ++d) {
        sort_unique_tuples(levels_[d], d + 1);
    }
    while (!levels_.empty() && levels_.back().empty()) {
        levels_.pop_back();
    }
}

std::vector<std::size_t> SimplexStore::counts() const {
    std::vector<std::size_t> result;
    for (int d = 0; d <= dim(); ++d) {
        result.push_back(count(d));
    }
    return result;
}

std::size_t SimplexStore::total() const {
    std::size_t sum = 0;
    for (int d = 0; d <= dim(); ++d) {
        sum += count(d);
    }
    return sum;
}

std::optional<SimplexIndex> SimplexStore::find(std::span<const Vertex> tuple) const {
    const int d = static_cast<int>(tuple.size()) - 1;
    if (d < 0 || d > dim()) {
        return std::nullopt;
    }
    std::size_t lo = 0;
    std::size_t hi = count(d);
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto probe = at(d, static_cast<SimplexIndex>(mid));
        if (std::lexicographical_compare(probe.begin(), probe.end(), tuple.begin(), tuple.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < count(d)) {
        const auto probe = at(d, static_cast<SimplexIndex>(lo));
        if (std::equal(probe.begin(), probe.end(), tuple.begin(), tuple.end())) {
            return static_cast<SimplexIndex>(lo);
        }
    }
    return std::nullopt;
}

}  // namespace dqa
