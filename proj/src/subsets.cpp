#include "ksforge/subsets.hpp"

namespace ksforge {

MmpDiagram subset_by_mask(const MmpDiagram& d, std::uint64_t mask) {
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < d.edge_count(); ++i) {
        if (mask >> i & 1) kept.push_back(d.edges()[i]);
    }
    return MmpDiagram::from_edges(std::move(kept), d.dim());
}

void for_each_edge_subset(
    const MmpDiagram& d, bool suppress_isolated,
    const std::function<bool(const MmpDiagram&, std::uint64_t mask)>& fn) {
    std::size_t n = d.edge_count();
    if (n >= 63) throw MmpError("too many edges to enumerate subsets");
    // pairwise intersection bitmasks: touch[i] has bit j set when edges
    // i and j share a vertex
    std::vector<std::uint64_t> touch(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d.edges()[i].intersection_size(d.edges()[j]) > 0) {
                touch[i] |= std::uint64_t{1} << j;
                touch[j] |= std::uint64_t{1} << i;
            }
        }
    }
    std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        if (suppress_isolated) {
            bool isolated = false;
            std::uint64_t rest = mask;
            while (rest) {
                std::uint64_t bit = rest & (~rest + 1);
                std::size_t i = static_cast<std::size_t>(
                    __builtin_ctzll(bit));
                if ((touch[i] & mask) == 0) {
                    isolated = true;
                    break;
                }
                rest ^= bit;
            }
            if (isolated) continue;
        }
        if (!fn(subset_by_mask(d, mask), mask)) return;
    }
}

std::vector<MmpDiagram> edge_subsets(const MmpDiagram& d,
                                     bool suppress_isolated) {
    std::vector<MmpDiagram> out;
    for_each_edge_subset(d, suppress_isolated,
                         [&](const MmpDiagram& s, std::uint64_t) {
                             out.push_back(s);
                             return true;
                         });
    return out;
}

std::vector<MmpDiagram> dedup_isomorphs(const std::vector<MmpDiagram>& in) {
    IsomorphDedup dedup;
    std::vector<MmpDiagram> out;
    for (const auto& d : in) {
        if (dedup.insert(d)) out.push_back(d);
    }
    return out;
}

}  // namespace ksforge
