#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ksforge/iso.hpp"
#include "ksforge/mmp.hpp"

namespace ksforge {

/// Streams every nonempty edge-subset of d as a diagram, in ascending
/// bitmask order over edge indices (bit i = edge i kept). Vertices are
/// restricted to those on kept edges. With suppress_isolated, subsets
/// containing an edge that shares no vertex with another kept edge are
/// skipped; this removes all single-edge subsets. The callback returns
/// false to stop early.
void for_each_edge_subset(
    const MmpDiagram& d, bool suppress_isolated,
    const std::function<bool(const MmpDiagram&, std::uint64_t mask)>& fn);

/// Materialized variant for small inputs.
std::vector<MmpDiagram> edge_subsets(const MmpDiagram& d,
                                     bool suppress_isolated);

/// Builds the sub-diagram selected by an edge bitmask.
MmpDiagram subset_by_mask(const MmpDiagram& d, std::uint64_t mask);

/// Keeps the first-seen representative of each canonical-form class.
class IsomorphDedup {
public:
    /// True when the diagram's class is new (caller keeps it).
    bool insert(const MmpDiagram& d) { return insert_key(canonical_form(d)); }
    bool insert_key(const CanonicalForm& form) {
        return keys_.insert(form.key).second;
    }
    const std::set<std::string>& keys() const { return keys_; }

private:
    std::set<std::string> keys_;
};

/// First-seen representatives of each isomorphism class, in input order.
std::vector<MmpDiagram> dedup_isomorphs(const std::vector<MmpDiagram>& in);

}  // namespace ksforge
