#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksforge/mmp.hpp"

namespace ksforge {

/// A dispersion-free 0-1 valuation of a diagram's vertices.
/// Admissible iff every edge contains exactly one vertex valued 1.
struct StateAssignment {
    /// (vertex id, value) sorted by vertex id; total on the diagram.
    std::vector<std::pair<int, bool>> values;

    bool value_of(int vertex) const;

    /// "1=1 2=0 ..." using vertex symbols.
    std::string str() const;
};

/// Checks the admissibility predicate directly (independent of the search).
bool is_admissible(const MmpDiagram& d, const StateAssignment& s);

/// Finds an admissible 0-1 state, or nothing when none exists.
/// Deterministic: vertices are processed by descending edge-degree
/// (ties by vertex id), value 1 tried before 0, so the witness is
/// reproducible.
std::optional<StateAssignment> find_01_state(const MmpDiagram& d);

/// Exact number of admissible 0-1 states.
std::uint64_t count_01_states(const MmpDiagram& d);

/// True iff the diagram admits no 0-1 state (the KS property for
/// realizable diagrams).
bool is_ks(const MmpDiagram& d);

}  // namespace ksforge
