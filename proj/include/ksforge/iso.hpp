#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksforge/mmp.hpp"

namespace ksforge {

/// Canonical key of a diagram: the lexicographically least serialization
/// over all vertex relabelings and edge orderings. Equal keys <=>
/// isomorphic diagrams.
struct CanonicalForm {
    std::string key;

    bool operator==(const CanonicalForm& o) const { return key == o.key; }
    bool operator!=(const CanonicalForm& o) const { return key != o.key; }
    bool operator<(const CanonicalForm& o) const { return key < o.key; }
};

/// Computes the canonical form by backtracking over vertex relabelings,
/// guided by iterative partition refinement on vertex/edge signatures.
CanonicalForm canonical_form(const MmpDiagram& d);

/// True iff some vertex bijection maps the edge set of a onto that of b.
bool is_isomorphic(const MmpDiagram& a, const MmpDiagram& b);

/// Witness of a subgraph relation: test edge i maps to reference edge
/// ref_edge_of[i].
struct EdgeMapping {
    std::vector<int> ref_edge_of;
};

/// Subgraph test: finds an injective edge mapping built one edge at a
/// time, each candidate required to present the same membership-index
/// signatures (sets of already-chosen edge indices per vertex, matched as
/// a multiset) as the next test edge. Returns the witness mapping, or
/// nothing when backtracking exhausts. Candidates are tried in reference
/// edge order, so witnesses are reproducible.
std::optional<EdgeMapping> is_subgraph(const MmpDiagram& test,
                                       const MmpDiagram& reference);

/// Replays a mapping's per-step membership signatures on both sides;
/// used to validate witnesses independently of the search.
bool verify_edge_mapping(const MmpDiagram& test, const MmpDiagram& reference,
                         const EdgeMapping& mapping);

}  // namespace ksforge
