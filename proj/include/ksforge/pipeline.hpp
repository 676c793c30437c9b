#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ksforge/mmp.hpp"

namespace ksforge::pipeline {

/// Counts of isomorphism classes bucketed by (vertex count, edge count).
struct ClassificationTable {
    std::map<std::pair<int, int>, std::uint64_t> counts;

    std::uint64_t cell(int vertices, int edges) const;
    std::uint64_t row_total(int vertices) const;
    std::uint64_t column_total(int edges) const;
    std::uint64_t grand_total() const;
};

struct ClassifyOptions {
    int jobs = 1;
    int min_vertices = 18;
    int min_edges = 9;
    /// Called with (masks scanned, total masks) roughly once per chunk.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct ClassifyResult {
    ClassificationTable table;
    /// First-seen (minimal-bitmask) representative per class, sorted by
    /// (vertex count, edge count, canonical key).
    std::vector<MmpDiagram> representatives;
    std::vector<std::string> keys;  // canonical keys, parallel to the above

    std::uint64_t masks_scanned = 0;
    std::uint64_t suppressed = 0;
    std::uint64_t ks_subsets = 0;       // raw KS subsets before dedup
    std::uint64_t below_range_ks = 0;   // audit: KS subsets under the range
};

/// Sweeps every nonempty edge-subset of the parent (isolated-edge
/// suppression on), KS-checks all of them, and classifies the KS ones
/// with at least (min_vertices, min_edges) up to isomorphism. KS subsets
/// below the range are counted in below_range_ks but not tabulated.
/// Deterministic for any job count.
ClassifyResult classify_subsets(const MmpDiagram& parent,
                                const ClassifyOptions& options = {});

/// The headline classification: classify_subsets over the 24-24 set.
ClassifyResult reproduce_table1(const ClassifyOptions& options = {});

struct CriticalityReport {
    std::string key;          // canonical key of the examined set
    bool is_critical = false;
    std::string witness_key;  // canonical key of a proper KS subset
};

/// A KS set is critical iff no proper edge-deletion subset is KS; by
/// upward monotonicity of the KS property it suffices to test the
/// single-edge deletions. Reports are in input order.
std::vector<CriticalityReport> find_critical(
    const std::vector<MmpDiagram>& reps);

/// Subgraph containment of each of the six critical fixtures in d.
std::vector<std::pair<std::string, bool>> containment_report(
    const MmpDiagram& d);

/// Longest loop: a cyclic sequence of >= 3 distinct edges in which
/// consecutive edges share at least one vertex and non-consecutive edges
/// share none (an induced cycle of the edge-intersection graph).
/// Returns 0 when no loop exists.
int max_edge_loop(const MmpDiagram& d);

/// TSV rendering mirroring the classification table layout
/// (rows 18..24, columns 9..24, with totals).
std::string table_tsv(const ClassificationTable& table, int min_vertices = 18,
                      int max_vertices = 24, int min_edges = 9,
                      int max_edges = 24);

}  // namespace ksforge::pipeline
