#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksforge/mmp.hpp"
#include "ksforge/vectors.hpp"

namespace ksforge::catalog {

/// A named diagram fixture, optionally with its ray realization.
struct NamedSet {
    std::string name;          // encodes vertexCount-edgeCount
    MmpDiagram diagram;
    std::optional<VectorAssignment> vectors;
    std::string provenance;
};

/// Fixture lookup. Throws MmpError for unknown names.
const NamedSet& get(const std::string& name);

/// All fixture names in their fixed registry order.
std::vector<std::string> list_names();

/// The 24-ray, 24-tetrad master system: 4 basis rays, 12 rays with two
/// nonzero entries, 8 rays (1,+-1,+-1,+-1); edges are all mutually
/// orthogonal 4-subsets, constructed by brute force and checked at load.
const MmpDiagram& peres_24_24();

/// The 22 rays of the 22-11 realization as a candidate pool
/// (named "table2-22-11").
const CandidatePool& table2_22_11_pool();

/// Names of the six critical fixtures, smallest first.
const std::vector<std::string>& critical_names();

}  // namespace ksforge::catalog
