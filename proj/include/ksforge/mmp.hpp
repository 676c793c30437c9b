#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksforge {

class MmpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertex symbols of the text format, in order: 1-9, A-Z, a-z.
constexpr int kAlphabetSize = 61;

/// Alphabet index (0..60) of a vertex symbol. Throws MmpError on a
/// character outside the alphabet.
int vertex_index(char symbol);

/// Symbol for an alphabet index. Throws MmpError above 60; internal
/// vertex ids are unbounded but only the first 61 are serializable.
char vertex_symbol(int index);

/// One edge: at least 3 distinct vertices. Input order is preserved for
/// round-tripping; all semantic comparisons use the vertex set.
class Edge {
public:
    explicit Edge(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<int>& sorted_vertices() const { return sorted_; }
    std::size_t size() const { return vertices_.size(); }
    bool contains(int v) const;
    bool same_set(const Edge& o) const { return sorted_ == o.sorted_; }

    /// Number of shared vertices with another edge.
    std::size_t intersection_size(const Edge& o) const;

private:
    std::vector<int> vertices_;
    std::vector<int> sorted_;
};

/// An MMP diagram: an ordered list of edges over an implicit vertex set.
///
/// Construction enforces the diagram conditions:
///   1. every vertex lies on at least one edge (holds by derivation),
///   2. every edge has at least 3 vertices (exactly dim here),
///   3. two distinct edges share at most dim-2 vertices,
/// plus rejection of duplicate edges. Instances are immutable values.
class MmpDiagram {
public:
    /// The vacuous diagram (no vertices, no edges).
    MmpDiagram() = default;

    static MmpDiagram from_edges(std::vector<Edge> edges, int dim = 4);
    static MmpDiagram from_edges(const std::vector<std::vector<int>>& edges,
                                 int dim = 4);

    /// Parses "1234,4567." style text (whitespace around the payload is
    /// tolerated). Throws MmpError on syntax or validity violations.
    static MmpDiagram parse(const std::string& text, int dim = 4);

    /// Comma-separated edges in stored order, period-terminated.
    /// parse(serialize(d)) reproduces d exactly.
    std::string serialize() const;

    int dim() const { return dim_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Sorted list of all vertex ids appearing in edges.
    const std::vector<int>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    bool empty() const { return edges_.empty(); }

    bool has_vertex(int v) const;
    /// Number of edges containing v (0 when absent).
    int degree(int v) const;
    /// Indices of the edges containing v.
    const std::vector<int>& edges_of(int v) const;
    /// Position of v in vertices(), or -1.
    int vertex_position(int v) const;

    /// Removes the edge at the given index together with any vertices
    /// that lay only on that edge. Throws MmpError when out of range.
    MmpDiagram delete_edge(std::size_t index) const;

    /// Structural equality: same edge list (as vertex sets, in order).
    bool operator==(const MmpDiagram& o) const;
    bool operator!=(const MmpDiagram& o) const { return !(*this == o); }

private:
    void index_vertices();

    std::vector<Edge> edges_;
    std::vector<int> vertices_;
    std::vector<std::vector<int>> incidence_;  // parallel to vertices_
    int dim_ = 4;
};

/// The hexagon loop present in every classified set.
extern const char kHexagonText[];

/// Prepends the six hexagon edges to a fragment's edges.
MmpDiagram with_hexagon(const MmpDiagram& fragment);

/// Convenience: parse a fragment string and prepend the hexagon.
MmpDiagram with_hexagon(const std::string& fragment_text);

}  // namespace ksforge
