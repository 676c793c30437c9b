#include "ksforge/mmp.hpp"

#include <algorithm>
#include <cctype>

namespace ksforge {

const char kHexagonText[] = "1234,4567,789A,ABCD,DEFG,GHI1.";

int vertex_index(char symbol) {
    if (symbol >= '1' && symbol <= '9') return symbol - '1';
    if (symbol >= 'A' && symbol <= 'Z') return 9 + (symbol - 'A');
    if (symbol >= 'a' && symbol <= 'z') return 35 + (symbol - 'a');
    throw MmpError(std::string("invalid vertex character '") + symbol + "'");
}

char vertex_symbol(int index) {
    if (index < 0 || index >= kAlphabetSize) {
        throw MmpError("vertex index " + std::to_string(index) +
                       " outside the 61-symbol alphabet");
    }
    if (index < 9) return static_cast<char>('1' + index);
    if (index < 35) return static_cast<char>('A' + index - 9);
    return static_cast<char>('a' + index - 35);
}

Edge::Edge(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw MmpError("MMP-2: edge has fewer than 3 vertices");
    }
    sorted_ = vertices_;
    std::sort(sorted_.begin(), sorted_.end());
    if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
        throw MmpError("repeated vertex within one edge");
    }
}

bool Edge::contains(int v) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), v);
}

std::size_t Edge::intersection_size(const Edge& o) const {
    std::size_t n = 0;
    auto i = sorted_.begin();
    auto j = o.sorted_.begin();
    while (i != sorted_.end() && j != o.sorted_.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

MmpDiagram MmpDiagram::from_edges(std::vector<Edge> edges, int dim) {
    if (dim != 3 && dim != 4) {
        throw MmpError("dim mode must be 3 or 4");
    }
    MmpDiagram d;
    d.dim_ = dim;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].size() != static_cast<std::size_t>(dim)) {
            throw MmpError("edge " + std::to_string(i) + " has " +
                           std::to_string(edges[i].size()) + " vertices; " +
                           std::to_string(dim) + "-dim mode requires " +
                           std::to_string(dim));
        }
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t shared = edges[i].intersection_size(edges[j]);
            if (shared == static_cast<std::size_t>(dim)) {
                throw MmpError("duplicate edge at index " + std::to_string(i));
            }
            // MMP-3 for uniform dim-edges: sharing dim-1 vertices would
            // require the pair to span dim+1 vertices.
            if (shared > static_cast<std::size_t>(dim) - 2) {
                throw MmpError("MMP-3: edges " + std::to_string(j) + " and " +
                               std::to_string(i) + " share " +
                               std::to_string(shared) + " vertices");
            }
        }
    }
    d.edges_ = std::move(edges);
    d.index_vertices();
    return d;
}

MmpDiagram MmpDiagram::from_edges(const std::vector<std::vector<int>>& edges,
                                  int dim) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& e : edges) es.emplace_back(e);
    return from_edges(std::move(es), dim);
}

void MmpDiagram::index_vertices() {
    vertices_.clear();
    for (const auto& e : edges_) {
        vertices_.insert(vertices_.end(), e.vertices().begin(),
                         e.vertices().end());
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    incidence_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (int v : edges_[i].vertices()) {
            incidence_[vertex_position(v)].push_back(static_cast<int>(i));
        }
    }
}

bool MmpDiagram::has_vertex(int v) const { return vertex_position(v) >= 0; }

int MmpDiagram::vertex_position(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

int MmpDiagram::degree(int v) const {
    int p = vertex_position(v);
    return p < 0 ? 0 : static_cast<int>(incidence_[p].size());
}

const std::vector<int>& MmpDiagram::edges_of(int v) const {
    int p = vertex_position(v);
    if (p < 0) throw MmpError("vertex not in diagram");
    return incidence_[p];
}

MmpDiagram MmpDiagram::parse(const std::string& text, int dim) {
    std::size_t i = 0;
    std::size_t end = text.size();
    while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i == end) throw MmpError("syntax error: empty input");

    std::vector<Edge> edges;
    std::vector<int> current;
    bool terminated = false;
    for (; i < end; ++i) {
        char c = text[i];
        if (c == '.') {
            if (!current.empty()) {
                edges.emplace_back(std::move(current));
                current.clear();
            } else if (!edges.empty()) {
                throw MmpError("syntax error: empty edge before '.'");
            }
            terminated = true;
            ++i;
            break;
        }
        if (c == ',') {
            if (current.empty()) {
                throw MmpError("syntax error: empty edge");
            }
            edges.emplace_back(std::move(current));
            current.clear();
            continue;
        }
        current.push_back(vertex_index(c));
    }
    if (!terminated) throw MmpError("syntax error: missing terminating '.'");
    for (; i < end; ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            throw MmpError("syntax error: trailing characters after '.'");
        }
    }
    return from_edges(std::move(edges), dim);
}

std::string MmpDiagram::serialize() const {
    std::string out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) out += ',';
        for (int v : edges_[i].vertices()) out += vertex_symbol(v);
    }
    out += '.';
    return out;
}

MmpDiagram MmpDiagram::delete_edge(std::size_t index) const {
    if (index >= edges_.size()) {
        throw MmpError("delete_edge: index " + std::to_string(index) +
                       " out of range");
    }
    std::vector<Edge> kept;
    kept.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i != index) kept.push_back(edges_[i]);
    }
    return from_edges(std::move(kept), dim_);
}

bool MmpDiagram::operator==(const MmpDiagram& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!edges_[i].same_set(o.edges_[i])) return false;
    }
    return true;
}

MmpDiagram with_hexagon(const MmpDiagram& fragment) {
    MmpDiagram hexagon = MmpDiagram::parse(kHexagonText);
    std::vector<Edge> edges = hexagon.edges();
    for (const auto& e : fragment.edges()) edges.push_back(e);
    return MmpDiagram::from_edges(std::move(edges), 4);
}

MmpDiagram with_hexagon(const std::string& fragment_text) {
    return with_hexagon(MmpDiagram::parse(fragment_text));
}

}  // namespace ksforge
