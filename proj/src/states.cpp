#include "ksforge/states.hpp"

#include <algorithm>
#include <numeric>

namespace ksforge {

bool StateAssignment::value_of(int vertex) const {
    auto it = std::lower_bound(values.begin(), values.end(),
                               std::make_pair(vertex, false));
    if (it == values.end() || it->first != vertex) {
        throw MmpError("vertex not present in state assignment");
    }
    return it->second;
}

std::string StateAssignment::str() const {
    std::string out;
    for (const auto& [v, val] : values) {
        if (!out.empty()) out += ' ';
        out += vertex_symbol(v);
        out += '=';
        out += val ? '1' : '0';
    }
    return out;
}

bool is_admissible(const MmpDiagram& d, const StateAssignment& s) {
    for (const auto& e : d.edges()) {
        int ones = 0;
        for (int v : e.vertices()) ones += s.value_of(v) ? 1 : 0;
        if (ones != 1) return false;
    }
    return true;
}

namespace {

// Backtracking search with constraint propagation. Assigning 1 to a vertex
// forces 0 on all co-edge vertices; an edge with all vertices 0 fails; an
// edge whose last unset vertex is reached with no 1 yet forces that vertex
// to 1. Propagation only makes forced inferences, so enumeration visits
// every admissible total assignment exactly once (counting stays exact).
class Search01 {
public:
    explicit Search01(const MmpDiagram& d) : d_(d) {
        n_ = d.vertex_count();
        m_ = d.edge_count();
        value_.assign(n_, kUnset);
        ones_.assign(m_, 0);
        unset_.assign(m_, 0);
        edge_members_.resize(m_);
        for (std::size_t e = 0; e < m_; ++e) {
            for (int v : d.edges()[e].vertices()) {
                edge_members_[e].push_back(d.vertex_position(v));
            }
            unset_[e] = static_cast<int>(edge_members_[e].size());
        }
        member_edges_.resize(n_);
        for (std::size_t p = 0; p < n_; ++p) {
            for (int e : d.edges_of(d.vertices()[p])) {
                member_edges_[p].push_back(e);
            }
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return member_edges_[a].size() > member_edges_[b].size();
        });
    }

    std::optional<StateAssignment> find() {
        counting_ = false;
        found_ = false;
        search(0);
        if (!found_) return std::nullopt;
        StateAssignment s;
        for (std::size_t p = 0; p < n_; ++p) {
            s.values.emplace_back(d_.vertices()[p], witness_[p] == 1);
        }
        return s;
    }

    std::uint64_t count() {
        counting_ = true;
        count_ = 0;
        search(0);
        return count_;
    }

private:
    static constexpr signed char kUnset = -1;

    bool assign(int p, signed char val, std::vector<int>& trail) {
        if (value_[p] != kUnset) return value_[p] == val;
        value_[p] = val;
        trail.push_back(p);
        // update every counter before reporting a conflict so that undo
        // stays a faithful reversal
        bool conflict = false;
        for (int e : member_edges_[p]) {
            --unset_[e];
            if (val == 1) {
                if (++ones_[e] > 1) conflict = true;
            } else if (ones_[e] == 0 && unset_[e] == 0) {
                conflict = true;
            }
        }
        if (conflict) return false;
        // propagate consequences edge by edge
        for (int e : member_edges_[p]) {
            if (val == 1) {
                for (int q : edge_members_[e]) {
                    if (value_[q] == kUnset && !assign(q, 0, trail)) return false;
                }
            } else {
                if (ones_[e] == 0 && unset_[e] == 1) {
                    for (int q : edge_members_[e]) {
                        if (value_[q] == kUnset) {
                            if (!assign(q, 1, trail)) return false;
                            break;
                        }
                    }
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            int p = trail.back();
            trail.pop_back();
            for (int e : member_edges_[p]) {
                ++unset_[e];
                if (value_[p] == 1) --ones_[e];
            }
            value_[p] = kUnset;
        }
    }

    // returns true to keep searching, false to stop (witness found)
    bool search(std::size_t oi) {
        while (oi < n_ && value_[order_[oi]] != kUnset) ++oi;
        if (oi == n_) {
            if (counting_) {
                ++count_;
                return true;
            }
            found_ = true;
            witness_.assign(value_.begin(), value_.end());
            return false;
        }
        int p = order_[oi];
        for (signed char val : {static_cast<signed char>(1),
                                static_cast<signed char>(0)}) {
            std::vector<int> trail;
            if (assign(p, val, trail)) {
                if (!search(oi + 1)) {
                    undo(trail, 0);
                    return false;
                }
            }
            undo(trail, 0);
        }
        return true;
    }

    const MmpDiagram& d_;
    std::size_t n_ = 0, m_ = 0;
    std::vector<signed char> value_;
    std::vector<signed char> witness_;
    std::vector<int> ones_, unset_;
    std::vector<std::vector<int>> edge_members_;   // vertex positions per edge
    std::vector<std::vector<int>> member_edges_;   // edge indices per vertex
    std::vector<int> order_;
    bool counting_ = false;
    bool found_ = false;
    std::uint64_t count_ = 0;
};

}  // namespace

std::optional<StateAssignment> find_01_state(const MmpDiagram& d) {
    return Search01(d).find();
}

std::uint64_t count_01_states(const MmpDiagram& d) {
    return Search01(d).count();
}

bool is_ks(const MmpDiagram& d) { return !find_01_state(d).has_value(); }

}  // namespace ksforge
