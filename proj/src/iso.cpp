#include "ksforge/iso.hpp"

#include <algorithm>
#include <map>

namespace ksforge {

namespace {

// ---------------------------------------------------------------------
// Canonical form: individualization + refinement over vertex colors.
// ---------------------------------------------------------------------

class Canonizer {
public:
    explicit Canonizer(const MmpDiagram& d) : d_(d) {
        n_ = d.vertex_count();
        m_ = d.edge_count();
        edge_members_.resize(m_);
        for (std::size_t e = 0; e < m_; ++e) {
            for (int v : d.edges()[e].vertices()) {
                edge_members_[e].push_back(d.vertex_position(v));
            }
        }
        member_edges_.resize(n_);
        for (std::size_t p = 0; p < n_; ++p) {
            member_edges_[p] = d.edges_of(d.vertices()[p]);
        }
    }

    std::string run() {
        if (m_ == 0) return ".";
        std::vector<int> colors(n_, 0);
        refine(colors);
        best_.clear();
        search(colors);
        return best_;
    }

private:
    // Iterated refinement: a vertex's signature is its color plus the
    // multiset of its incident edges' member-color multisets. Colors are
    // renormalized to ranks each round, so they are relabeling-invariant.
    void refine(std::vector<int>& colors) const {
        while (true) {
            std::vector<std::vector<int>> edge_sig(m_);
            for (std::size_t e = 0; e < m_; ++e) {
                for (int p : edge_members_[e]) edge_sig[e].push_back(colors[p]);
                std::sort(edge_sig[e].begin(), edge_sig[e].end());
            }
            using Sig = std::pair<int, std::vector<std::vector<int>>>;
            std::vector<Sig> sigs(n_);
            for (std::size_t p = 0; p < n_; ++p) {
                std::vector<std::vector<int>> around;
                for (int e : member_edges_[p]) around.push_back(edge_sig[e]);
                std::sort(around.begin(), around.end());
                sigs[p] = {colors[p], std::move(around)};
            }
            std::map<Sig, int> rank;
            for (const auto& s : sigs) rank.emplace(s, 0);
            int next = 0;
            for (auto& [sig, r] : rank) r = next++;
            bool changed = false;
            for (std::size_t p = 0; p < n_; ++p) {
                int c = rank[sigs[p]];
                if (c != colors[p]) changed = true;
                colors[p] = c;
            }
            if (!changed) return;
        }
    }

    // First color class with two or more members, in color order.
    int target_cell(const std::vector<int>& colors) const {
        std::vector<int> count;
        for (int c : colors) {
            if (c >= static_cast<int>(count.size())) count.resize(c + 1, 0);
            ++count[c];
        }
        for (std::size_t c = 0; c < count.size(); ++c) {
            if (count[c] >= 2) return static_cast<int>(c);
        }
        return -1;
    }

    void search(const std::vector<int>& colors) {
        int cell = target_cell(colors);
        if (cell < 0) {
            emit(colors);
            return;
        }
        for (std::size_t p = 0; p < n_; ++p) {
            if (colors[p] != cell) continue;
            std::vector<int> next(n_);
            for (std::size_t q = 0; q < n_; ++q) next[q] = colors[q] * 2;
            next[p] -= 1;
            refine(next);
            search(next);
        }
    }

    void emit(const std::vector<int>& labels) {
        std::vector<std::vector<int>> edges(m_);
        for (std::size_t e = 0; e < m_; ++e) {
            for (int p : edge_members_[e]) edges[e].push_back(labels[p]);
            std::sort(edges[e].begin(), edges[e].end());
        }
        std::sort(edges.begin(), edges.end());
        std::string key = render(edges);
        if (best_.empty() || key < best_) best_ = std::move(key);
    }

    std::string render(const std::vector<std::vector<int>>& edges) const {
        std::string out;
        bool symbolic = n_ <= static_cast<std::size_t>(kAlphabetSize);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (e) out += ',';
            for (std::size_t i = 0; i < edges[e].size(); ++i) {
                if (symbolic) {
                    out += vertex_symbol(edges[e][i]);
                } else {
                    if (i) out += ' ';
                    out += std::to_string(edges[e][i]);
                }
            }
        }
        out += '.';
        return out;
    }

    const MmpDiagram& d_;
    std::size_t n_ = 0, m_ = 0;
    std::vector<std::vector<int>> edge_members_;
    std::vector<std::vector<int>> member_edges_;
    std::string best_;
};

// ---------------------------------------------------------------------
// Subgraph search.
// ---------------------------------------------------------------------

using VertexSig = std::vector<int>;           // chosen-edge indices containing v
using EdgeSig = std::vector<VertexSig>;       // per-vertex sigs, sorted

EdgeSig edge_signature(const Edge& edge,
                       const std::vector<const Edge*>& chosen) {
    EdgeSig sig;
    sig.reserve(edge.size());
    for (int v : edge.vertices()) {
        VertexSig s;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (chosen[i]->contains(v)) s.push_back(static_cast<int>(i));
        }
        sig.push_back(std::move(s));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

class SubgraphSearch {
public:
    SubgraphSearch(const MmpDiagram& test, const MmpDiagram& ref)
        : test_(test), ref_(ref) {}

    std::optional<EdgeMapping> run() {
        m_ = test_.edge_count();
        n_ = ref_.edge_count();
        if (m_ > n_) return std::nullopt;
        // test-side signatures are fixed by the test edge order
        std::vector<const Edge*> prefix;
        want_.reserve(m_);
        for (std::size_t k = 0; k < m_; ++k) {
            want_.push_back(edge_signature(test_.edges()[k], prefix));
            prefix.push_back(&test_.edges()[k]);
        }
        used_.assign(n_, false);
        chosen_.clear();
        chosen_ptrs_.clear();
        if (!dfs(0)) return std::nullopt;
        return EdgeMapping{chosen_};
    }

private:
    bool dfs(std::size_t k) {
        if (k == m_) return true;
        for (std::size_t x = 0; x < n_; ++x) {
            if (used_[x]) continue;
            if (edge_signature(ref_.edges()[x], chosen_ptrs_) != want_[k]) {
                continue;
            }
            used_[x] = true;
            chosen_.push_back(static_cast<int>(x));
            chosen_ptrs_.push_back(&ref_.edges()[x]);
            if (dfs(k + 1)) return true;
            chosen_ptrs_.pop_back();
            chosen_.pop_back();
            used_[x] = false;
        }
        return false;
    }

    const MmpDiagram& test_;
    const MmpDiagram& ref_;
    std::size_t m_ = 0, n_ = 0;
    std::vector<EdgeSig> want_;
    std::vector<bool> used_;
    std::vector<int> chosen_;
    std::vector<const Edge*> chosen_ptrs_;
};

}  // namespace

CanonicalForm canonical_form(const MmpDiagram& d) {
    return CanonicalForm{Canonizer(d).run()};
}

bool is_isomorphic(const MmpDiagram& a, const MmpDiagram& b) {
    if (a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count()) {
        return false;
    }
    auto degrees = [](const MmpDiagram& d) {
        std::vector<int> out;
        for (int v : d.vertices()) out.push_back(d.degree(v));
        std::sort(out.begin(), out.end());
        return out;
    };
    if (degrees(a) != degrees(b)) return false;
    // an edge bijection preserving membership signatures induces a vertex
    // bijection, so with equal counts a one-way subgraph witness is an
    // isomorphism witness
    return is_subgraph(a, b).has_value();
}

std::optional<EdgeMapping> is_subgraph(const MmpDiagram& test,
                                       const MmpDiagram& reference) {
    return SubgraphSearch(test, reference).run();
}

bool verify_edge_mapping(const MmpDiagram& test, const MmpDiagram& reference,
                         const EdgeMapping& mapping) {
    if (mapping.ref_edge_of.size() != test.edge_count()) return false;
    std::vector<bool> used(reference.edge_count(), false);
    std::vector<const Edge*> test_prefix, ref_prefix;
    for (std::size_t k = 0; k < test.edge_count(); ++k) {
        int x = mapping.ref_edge_of[k];
        if (x < 0 || x >= static_cast<int>(reference.edge_count()) || used[x]) {
            return false;
        }
        used[x] = true;
        if (edge_signature(test.edges()[k], test_prefix) !=
            edge_signature(reference.edges()[x], ref_prefix)) {
            return false;
        }
        test_prefix.push_back(&test.edges()[k]);
        ref_prefix.push_back(&reference.edges()[x]);
    }
    return true;
}

}  // namespace ksforge
