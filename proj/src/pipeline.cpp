#include "ksforge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "ksforge/catalog.hpp"
#include "ksforge/iso.hpp"
#include "ksforge/states.hpp"
#include "ksforge/subsets.hpp"

namespace ksforge::pipeline {

std::uint64_t ClassificationTable::cell(int vertices, int edges) const {
    auto it = counts.find({vertices, edges});
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t ClassificationTable::row_total(int vertices) const {
    std::uint64_t t = 0;
    for (const auto& [ve, n] : counts) {
        if (ve.first == vertices) t += n;
    }
    return t;
}

std::uint64_t ClassificationTable::column_total(int edges) const {
    std::uint64_t t = 0;
    for (const auto& [ve, n] : counts) {
        if (ve.second == edges) t += n;
    }
    return t;
}

std::uint64_t ClassificationTable::grand_total() const {
    std::uint64_t t = 0;
    for (const auto& [ve, n] : counts) t += n;
    return t;
}

namespace {

/// Bitmask kernel for the subset sweep over one parent diagram with at
/// most 32 edges and 32 vertices. The 0-1 state existence check is an
/// exact-cover search over edges: pick an uncovered edge, try each of its
/// still-assignable vertices as the edge's 1-vertex, forbid the vertices
/// of every newly covered edge.
class SubsetScanner {
public:
    explicit SubsetScanner(const MmpDiagram& parent) : parent_(parent) {
        m_ = parent.edge_count();
        n_ = parent.vertex_count();
        if (m_ > 32 || n_ > 32) {
            throw MmpError("subset scan supports at most 32 edges/vertices");
        }
        edge_verts_.assign(m_, 0);
        edge_touch_.assign(m_, 0);
        vertex_edges_.assign(n_, 0);
        for (std::size_t e = 0; e < m_; ++e) {
            for (int v : parent.edges()[e].vertices()) {
                int p = parent.vertex_position(v);
                edge_verts_[e] |= 1u << p;
                vertex_edges_[p] |= 1u << e;
            }
        }
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = i + 1; j < m_; ++j) {
                if (edge_verts_[i] & edge_verts_[j]) {
                    edge_touch_[i] |= 1u << j;
                    edge_touch_[j] |= 1u << i;
                }
            }
        }
    }

    std::size_t edge_count() const { return m_; }

    /// True when some kept edge shares no vertex with another kept edge.
    bool has_isolated_edge(std::uint32_t mask) const {
        std::uint32_t rest = mask;
        while (rest) {
            std::uint32_t bit = rest & -rest;
            unsigned i = std::countr_zero(bit);
            if ((edge_touch_[i] & mask) == 0) return true;
            rest ^= bit;
        }
        return false;
    }

    /// 0-1 state existence for the sub-diagram selected by mask.
    bool has_state(std::uint32_t mask) const {
        return cover(mask, 0, 0);
    }

    std::pair<int, int> subset_counts(std::uint32_t mask) const {
        std::uint32_t verts = 0;
        std::uint32_t rest = mask;
        while (rest) {
            std::uint32_t bit = rest & -rest;
            verts |= edge_verts_[std::countr_zero(bit)];
            rest ^= bit;
        }
        return {std::popcount(verts), std::popcount(mask)};
    }

private:
    bool cover(std::uint32_t mask, std::uint32_t covered,
               std::uint32_t forbidden) const {
        if (covered == mask) return true;
        // uncovered edge with the fewest assignable vertices
        std::uint32_t rest = mask & ~covered;
        unsigned best_edge = 0;
        std::uint32_t best_allowed = 0;
        int best_count = 5;
        while (rest) {
            std::uint32_t bit = rest & -rest;
            unsigned e = std::countr_zero(bit);
            std::uint32_t allowed = edge_verts_[e] & ~forbidden;
            int count = std::popcount(allowed);
            if (count == 0) return false;
            if (count < best_count) {
                best_count = count;
                best_edge = e;
                best_allowed = allowed;
                if (count == 1) break;
            }
            rest ^= bit;
        }
        (void)best_edge;
        while (best_allowed) {
            std::uint32_t vbit = best_allowed & -best_allowed;
            best_allowed ^= vbit;
            unsigned v = std::countr_zero(vbit);
            std::uint32_t newly = vertex_edges_[v] & mask & ~covered;
            std::uint32_t nforbidden = forbidden;
            std::uint32_t rest2 = newly;
            while (rest2) {
                std::uint32_t ebit = rest2 & -rest2;
                nforbidden |= edge_verts_[std::countr_zero(ebit)];
                rest2 ^= ebit;
            }
            if (cover(mask, covered | newly, nforbidden)) return true;
        }
        return false;
    }

    const MmpDiagram& parent_;
    std::size_t m_ = 0, n_ = 0;
    std::vector<std::uint32_t> edge_verts_;
    std::vector<std::uint32_t> edge_touch_;
    std::vector<std::uint32_t> vertex_edges_;
};

struct ClassEntry {
    std::uint32_t min_mask;
    int vertices;
    int edges;
};

struct WorkerResult {
    std::unordered_map<std::string, ClassEntry> classes;
    std::uint64_t scanned = 0;
    std::uint64_t suppressed = 0;
    std::uint64_t ks = 0;
    std::uint64_t below_range = 0;
};

}  // namespace

ClassifyResult classify_subsets(const MmpDiagram& parent,
                                const ClassifyOptions& options) {
    SubsetScanner scanner(parent);
    std::size_t m = scanner.edge_count();
    std::uint64_t total = (std::uint64_t{1} << m) - 1;

    int jobs = std::max(1, options.jobs);
    const std::uint64_t chunk = std::min<std::uint64_t>(total, 1u << 16);
    std::atomic<std::uint64_t> next_start{1};
    std::atomic<std::uint64_t> done{0};
    std::mutex merge_mutex;
    WorkerResult merged;

    auto worker = [&] {
        WorkerResult local;
        while (true) {
            std::uint64_t start = next_start.fetch_add(chunk);
            if (start > total) break;
            std::uint64_t end = std::min(total, start + chunk - 1);
            for (std::uint64_t mask64 = start; mask64 <= end; ++mask64) {
                auto mask = static_cast<std::uint32_t>(mask64);
                ++local.scanned;
                if (scanner.has_isolated_edge(mask)) {
                    ++local.suppressed;
                    continue;
                }
                if (scanner.has_state(mask)) continue;
                ++local.ks;
                auto [nv, ne] = scanner.subset_counts(mask);
                if (nv < options.min_vertices || ne < options.min_edges) {
                    ++local.below_range;
                    continue;
                }
                MmpDiagram sub = subset_by_mask(parent, mask);
                std::string key = canonical_form(sub).key;
                auto [it, fresh] =
                    local.classes.try_emplace(std::move(key),
                                              ClassEntry{mask, nv, ne});
                if (!fresh && mask < it->second.min_mask) {
                    it->second.min_mask = mask;
                }
            }
            done.fetch_add(end - start + 1);
            if (options.progress) options.progress(done.load(), total);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        merged.scanned += local.scanned;
        merged.suppressed += local.suppressed;
        merged.ks += local.ks;
        merged.below_range += local.below_range;
        for (auto& [key, entry] : local.classes) {
            auto [it, fresh] = merged.classes.try_emplace(key, entry);
            if (!fresh && entry.min_mask < it->second.min_mask) {
                it->second = entry;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    ClassifyResult result;
    result.masks_scanned = merged.scanned;
    result.suppressed = merged.suppressed;
    result.ks_subsets = merged.ks;
    result.below_range_ks = merged.below_range;

    std::vector<std::pair<std::string, ClassEntry>> ordered(
        merged.classes.begin(), merged.classes.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        auto ka = std::make_tuple(a.second.vertices, a.second.edges, a.first);
        auto kb = std::make_tuple(b.second.vertices, b.second.edges, b.first);
        return ka < kb;
    });
    for (auto& [key, entry] : ordered) {
        result.table.counts[{entry.vertices, entry.edges}] += 1;
        result.representatives.push_back(
            subset_by_mask(parent, entry.min_mask));
        result.keys.push_back(key);
    }
    return result;
}

ClassifyResult reproduce_table1(const ClassifyOptions& options) {
    return classify_subsets(catalog::peres_24_24(), options);
}

std::vector<CriticalityReport> find_critical(
    const std::vector<MmpDiagram>& reps) {
    std::vector<CriticalityReport> reports;
    std::unordered_map<std::string, bool> ks_memo;
    auto memo_is_ks = [&](const MmpDiagram& d, const std::string& key) {
        auto it = ks_memo.find(key);
        if (it != ks_memo.end()) return it->second;
        bool v = is_ks(d);
        ks_memo.emplace(key, v);
        return v;
    };
    for (const auto& rep : reps) {
        CriticalityReport report;
        report.key = canonical_form(rep).key;
        report.is_critical = true;
        for (std::size_t e = 0; e < rep.edge_count(); ++e) {
            MmpDiagram child = rep.delete_edge(e);
            if (child.empty()) continue;
            std::string child_key = canonical_form(child).key;
            if (memo_is_ks(child, child_key)) {
                report.is_critical = false;
                report.witness_key = child_key;
                break;
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<std::pair<std::string, bool>> containment_report(
    const MmpDiagram& d) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& name : catalog::critical_names()) {
        const auto& critical = catalog::get(name);
        out.emplace_back(name, is_subgraph(critical.diagram, d).has_value());
    }
    return out;
}

int max_edge_loop(const MmpDiagram& d) {
    std::size_t m = d.edge_count();
    if (m > 64) throw MmpError("max_edge_loop supports at most 64 edges");
    std::vector<std::uint64_t> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (d.edges()[i].intersection_size(d.edges()[j]) > 0) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    }
    int best = 0;
    // grow induced paths from each start s using only nodes > s; a
    // candidate adjacent to the start closes a loop, anything adjacent to
    // an interior node would be a chord and is discarded
    std::vector<int> path;
    auto dfs = [&](auto&& self, int s, int tail, std::uint64_t path_mask,
                   int len) -> void {
        std::uint64_t interior =
            path_mask & ~(std::uint64_t{1} << tail) & ~(std::uint64_t{1} << s);
        std::uint64_t cand = adj[tail] & ~path_mask;
        cand &= ~((std::uint64_t{1} << (s + 1)) - 1);  // nodes > s only
        while (cand) {
            std::uint64_t bit = cand & -cand;
            cand ^= bit;
            int w = std::countr_zero(bit);
            if (adj[w] & interior) continue;
            if (adj[w] >> s & 1) {
                if (len + 1 >= 3) best = std::max(best, len + 1);
            } else {
                self(self, s, w, path_mask | bit, len + 1);
            }
        }
    };
    for (std::size_t s = 0; s < m; ++s) {
        dfs(dfs, static_cast<int>(s), static_cast<int>(s),
            std::uint64_t{1} << s, 1);
    }
    return best;
}

std::string table_tsv(const ClassificationTable& table, int min_vertices,
                      int max_vertices, int min_edges, int max_edges) {
    std::string out = "vertices\\edges";
    for (int e = min_edges; e <= max_edges; ++e) {
        out += '\t' + std::to_string(e);
    }
    out += "\ttotal\n";
    for (int v = min_vertices; v <= max_vertices; ++v) {
        out += std::to_string(v);
        for (int e = min_edges; e <= max_edges; ++e) {
            std::uint64_t c = table.cell(v, e);
            out += '\t';
            if (c) out += std::to_string(c);
        }
        out += '\t' + std::to_string(table.row_total(v)) + '\n';
    }
    out += "total";
    for (int e = min_edges; e <= max_edges; ++e) {
        out += '\t' + std::to_string(table.column_total(e));
    }
    out += '\t' + std::to_string(table.grand_total()) + '\n';
    return out;
}

}  // namespace ksforge::pipeline
