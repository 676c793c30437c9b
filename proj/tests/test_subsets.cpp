#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ksforge/catalog.hpp"
#include "ksforge/states.hpp"
#include "ksforge/subsets.hpp"
#include "test_util.hpp"

using namespace ksforge;
using namespace ksforge::testutil;

TEST_CASE("suppression keeps connected subsets only") {
    MmpDiagram d = MmpDiagram::parse("1234,4567,789A.");
    std::vector<std::string> got;
    for (const auto& s : edge_subsets(d, true)) got.push_back(s.serialize());
    std::vector<std::string> want = {"1234,4567.", "4567,789A.",
                                     "1234,4567,789A."};
    CHECK(got == want);

    CHECK(edge_subsets(d, false).size() == 7);
}

TEST_CASE("masks ascend and single-edge subsets are suppressed") {
    MmpDiagram d = MmpDiagram::parse("1234,4567,789A.");
    std::uint64_t last = 0;
    for_each_edge_subset(d, true, [&](const MmpDiagram&, std::uint64_t mask) {
        CHECK(mask > last);
        CHECK(std::popcount(mask) >= 2);
        last = mask;
        return true;
    });
    // early stop works
    int seen = 0;
    for_each_edge_subset(d, false, [&](const MmpDiagram&, std::uint64_t) {
        return ++seen < 2;
    });
    CHECK(seen == 2);
}

TEST_CASE("unsuppressed count is 2^n - 1") {
    std::mt19937_64 rng(3);
    for (int n : {1, 2, 3, 5, 8, 12}) {
        // a chain of n tetrads glued on one vertex stays valid
        std::vector<std::vector<int>> edges;
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (edges.empty()) {
                edges.push_back({next, next + 1, next + 2, next + 3});
                next += 4;
            } else {
                edges.push_back({edges.back()[3], next, next + 1, next + 2});
                next += 3;
            }
        }
        MmpDiagram d = MmpDiagram::from_edges(edges, 4);
        std::uint64_t count = 0;
        for_each_edge_subset(d, false, [&](const MmpDiagram&, std::uint64_t) {
            ++count;
            return true;
        });
        CHECK(count == (std::uint64_t{1} << n) - 1);
    }
    (void)rng;
}

TEST_CASE("every subset is a subgraph of its parent") {
    MmpDiagram d = MmpDiagram::parse("1234,4567,789A,ABC1.");
    for (const auto& s : edge_subsets(d, true)) {
        CHECK(is_subgraph(s, d));
        for (int v : s.vertices()) CHECK(s.degree(v) >= 1);
    }
}

TEST_CASE("dedup keeps one representative per class") {
    std::vector<MmpDiagram> in = {MmpDiagram::parse("1234."),
                                  MmpDiagram::parse("ABCD.")};
    CHECK(dedup_isomorphs(in).size() == 1);
    CHECK(dedup_isomorphs(in)[0].serialize() == "1234.");
}

TEST_CASE("dedup key set is input-order independent") {
    std::mt19937_64 rng(17);
    std::vector<MmpDiagram> pool;
    for (int i = 0; i < 8; ++i) pool.push_back(random_diagram(rng, 10, 3));
    for (int i = 0; i < 8; ++i) {
        pool.push_back(random_relabel(rng, pool[static_cast<size_t>(i)]));
    }
    auto key_set = [](const std::vector<MmpDiagram>& in) {
        IsomorphDedup d;
        for (const auto& x : in) d.insert(x);
        return d.keys();
    };
    std::set<std::string> base = key_set(pool);
    for (int round = 0; round < 4; ++round) {
        std::shuffle(pool.begin(), pool.end(), rng);
        CHECK(key_set(pool) == base);
    }
}

TEST_CASE("an 18-vertex 9-edge KS member sits inside the 24-24 subsets") {
    const MmpDiagram& peres = catalog::peres_24_24();
    auto embedding = is_subgraph(catalog::get("18-9").diagram, peres);
    REQUIRE(embedding);
    std::uint64_t mask = 0;
    for (int e : embedding->ref_edge_of) mask |= std::uint64_t{1} << e;
    MmpDiagram sub = subset_by_mask(peres, mask);
    CHECK(sub.vertex_count() == 18);
    CHECK(sub.edge_count() == 9);
    CHECK(is_ks(sub));
    // connected, so the suppressed enumeration would yield it
    for (std::size_t i = 0; i < sub.edge_count(); ++i) {
        bool touches = false;
        for (std::size_t j = 0; j < sub.edge_count(); ++j) {
            if (i != j &&
                sub.edges()[i].intersection_size(sub.edges()[j]) > 0) {
                touches = true;
            }
        }
        CHECK(touches);
    }
}
