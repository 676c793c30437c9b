#include <doctest.h>

#include <random>

#include "ksforge/mmp.hpp"
#include "ksforge/states.hpp"

using namespace ksforge;

namespace {

// Independent oracle: enumerate all 2^|V| assignments.
std::uint64_t brute_count(const MmpDiagram& d) {
    std::size_t n = d.vertex_count();
    REQUIRE(n <= 20);
    std::uint64_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool ok = true;
        for (const auto& e : d.edges()) {
            int ones = 0;
            for (int v : e.vertices()) {
                ones += bits >> d.vertex_position(v) & 1;
            }
            if (ones != 1) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("single edge counts") {
    MmpDiagram d = MmpDiagram::parse("1234.");
    CHECK(count_01_states(d) == 4);
    auto s = find_01_state(d);
    REQUIRE(s);
    CHECK(is_admissible(d, *s));
    CHECK(!is_ks(d));
}

TEST_CASE("two chained edges count 10") {
    MmpDiagram d = MmpDiagram::parse("1234,4567.");
    CHECK(count_01_states(d) == 10);
    CHECK(brute_count(d) == 10);
}

TEST_CASE("hexagon has states") {
    MmpDiagram hexagon = MmpDiagram::parse(kHexagonText);
    auto s = find_01_state(hexagon);
    REQUIRE(s);
    CHECK(is_admissible(hexagon, *s));
    CHECK(!is_ks(hexagon));
    CHECK(count_01_states(hexagon) == brute_count(hexagon));
}

TEST_CASE("witness is deterministic") {
    MmpDiagram d = MmpDiagram::parse("1234,4567,789A.");
    auto a = find_01_state(d);
    auto b = find_01_state(d);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->values == b->values);
    CHECK(a->str().size() > 0);
}

TEST_CASE("vacuous diagram") {
    MmpDiagram d;
    CHECK(count_01_states(d) == 1);
    CHECK(!is_ks(d));
}

TEST_CASE("count matches brute force on random chains") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        // random small diagram built by gluing tetrads along one vertex
        std::vector<std::vector<int>> edges;
        int next = 0;
        edges.push_back({next, next + 1, next + 2, next + 3});
        next += 4;
        int extra = static_cast<int>(rng() % 3);
        for (int i = 0; i < extra && next + 3 < 18; ++i) {
            const auto& prev = edges.back();
            int share = prev[rng() % 4];
            edges.push_back({share, next, next + 1, next + 2});
            next += 3;
        }
        MmpDiagram d = MmpDiagram::from_edges(edges, 4);
        CHECK(count_01_states(d) == brute_count(d));
        bool ks = is_ks(d);
        CHECK(ks == (count_01_states(d) == 0));
    }
}
