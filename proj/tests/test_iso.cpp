#include <doctest.h>

#include <random>

#include "ksforge/catalog.hpp"
#include "ksforge/iso.hpp"
#include "test_util.hpp"

using namespace ksforge;
using namespace ksforge::testutil;

TEST_CASE("canonical form ignores labels and edge order") {
    CHECK(canonical_form(MmpDiagram::parse("1234.")) ==
          canonical_form(MmpDiagram::parse("ABCD.")));

    MmpDiagram hexagon = MmpDiagram::parse(kHexagonText);
    MmpDiagram reversed = MmpDiagram::parse("GHI1,DEFG,ABCD,789A,4567,1234.");
    CHECK(canonical_form(hexagon) == canonical_form(reversed));

    CHECK(canonical_form(MmpDiagram()).key == ".");
    // the key itself parses back to an isomorphic diagram
    MmpDiagram parsed = MmpDiagram::parse(canonical_form(hexagon).key);
    CHECK(is_isomorphic(parsed, hexagon));
}

TEST_CASE("canonical form is relabeling-invariant on catalog sets") {
    std::mt19937_64 rng(11);
    for (const char* name : {"hexagon", "20-10", "22-11", "23-14c", "24-15"}) {
        const MmpDiagram& d = catalog::get(name).diagram;
        CanonicalForm base = canonical_form(d);
        for (int i = 0; i < 5; ++i) {
            CHECK(canonical_form(random_relabel(rng, d)) == base);
        }
    }
}

TEST_CASE("is_isomorphic basics") {
    const MmpDiagram& d2010 = catalog::get("20-10").diagram;
    std::mt19937_64 rng(5);
    CHECK(is_isomorphic(d2010, random_relabel(rng, d2010)));
    CHECK(!is_isomorphic(catalog::get("18-9").diagram, d2010));
    CHECK(!is_isomorphic(catalog::get("20-11a").diagram,
                         catalog::get("20-11b").diagram));
    CHECK(!is_isomorphic(catalog::get("22-13a").diagram,
                         catalog::get("22-13b").diagram));
}

TEST_CASE("iso matches factorial oracle and canonical keys") {
    std::mt19937_64 rng(42);
    int positives = 0;
    for (int trial = 0; trial < 200; ++trial) {
        MmpDiagram a = random_diagram(rng, 8, 2);
        MmpDiagram b = (trial % 2 == 0) ? random_relabel(rng, a)
                                        : random_diagram(rng, 8, 2);
        bool expected = brute_isomorphic(a, b);
        CHECK(is_isomorphic(a, b) == expected);
        CHECK((canonical_form(a) == canonical_form(b)) == expected);
        positives += expected;
    }
    CHECK(positives >= 100);  // the relabeled half must all match
}

TEST_CASE("subgraph witnesses") {
    const MmpDiagram& peres = catalog::peres_24_24();
    const MmpDiagram& hexagon = catalog::get("hexagon").diagram;
    const MmpDiagram& d2010 = catalog::get("20-10").diagram;
    const MmpDiagram& d2211 = catalog::get("22-11").diagram;
    const MmpDiagram& d189 = catalog::get("18-9").diagram;

    auto m = is_subgraph(hexagon, peres);
    REQUIRE(m);
    CHECK(verify_edge_mapping(hexagon, peres, *m));

    auto m2 = is_subgraph(hexagon, d2010);
    REQUIRE(m2);
    CHECK(verify_edge_mapping(hexagon, d2010, *m2));

    CHECK(is_subgraph(d189, d2010));
    CHECK(is_subgraph(d2010, d2211));
    CHECK(!is_subgraph(d189, catalog::get("24-15").diagram));

    // m > n fails fast
    CHECK(!is_subgraph(d2010, hexagon));

    // identity on self
    auto self = is_subgraph(d2010, d2010);
    REQUIRE(self);
    for (std::size_t i = 0; i < d2010.edge_count(); ++i) {
        CHECK(self->ref_edge_of[i] == static_cast<int>(i));
    }

    // witnesses compose: hexagon <= 20-10 <= 22-11 implies hexagon <= 22-11
    CHECK(is_subgraph(hexagon, d2211));

    // vacuous test diagram is contained anywhere
    CHECK(is_subgraph(MmpDiagram(), hexagon));
}

TEST_CASE("replay check rejects bogus mappings") {
    const MmpDiagram& hexagon = catalog::get("hexagon").diagram;
    const MmpDiagram& peres = catalog::peres_24_24();
    auto m = is_subgraph(hexagon, peres);
    REQUIRE(m);
    CHECK(verify_edge_mapping(hexagon, peres, *m));
    EdgeMapping bogus{{0, 0, 1, 2, 3, 4}};
    CHECK(!verify_edge_mapping(hexagon, peres, bogus));
    EdgeMapping short_map{{0, 1}};
    CHECK(!verify_edge_mapping(hexagon, peres, short_map));
}
