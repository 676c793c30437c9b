#include <doctest.h>

#include <algorithm>

#include "ksforge/catalog.hpp"
#include "ksforge/iso.hpp"
#include "ksforge/states.hpp"

using namespace ksforge;

TEST_CASE("inventory") {
    auto names = catalog::list_names();
    CHECK(names.size() >= 30);
    for (const char* expect :
         {"hexagon", "18-9", "20-10", "20-11a", "20-11b", "22-11", "22-13a",
          "22-13b", "23-12", "23-14a", "23-14b", "23-14c", "23-14d", "23-15",
          "24-14", "24-14-b", "24-15", "24-15-4", "24-15-10", "24-16-5",
          "24-17-2", "24-20", "peres-24-24"}) {
        CHECK(std::find(names.begin(), names.end(), expect) != names.end());
    }
    CHECK_THROWS_AS(catalog::get("no-such-set"), MmpError);
}

TEST_CASE("published strings") {
    CHECK(catalog::get("20-10").diagram.serialize() ==
          "1234,4567,789A,ABCD,DEFG,GHI1,H68F,IJK5,1J9B,4KEC.");
    CHECK(catalog::get("24-15-4").diagram.serialize() ==
          "LMNO,HIJK,DEFG,9ABC,5678,1234,34FG,78EG,BCDG,24JK,68IK,ACHK,14NO,"
          "58MO,9CLO.");
    const auto& va189 = *catalog::get("18-9").vectors;
    CHECK(*va189.ray_of(vertex_index('1')) == Ray4::of_ints(1, 0, 0, 1));
}

TEST_CASE("name counts match diagrams") {
    for (const auto& name : catalog::list_names()) {
        const auto& set = catalog::get(name);
        CHECK(set.name == name);
        CHECK(!set.provenance.empty());
    }
    CHECK(catalog::get("23-12").diagram.vertex_count() == 23);
    CHECK(catalog::get("23-12").diagram.edge_count() == 12);
    CHECK(catalog::get("24-14").diagram.vertex_count() == 24);
    CHECK(catalog::get("24-14").diagram.edge_count() == 14);
}

TEST_CASE("all fixtures except the hexagon are KS") {
    for (const auto& name : catalog::list_names()) {
        const auto& set = catalog::get(name);
        bool expect_ks = name != "hexagon";
        CHECK_MESSAGE(is_ks(set.diagram) == expect_ks, name);
    }
}

TEST_CASE("shipped realizations verify") {
    int with_vectors = 0;
    for (const auto& name : catalog::list_names()) {
        const auto& set = catalog::get(name);
        if (!set.vectors) continue;
        ++with_vectors;
        CHECK_MESSAGE(verify_assignment(set.diagram, *set.vectors), name);
    }
    CHECK(with_vectors == 6);  // 18-9, 23-14a, 23-14b, 24-15, 24-20, 22-11
}

TEST_CASE("peres 24-24 structure") {
    const MmpDiagram& peres = catalog::peres_24_24();
    CHECK(peres.vertex_count() == 24);
    CHECK(peres.edge_count() == 24);
    for (int v : peres.vertices()) CHECK(peres.degree(v) == 4);
    CHECK(is_ks(peres));
    // every vertex lies on several tetrads, so deletions keep 24 vertices
    for (std::size_t e = 0; e < peres.edge_count(); ++e) {
        CHECK(peres.delete_edge(e).vertex_count() == 24);
    }
}

TEST_CASE("containment in the master set") {
    const MmpDiagram& peres = catalog::peres_24_24();
    std::vector<std::string> exempt = {"22-11", "23-12", "24-14",
                                       "peres-24-24"};
    for (const auto& name : catalog::list_names()) {
        const auto& set = catalog::get(name);
        bool in = is_subgraph(set.diagram, peres).has_value();
        bool expected =
            std::find(exempt.begin(), exempt.end(), name) == exempt.end() ||
            name == "peres-24-24";
        CHECK_MESSAGE(in == expected, name);
    }
}

TEST_CASE("containment chain of the non-m101 family") {
    const auto& d189 = catalog::get("18-9").diagram;
    const auto& d2010 = catalog::get("20-10").diagram;
    const auto& d2211 = catalog::get("22-11").diagram;
    const auto& d2312 = catalog::get("23-12").diagram;
    const auto& d2414 = catalog::get("24-14").diagram;
    CHECK(is_subgraph(d189, d2010));
    CHECK(is_subgraph(d2010, d2211));
    CHECK(is_subgraph(d2211, d2312));
    CHECK(is_subgraph(d2312, d2414));
    CHECK(is_subgraph(d189, d2414));
}

TEST_CASE("the 24-15 avoids all earlier named sets") {
    const auto& d2415 = catalog::get("24-15").diagram;
    for (const char* name : {"18-9", "20-10", "20-11a", "20-11b", "22-13a",
                             "22-13b", "23-14a", "23-14b"}) {
        CHECK_MESSAGE(!is_subgraph(catalog::get(name).diagram, d2415), name);
    }
    CHECK(is_isomorphic(d2415, catalog::get("24-15-4").diagram));
}

TEST_CASE("appendix cross-references to the 22-13 pair") {
    const auto& c = catalog::get("22-13a").diagram;  // "(c)"
    const auto& d = catalog::get("22-13b").diagram;  // "(d)"
    // 23-14a avoids (c) and contains (d); 23-14b the other way round
    CHECK(!is_subgraph(c, catalog::get("23-14a").diagram));
    CHECK(is_subgraph(d, catalog::get("23-14a").diagram));
    CHECK(is_subgraph(c, catalog::get("23-14b").diagram));
    CHECK(!is_subgraph(d, catalog::get("23-14b").diagram));
    // same pattern for the two appendix 23-14s
    CHECK(!is_subgraph(c, catalog::get("23-14c").diagram));
    CHECK(is_subgraph(d, catalog::get("23-14c").diagram));
    CHECK(is_subgraph(c, catalog::get("23-14d").diagram));
    CHECK(!is_subgraph(d, catalog::get("23-14d").diagram));
    // 23-15 and the appendix 24-14 contain both
    for (const char* name : {"23-15", "24-14-b"}) {
        CHECK(is_subgraph(c, catalog::get(name).diagram));
        CHECK(is_subgraph(d, catalog::get(name).diagram));
    }
    // 24-15-(2,4,6,7,8,9) avoid (c); 24-15-(1,3,4,5,10) avoid (d)
    for (int i : {2, 4, 6, 7, 8, 9}) {
        CHECK(!is_subgraph(
            c, catalog::get("24-15-" + std::to_string(i)).diagram));
    }
    for (int i : {1, 3, 4, 5, 10}) {
        CHECK(!is_subgraph(
            d, catalog::get("24-15-" + std::to_string(i)).diagram));
    }
}

TEST_CASE("the named pool") {
    const CandidatePool& pool = catalog::table2_22_11_pool();
    CHECK(pool.size() == 22);
    CHECK(pool.name() == "table2-22-11");
}
