#include <doctest.h>

#include <set>

#include "ksforge/catalog.hpp"
#include "ksforge/vectors.hpp"

using namespace ksforge;

namespace {

Ray4 ray(const char* text) { return Ray4::parse(text); }

}  // namespace

TEST_CASE("dot products") {
    CHECK(dot(ray("(1,1,0,0)"), ray("(1,-1,0,0)")).is_zero());
    CHECK(dot(ray("(1,0,0,1)"), ray("(1,0,0,1)")) == AlgebraicNumber(2));
    const auto& va = *catalog::get("22-11").vectors;
    CHECK(dot(*va.ray_of(vertex_index('5')), *va.ray_of(vertex_index('6')))
              .is_zero());
}

TEST_CASE("parallelism via minors") {
    CHECK(is_parallel(ray("(1,0,0,0)"), ray("(2,0,0,0)")));
    CHECK(!is_parallel(ray("(1,0,0,0)"), ray("(0,1,0,0)")));
    CHECK(is_parallel(ray("(1,1,0,0)"), ray("(r2/2,r2/2,0,0)")));
}

TEST_CASE("normal form is scale-invariant") {
    Ray4 base = ray("(1,1,0,0)");
    CHECK(ray("(-2,-2,0,0)") == base);
    CHECK(ray("(r2/2,r2/2,0,0)") == base);
    CHECK(ray("(1/2,1/2,0,0)") == base);
    // first nonzero component positive and integral after clearing
    Ray4 r = ray("(0,-1/2,r2/4,0)");
    CHECK(r.components()[1].rational_part().sign() > 0);
    CHECK_THROWS_AS(ray("(0,0,0,0)"), FieldError);
    CHECK(Ray4::parse(base.str()) == base);
}

TEST_CASE("m101 pool against the sign-quotient oracle") {
    const CandidatePool& pool = standard_pool_m101();
    CHECK(pool.size() == 40);
    // oracle: all nonzero {-1,0,1} vectors, deduped by parallelism
    std::vector<Ray4> all;
    for (int c1 = -1; c1 <= 1; ++c1)
        for (int c2 = -1; c2 <= 1; ++c2)
            for (int c3 = -1; c3 <= 1; ++c3)
                for (int c4 = -1; c4 <= 1; ++c4) {
                    if (c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0) continue;
                    all.push_back(Ray4::of_ints(c1, c2, c3, c4));
                }
    std::set<std::string> classes;
    for (const auto& r : all) classes.insert(r.str());
    CHECK(classes.size() == 40);
    std::set<std::string> pooled;
    for (const auto& r : pool.rays()) pooled.insert(r.str());
    CHECK(pooled == classes);
    bool has = false;
    for (const auto& r : pool.rays()) {
        if (r == Ray4::of_ints(1, -1, -1, 1)) has = true;
    }
    CHECK(has);
}

TEST_CASE("orthogonality equations") {
    auto eqs = orthogonality_system(MmpDiagram::parse("BCDE."));
    REQUIRE(eqs.size() == 6);
    CHECK(eqs[0] == "a_B1*a_C1+a_B2*a_C2+a_B3*a_C3+a_B4*a_C4=0");
    CHECK(eqs[1] == "a_B1*a_D1+a_B2*a_D2+a_B3*a_D3+a_B4*a_D4=0");
    CHECK(eqs[2] == "a_B1*a_E1+a_B2*a_E2+a_B3*a_E3+a_B4*a_E4=0");
    CHECK(eqs[3] == "a_C1*a_D1+a_C2*a_D2+a_C3*a_D3+a_C4*a_D4=0");
    CHECK(eqs[4] == "a_C1*a_E1+a_C2*a_E2+a_C3*a_E3+a_C4*a_E4=0");
    CHECK(eqs[5] == "a_D1*a_E1+a_D2*a_E2+a_D3*a_E3+a_D4*a_E4=0");
    CHECK(orthogonality_system(MmpDiagram::parse(kHexagonText)).size() == 36);
    CHECK(orthogonality_system(catalog::get("18-9").diagram).size() == 54);
}

TEST_CASE("vectorfind on a single tetrad") {
    std::vector<Ray4> basis = {ray("(1,0,0,0)"), ray("(0,1,0,0)"),
                               ray("(0,0,1,0)"), ray("(0,0,0,1)")};
    CandidatePool pool(basis, "basis");
    auto result = vectorfind(MmpDiagram::parse("1234."), pool);
    REQUIRE(result.outcome == VectorfindOutcome::Assigned);
    std::set<std::string> used;
    for (const auto& [v, r] : result.assignment->rays) used.insert(r.str());
    CHECK(used.size() == 4);
}

TEST_CASE("vectorfind reproduces the 18-9 realization over its own rays") {
    const auto& set = catalog::get("18-9");
    std::vector<Ray4> rays;
    for (const auto& [v, r] : set.vectors->rays) rays.push_back(r);
    CandidatePool pool(rays, "18-9-rays");
    auto result = vectorfind(set.diagram, pool);
    REQUIRE(result.outcome == VectorfindOutcome::Assigned);
    // every pool ray used exactly once, so the solution equals the shipped
    // realization up to a diagram automorphism
    std::set<std::string> used;
    for (const auto& [v, r] : result.assignment->rays) used.insert(r.str());
    CHECK(used.size() == 18);
}

TEST_CASE("vectorfind outcomes on the 22-11") {
    const auto& d2211 = catalog::get("22-11").diagram;
    auto no = vectorfind(d2211, standard_pool_m101());
    CHECK(no.outcome == VectorfindOutcome::NoSolution);
    auto yes = vectorfind(d2211, catalog::table2_22_11_pool());
    CHECK(yes.outcome == VectorfindOutcome::Assigned);
}

TEST_CASE("vectorfind timeout yields Indeterminate") {
    auto r = vectorfind(catalog::peres_24_24(), standard_pool_m101(),
                        std::chrono::duration<double>(1e-12));
    CHECK(r.outcome == VectorfindOutcome::Indeterminate);
    CHECK(!r.assignment);
}

TEST_CASE("verify_assignment") {
    const auto& set = catalog::get("18-9");
    CHECK(verify_assignment(set.diagram, *set.vectors));
    // repeating a ray on two vertices fails the parallel check
    VectorAssignment repeated = *set.vectors;
    repeated.rays[1].second = repeated.rays[0].second;
    CHECK(!verify_assignment(set.diagram, repeated));
    // missing vertices violate the totality precondition
    VectorAssignment partial = *set.vectors;
    partial.rays.pop_back();
    CHECK_THROWS_AS(verify_assignment(set.diagram, partial), MmpError);
}

TEST_CASE("assignment text round-trip") {
    const auto& va = *catalog::get("22-11").vectors;
    VectorAssignment back = VectorAssignment::parse(va.str());
    REQUIRE(back.rays.size() == va.rays.size());
    for (std::size_t i = 0; i < va.rays.size(); ++i) {
        CHECK(back.rays[i].first == va.rays[i].first);
        CHECK(back.rays[i].second == va.rays[i].second);
    }
}

TEST_CASE("pool files parse with comments") {
    CandidatePool pool = CandidatePool::parse(
        "# basis rays\n(1,0,0,0)\n(0,1,0,0)\n\n(0,0,1,0) # z\n", "f");
    CHECK(pool.size() == 3);
    CHECK_THROWS_AS(CandidatePool::parse("(1,0,0,0)\n(2,0,0,0)\n", "bad"),
                    FieldError);
}
