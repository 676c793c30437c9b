#include "ksforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>

namespace ksforge::catalog {

namespace {

// ---------------------------------------------------------------------
// Published ray tables. Components are exact expressions over integers,
// r2, r3, r6 and '/'. The 22-11 column stores sqrt3/(2 sqrt2) as r6/4 and
// the J ray as the orthogonal completion forced by its two tetrads (the
// published listing misprints J's last sign, which would make it parallel
// to I and break edges 1AJK and JFLM).
// ---------------------------------------------------------------------

const char kVectors18_9[] =
    "1: (1,0,0,1)\n2: (0,1,0,0)\n3: (0,0,1,0)\n4: (1,0,0,-1)\n"
    "5: (1,0,1,0)\n6: (1,-1,-1,1)\n7: (1,-1,-1,-1)\n8: (1,1,0,0)\n"
    "9: (1,-1,0,0)\nA: (1,1,1,1)\nB: (1,1,-1,-1)\nC: (0,0,1,-1)\n"
    "D: (1,1,1,-1)\nE: (1,0,-1,0)\nF: (0,1,0,1)\nG: (1,-1,1,1)\n"
    "H: (0,0,0,1)\nI: (0,1,-1,0)\n";

const char kVectors23_14a[] =
    "1: (0,0,0,1)\n2: (0,0,1,0)\n3: (1,-1,0,0)\n4: (1,1,0,0)\n"
    "5: (0,0,1,1)\n6: (1,-1,1,-1)\n7: (1,-1,-1,1)\n8: (1,1,1,1)\n"
    "9: (1,0,0,-1)\nA: (0,1,-1,0)\nB: (1,0,0,1)\nC: (1,1,1,-1)\n"
    "D: (1,-1,-1,-1)\nE: (1,1,-1,1)\nF: (0,1,0,-1)\nG: (1,0,1,0)\n"
    "H: (1,0,-1,0)\nI: (0,1,0,0)\nJ: (1,0,0,0)\nK: (1,1,-1,-1)\n"
    "L: (0,1,1,0)\nM: (1,-1,1,1)\nN: (0,1,0,1)\n";

const char kVectors23_14b[] =
    "1: (0,0,0,1)\n2: (1,0,0,0)\n3: (0,1,1,0)\n4: (0,1,-1,0)\n"
    "5: (1,0,0,-1)\n6: (1,1,1,1)\n7: (1,-1,-1,1)\n8: (1,-1,1,-1)\n"
    "9: (1,1,0,0)\nA: (0,0,1,1)\nB: (1,-1,0,0)\nC: (1,1,1,-1)\n"
    "D: (1,1,-1,1)\nE: (1,-1,-1,-1)\nF: (0,1,0,-1)\nG: (1,0,1,0)\n"
    "H: (1,0,-1,0)\nI: (0,1,0,0)\nJ: (0,0,1,0)\nK: (1,0,0,1)\n"
    "L: (1,1,-1,-1)\nM: (0,0,1,-1)\nN: (0,1,0,1)\n";

const char kVectors24_15[] =
    "1: (0,0,0,1)\n2: (1,0,0,0)\n3: (0,1,1,0)\n4: (0,1,-1,0)\n"
    "5: (1,0,0,-1)\n6: (1,1,1,1)\n7: (1,-1,-1,1)\n8: (1,1,-1,-1)\n"
    "9: (0,1,0,1)\nA: (1,0,1,0)\nB: (0,1,0,-1)\nC: (1,1,-1,1)\n"
    "D: (1,-1,-1,-1)\nE: (1,-1,1,1)\nF: (0,0,1,-1)\nG: (1,1,0,0)\n"
    "H: (1,-1,0,0)\nI: (0,0,1,0)\nJ: (0,0,1,1)\nK: (1,0,0,1)\n"
    "L: (1,-1,1,-1)\nM: (1,0,-1,0)\nN: (1,1,1,-1)\nO: (0,1,0,0)\n";

const char kVectors24_20[] =
    "1: (0,0,0,1)\n2: (0,1,1,0)\n3: (1,0,0,0)\n4: (0,1,-1,0)\n"
    "5: (1,1,1,1)\n6: (1,0,0,-1)\n7: (1,-1,-1,1)\n8: (1,0,1,0)\n"
    "9: (1,1,-1,-1)\nA: (0,1,0,1)\nB: (1,0,-1,0)\nC: (1,1,1,-1)\n"
    "D: (1,-1,1,1)\nE: (0,0,1,-1)\nF: (1,-1,-1,-1)\nG: (1,1,0,0)\n"
    "H: (1,-1,0,0)\nI: (0,0,1,0)\nJ: (0,1,0,0)\nK: (1,0,0,1)\n"
    "L: (1,1,-1,1)\nM: (1,-1,1,-1)\nN: (0,1,0,-1)\nO: (0,0,1,1)\n";

const char kVectors22_11[] =
    "1: (0,1,0,0)\n2: (0,0,1,0)\n3: (1,0,0,0)\n4: (0,0,0,1)\n"
    "5: (r2/2,r2/2,0,0)\n6: (1/2,-1/2,-r2/2,0)\n7: (1/2,-1/2,r2/2,0)\n"
    "8: (1/2,1/2,0,-r2/2)\n9: (0,r2/2,1/2,1/2)\nA: (r2/2,0,-1/2,1/2)\n"
    "B: (1/2,-1/2,0,-r2/2)\nC: (0,-r2/2,1/2,1/2)\nD: (1/2,1/2,r2/2,0)\n"
    "E: (1/2,-1/2,0,r2/2)\nF: (0,r2/2,-1/2,1/2)\nG: (r2/2,0,-1/2,-1/2)\n"
    "H: (r2/2,0,1/2,1/2)\nI: (0,0,-r2/2,r2/2)\nJ: (0,0,r2/2,r2/2)\n"
    "K: (-r2/2,0,-1/2,1/2)\nL: (r3/2,-r2/4,-1/4,1/4)\n"
    "M: (1/2,r6/4,r3/4,-r3/4)\n";

// ---------------------------------------------------------------------
// Published tetrad listings (hexagon already expanded where the figures
// assumed it).
// ---------------------------------------------------------------------

struct ListedSet {
    const char* name;
    const char* fragment;  // nullptr when `text` is complete
    const char* text;
    const char* vectors;   // nullptr when no realization is shipped
    const char* provenance;
};

const ListedSet kListed[] = {
    {"hexagon", nullptr, kHexagonText, nullptr,
     "the hexagon loop common to every classified set"},
    {"20-10", "H68F,IJK5,1J9B,4KEC.", nullptr, nullptr,
     "hexagon plus published fragment"},
    {"22-11", "25BE,1AJK,JFLM,68FH,39IC.", nullptr, kVectors22_11,
     "hexagon plus published fragment; realization from the published "
     "component table with the forced J completion"},
    {"23-12", nullptr,
     "1234,4567,789A,ABCD,DEFG,GHI1,25BE,1AJK,JFLM,68FH,39IC,245N.", nullptr,
     "22-11 extended by the first orthogonal-completion tetrad (new ray "
     "(1,-1,0,0) at N)"},
    {"23-14a", "12JI,1JLA,35CE,678K,9ABL,CDEM,FGHN,GNK7.", nullptr,
     kVectors23_14a, "hexagon plus published fragment; published components"},
    {"23-14b", "12JI,1J9B,345K,4KEC,6LMB,9ABM,FGHN,GNL7.", nullptr,
     kVectors23_14b, "hexagon plus published fragment; published components"},
    {"23-14c", nullptr,
     "KLMN,GHIJ,DEFJ,BCFI,9ABC,78DE,56GH,1234,34AC,248E,146H,9CMN,7ELN,5HLM.",
     nullptr, "published complete tetrad listing"},
    {"23-14d", nullptr,
     "KLMN,HIJN,DEFG,9ABC,5678,234J,178I,1BCH,4FGN,68EG,ACDG,23LM,358M,39CL.",
     nullptr, "published complete tetrad listing"},
    {"23-15", nullptr,
     "KLMN,GHIJ,CDEF,ABEF,9BIJ,789A,DFMN,HJLN,3456,2568,1347,1278,46CF,45GJ,"
     "18KN.",
     nullptr, "published complete tetrad listing"},
    {"24-14", nullptr,
     "1234,4567,789A,ABCD,DEFG,GHI1,25BE,1AJK,JFLM,68FH,39IC,245N,13IJ,28NO.",
     nullptr,
     "23-12 extended by an existing-ray tetrad and an orthogonal completion "
     "(new ray (r2/2,r2/2,0,1) at O)"},
    {"24-14-b", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,78KO,BCJO,34IN,FGHN,2468,14AC,58EG,9CDG.",
     nullptr, "published complete tetrad listing"},
    {"24-15", nullptr,
     "1234,12IO,1AMO,1GHI,345K,4567,4DKN,678L,789A,7GJL,9ABM,ABCD,CDEN,DEFG,"
     "FGHJ.",
     kVectors24_15,
     "reconstructed from the published 24-ray component table: the unique "
     "hexagon-containing tetrad subset isomorphic to 24-15-4"},
    {"24-15-1", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,3478,24BC,14FG,68JK,ACIK,EGIJ,58NO,9CMO,"
     "DGMN.",
     nullptr, "published complete tetrad listing"},
    {"24-15-2", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,34BC,78AC,24FG,68EG,9CJK,DGIK,14NO,58MO,"
     "IJMN.",
     nullptr, "published complete tetrad listing"},
    {"24-15-3", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,34CK,248O,14FG,ABIJ,67MN,5BJO,79KN,BEGI,"
     "7DGM.",
     nullptr, "published complete tetrad listing"},
    {"24-15-4", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,34FG,78EG,BCDG,24JK,68IK,ACHK,14NO,58MO,"
     "9CLO.",
     nullptr, "published complete tetrad listing"},
    {"24-15-5", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,478K,3BCK,68FG,ACEG,12IJ,58NO,9CMO,2DGJ,"
     "2IMN.",
     nullptr, "published complete tetrad listing"},
    {"24-15-6", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,478O,3BCO,68FG,ACEG,58JK,9CIK,12MN,2DGN,"
     "1HKN.",
     nullptr, "published complete tetrad listing"},
    {"24-15-7", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,48KO,7FGK,3BCO,ACEG,56IJ,12MN,69CJ,2DGN,"
     "26IM.",
     nullptr, "published complete tetrad listing"},
    {"24-15-8", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,1234,4FGK,78EG,BCDG,3KNO,68MO,ACMN,12IJ,258J,"
     "29CI.",
     nullptr, "published complete tetrad listing"},
    {"24-15-9", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,34KO,78JN,BCIN,68FG,ACEG,12HM,1234,DGHO,2458,"
     "149C.",
     nullptr, "published complete tetrad listing"},
    {"24-15-10", nullptr,
     "LMNO,IJKO,EFGH,ABCD,6789,345K,125N,289J,1CDJ,479M,3BDM,69GH,ADFH,5EHO,"
     "5KNO.",
     nullptr, "published complete tetrad listing"},
    {"24-16-1", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,8BCO,7FGO,ACJK,EGIK,1234,346N,249C,14DG,5HKN,"
     "125M,56MN.",
     nullptr, "published complete tetrad listing"},
    {"24-16-2", nullptr,
     "LMNO,HIJK,DEFG,9ABC,5678,BCJK,FGIK,ACNO,EGMO,3478,1256,48HK,269C,16DG,"
     "38LO,1234.",
     nullptr, "published complete tetrad listing"},
    {"24-16-3", nullptr,
     "LMNO,HIJK,DEFG,9ABC,678C,FGJK,EGNO,3458,125B,5CDG,1267,349A,27IK,4AHK,"
     "17MO,3ALO.",
     nullptr, "published complete tetrad listing"},
    {"24-16-4", nullptr,
     "LMNO,HIJK,DEFG,9ABC,BCJK,FGIK,5678,3478,1256,1234,ACNO,EGMO,489C,47DG,"
     "26HK,16MN.",
     nullptr, "published complete tetrad listing"},
    {"24-16-5", nullptr,
     "LMNO,HIJK,DEFG,9ABC,CFGO,EGJK,5678,3478,1256,1234,24BO,9AMN,68DG,14IK,"
     "AHKN,67AM.",
     nullptr, "published complete tetrad listing"},
    {"24-17-1", nullptr,
     "LMNO,HIJK,DEFG,FGJK,EGNO,9ABC,5678,3478,24BC,68IK,ACHK,58MO,9CLO,14DG,"
     "1256,139A,1234.",
     nullptr, "published complete tetrad listing"},
    {"24-17-2", nullptr,
     "LMNO,HIJK,JKNO,DEFG,9ABC,78BC,56FG,349A,12DE,3478,1256,ACIK,EGHK,48MO,"
     "26LO,259C,47DG.",
     nullptr, "published complete tetrad listing"},
};

// Critical subsets extracted from the 24-24 classification sweep, frozen
// as canonical keys. The 20-11 pair is ordered by key; the 22-13 pair is
// ordered so that 22-13a is the one NOT contained in 23-14a. The
// acceptance suite re-derives the set of six and checks these match.
const char k2011a[] =
    "1245,1367,2389,4ADJ,5AEK,6BFJ,7BGK,8CHJ,9CIK,DFHJ,EGIK.";
const char k2011b[] =
    "1257,1368,249B,34AC,56DJ,79EK,8AFK,BCGJ,DGHJ,EFIK,HIJK.";
const char k2213a[] =
    "127J,138K,239L,45AJ,46BK,56CL,7ADJ,8BEK,9CFL,DGJM,EHKM,FILM,GHIM.";
const char k2213b[] =
    "1234,157J,258K,369L,46AM,7BCJ,8FGK,9DHL,AEIM,BDJL,CEJM,FHKL,GIKM.";

// 24-20 reconstruction from its component table: the lexicographically
// least hexagon-containing 20-tetrad subset of the column's 24 rays that
// is KS, covers all 24 rays, and contains 18-9, 20-10, 23-14a, 23-14b,
// both critical 20-11s, both critical 22-13s, and the 24-15.
const char k2420[] =
    "1234,13IJ,18BJ,1GHI,246K,26DL,29KM,3AIN,3EJO,4567,4CFK,579M,59EH,5BMN,"
    "789A,8ABN,ABCD,CDFL,DEFG,EGHO.";

// ---------------------------------------------------------------------

std::pair<int, int> counts_from_name(const std::string& name) {
    std::size_t i = 0;
    if (name.rfind("peres-", 0) == 0) i = 6;
    std::size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j])))
        ++j;
    if (j == i || j >= name.size() || name[j] != '-') return {-1, -1};
    int v = std::stoi(name.substr(i, j - i));
    std::size_t k = ++j;
    while (k < name.size() && std::isdigit(static_cast<unsigned char>(name[k])))
        ++k;
    if (k == j) return {-1, -1};
    int e = std::stoi(name.substr(j, k - j));
    return {v, e};
}

std::vector<Ray4> peres_rays() {
    std::vector<Ray4> rays;
    for (int i = 0; i < 4; ++i) {
        long long c[4] = {0, 0, 0, 0};
        c[i] = 1;
        rays.push_back(Ray4::of_ints(c[0], c[1], c[2], c[3]));
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int s : {1, -1}) {
                long long c[4] = {0, 0, 0, 0};
                c[i] = 1;
                c[j] = s;
                rays.push_back(Ray4::of_ints(c[0], c[1], c[2], c[3]));
            }
        }
    }
    for (int s2 : {1, -1}) {
        for (int s3 : {1, -1}) {
            for (int s4 : {1, -1}) {
                rays.push_back(Ray4::of_ints(1, s2, s3, s4));
            }
        }
    }
    return rays;
}

/// All mutually orthogonal 4-subsets of a ray list, as edges over vertex
/// ids equal to ray positions, in ascending lexicographic order.
std::vector<std::vector<int>> orthogonal_tetrads(const std::vector<Ray4>& rays) {
    int n = static_cast<int>(rays.size());
    std::vector<std::vector<char>> orth(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            orth[i][j] = orth[j][i] = is_orthogonal(rays[i], rays[j]);
        }
    }
    std::vector<std::vector<int>> tetrads;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!orth[a][b]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!orth[a][c] || !orth[b][c]) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (orth[a][d] && orth[b][d] && orth[c][d]) {
                        tetrads.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    return tetrads;
}

MmpDiagram build_peres() {
    std::vector<Ray4> rays = peres_rays();
    auto tetrads = orthogonal_tetrads(rays);
    if (tetrads.size() != 24) {
        throw MmpError("peres construction: expected 24 tetrads, got " +
                       std::to_string(tetrads.size()));
    }
    MmpDiagram d = MmpDiagram::from_edges(tetrads, 4);
    if (d.vertex_count() != 24) {
        throw MmpError("peres construction: expected 24 vertices");
    }
    for (int v : d.vertices()) {
        if (d.degree(v) != 4) {
            throw MmpError("peres construction: vertex degree != 4");
        }
    }
    return d;
}

/// The 18-9 diagram is fully determined by its ray table: those 18 rays
/// admit exactly 9 mutually orthogonal tetrads.
MmpDiagram build_18_9(const VectorAssignment& va) {
    std::vector<Ray4> rays;
    std::vector<int> ids;
    for (const auto& [v, ray] : va.rays) {
        ids.push_back(v);
        rays.push_back(ray);
    }
    auto tetrads = orthogonal_tetrads(rays);
    if (tetrads.size() != 9) {
        throw MmpError("18-9 derivation: expected 9 tetrads, got " +
                       std::to_string(tetrads.size()));
    }
    for (auto& t : tetrads) {
        for (int& x : t) x = ids[x];
    }
    return MmpDiagram::from_edges(tetrads, 4);
}

struct Registry {
    std::vector<NamedSet> sets;
    std::map<std::string, std::size_t> index;
    std::unique_ptr<CandidatePool> pool_22_11;

    void add(NamedSet set) {
        auto [v, e] = counts_from_name(set.name);
        if (v >= 0) {
            if (static_cast<int>(set.diagram.vertex_count()) != v ||
                static_cast<int>(set.diagram.edge_count()) != e) {
                throw MmpError("catalog: counts of '" + set.name +
                               "' do not match its diagram (" +
                               std::to_string(set.diagram.vertex_count()) +
                               "-" + std::to_string(set.diagram.edge_count()) +
                               ")");
            }
        }
        if (set.vectors && !verify_assignment(set.diagram, *set.vectors)) {
            throw MmpError("catalog: realization of '" + set.name +
                           "' fails orthogonality/parallelism");
        }
        index.emplace(set.name, sets.size());
        sets.push_back(std::move(set));
    }
};

const Registry& registry() {
    static const Registry reg = [] {
        Registry r;
        for (const auto& item : kListed) {
            if (std::string(item.name).rfind("@PENDING", 0) == 0) continue;
            NamedSet set;
            set.name = item.name;
            set.diagram = item.fragment ? with_hexagon(std::string(item.fragment))
                                        : MmpDiagram::parse(item.text);
            if (item.vectors) {
                set.vectors = VectorAssignment::parse(item.vectors);
            }
            set.provenance = item.provenance;
            if (set.name == "18-9") {
                throw MmpError("18-9 is derived, not listed");
            }
            r.add(std::move(set));
        }
        // derived fixtures
        {
            NamedSet set;
            set.name = "18-9";
            set.vectors = VectorAssignment::parse(kVectors18_9);
            set.diagram = build_18_9(*set.vectors);
            set.provenance =
                "tetrads derived from the published 18-ray component table";
            r.add(std::move(set));
        }
        for (const auto& [name, text] :
             {std::pair<const char*, const char*>{"20-11a", k2011a},
              {"20-11b", k2011b},
              {"22-13a", k2213a},
              {"22-13b", k2213b}}) {
            if (std::string(text).rfind("@PENDING", 0) == 0) continue;
            NamedSet set;
            set.name = name;
            set.diagram = MmpDiagram::parse(text);
            set.provenance =
                "critical subset extracted from the 24-24 classification";
            r.add(std::move(set));
        }
        {
            NamedSet set;
            set.name = "24-20";
            set.diagram = MmpDiagram::parse(k2420);
            set.vectors = VectorAssignment::parse(kVectors24_20);
            set.provenance =
                "reconstructed from the published 24-ray component table";
            r.add(std::move(set));
        }
        {
            NamedSet set;
            set.name = "peres-24-24";
            set.diagram = build_peres();
            set.provenance = "all orthogonal tetrads of the 24 master rays";
            r.add(std::move(set));
        }
        // order the listing by name for a stable CLI inventory
        std::vector<Ray4> pool;
        for (const auto& [v, ray] : r.sets[r.index.at("22-11")].vectors->rays) {
            pool.push_back(ray);
        }
        r.pool_22_11 =
            std::make_unique<CandidatePool>(std::move(pool), "table2-22-11");
        return r;
    }();
    return reg;
}

}  // namespace

const NamedSet& get(const std::string& name) {
    const Registry& r = registry();
    auto it = r.index.find(name);
    if (it == r.index.end()) {
        throw MmpError("unknown catalog name '" + name + "'");
    }
    return r.sets[it->second];
}

std::vector<std::string> list_names() {
    std::vector<std::string> names;
    for (const auto& s : registry().sets) names.push_back(s.name);
    std::sort(names.begin(), names.end());
    return names;
}

const MmpDiagram& peres_24_24() { return get("peres-24-24").diagram; }

const CandidatePool& table2_22_11_pool() { return *registry().pool_22_11; }

const std::vector<std::string>& critical_names() {
    static const std::vector<std::string> names = {
        "18-9", "20-11a", "20-11b", "22-13a", "22-13b", "24-15"};
    return names;
}

}  // namespace ksforge::catalog
