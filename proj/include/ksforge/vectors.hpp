#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksforge/field.hpp"
#include "ksforge/mmp.hpp"

namespace ksforge {

/// A projective ray in 4 dimensions with exact field components.
///
/// Stored in a normal form unique per projective class: the vector is
/// divided by its first nonzero component, then scaled by the positive
/// rational that clears all denominators and reduces the integer
/// coefficients to content 1. Parallel inputs construct equal objects.
class Ray4 {
public:
    Ray4(const AlgebraicNumber& c1, const AlgebraicNumber& c2,
         const AlgebraicNumber& c3, const AlgebraicNumber& c4);
    explicit Ray4(const std::array<AlgebraicNumber, 4>& components);
    /// Integer components shortcut.
    static Ray4 of_ints(long long c1, long long c2, long long c3,
                        long long c4);

    const std::array<AlgebraicNumber, 4>& components() const {
        return components_;
    }

    bool operator==(const Ray4& o) const { return components_ == o.components_; }
    bool operator!=(const Ray4& o) const { return !(*this == o); }

    /// "(c1,c2,c3,c4)" with exact component syntax.
    std::string str() const;
    /// Parses the str() form. Throws FieldError on malformed input.
    static Ray4 parse(const std::string& text);

private:
    std::array<AlgebraicNumber, 4> components_;
};

/// Exact inner product of representatives (normal forms).
AlgebraicNumber dot(const Ray4& u, const Ray4& v);

bool is_orthogonal(const Ray4& u, const Ray4& v);

/// True iff all 2x2 minors of the pair vanish.
bool is_parallel(const Ray4& u, const Ray4& v);

/// A finite set of pairwise non-parallel candidate rays for vectorfind.
class CandidatePool {
public:
    explicit CandidatePool(std::vector<Ray4> rays, std::string name = "");

    const std::vector<Ray4>& rays() const { return rays_; }
    std::size_t size() const { return rays_.size(); }
    const Ray4& operator[](std::size_t i) const { return rays_[i]; }
    const std::string& name() const { return name_; }

    /// One ray per line in Ray4::parse syntax; '#' starts a comment.
    static CandidatePool parse(const std::string& text, std::string name = "");

private:
    std::vector<Ray4> rays_;
    std::string name_;
};

/// All 40 projective rays with components in {-1,0,1}, first nonzero
/// component +1, in ascending lexicographic component order.
const CandidatePool& standard_pool_m101();

/// A total assignment of rays to a diagram's vertices.
struct VectorAssignment {
    /// (vertex id, ray), sorted by vertex id.
    std::vector<std::pair<int, Ray4>> rays;

    const Ray4* ray_of(int vertex) const;

    /// One "X: (c1,c2,c3,c4)" line per vertex.
    std::string str() const;
    /// Parses the str() form (blank lines and '#' comments skipped).
    static VectorAssignment parse(const std::string& text);
};

/// True iff every edge's rays are mutually orthogonal and all vertex
/// pairs carry non-parallel rays. Throws MmpError when the assignment
/// is not total on the diagram's vertex set.
bool verify_assignment(const MmpDiagram& d, const VectorAssignment& va);

/// The per-edge bilinear orthogonality equations, one line per vertex
/// pair: "a_X1*a_Y1+a_X2*a_Y2+a_X3*a_Y3+a_X4*a_Y4=0".
std::vector<std::string> orthogonality_system(const MmpDiagram& d);

enum class VectorfindOutcome { Assigned, NoSolution, Indeterminate };

struct VectorfindResult {
    VectorfindOutcome outcome = VectorfindOutcome::NoSolution;
    std::optional<VectorAssignment> assignment;  // present iff Assigned
    std::uint64_t nodes = 0;
};

/// Exhaustive backtracking search for an assignment of pool rays to
/// vertices with per-edge orthogonality and no ray reuse. Vertices are
/// processed by descending edge-degree (ties by vertex id). NoSolution
/// certifies exhaustion; Indeterminate reports a timeout and decides
/// nothing. timeout <= 0 means no limit.
VectorfindResult vectorfind(const MmpDiagram& d, const CandidatePool& pool,
                            std::chrono::duration<double> timeout =
                                std::chrono::duration<double>(0));

}  // namespace ksforge
