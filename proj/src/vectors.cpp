#include "ksforge/vectors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ksforge {

namespace {

long long llgcd(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lllcm(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / llgcd(a, b) * b;
}

}  // namespace

Ray4::Ray4(const AlgebraicNumber& c1, const AlgebraicNumber& c2,
           const AlgebraicNumber& c3, const AlgebraicNumber& c4)
    : Ray4(std::array<AlgebraicNumber, 4>{c1, c2, c3, c4}) {}

Ray4::Ray4(const std::array<AlgebraicNumber, 4>& components) {
    int first = -1;
    for (int i = 0; i < 4; ++i) {
        if (!components[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first < 0) throw FieldError("zero vector is not a ray");
    AlgebraicNumber inv = components[first].inverse();
    std::array<AlgebraicNumber, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = components[i] * inv;
    // scale by the positive rational clearing denominators with content 1
    long long lcm = 1, gcd = 0;
    auto visit = [&](const Rational& q) {
        if (q.is_zero()) return;
        lcm = lllcm(lcm, q.den());
    };
    for (const auto& c : w) {
        visit(c.rational_part());
        visit(c.sqrt2_part());
        visit(c.sqrt3_part());
        visit(c.sqrt6_part());
    }
    Rational scale_lcm(lcm);
    auto visit2 = [&](const Rational& q) {
        if (q.is_zero()) return;
        Rational z = q * scale_lcm;
        gcd = llgcd(gcd, z.num());
    };
    for (const auto& c : w) {
        visit2(c.rational_part());
        visit2(c.sqrt2_part());
        visit2(c.sqrt3_part());
        visit2(c.sqrt6_part());
    }
    Rational t = Rational(lcm) / Rational(gcd);
    for (int i = 0; i < 4; ++i) components_[i] = w[i] * AlgebraicNumber(t);
}

Ray4 Ray4::of_ints(long long c1, long long c2, long long c3, long long c4) {
    return Ray4(AlgebraicNumber(c1), AlgebraicNumber(c2), AlgebraicNumber(c3),
                AlgebraicNumber(c4));
}

std::string Ray4::str() const {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ',';
        out += components_[i].str();
    }
    out += ')';
    return out;
}

Ray4 Ray4::parse(const std::string& text) {
    std::size_t open = text.find('(');
    std::size_t close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos ||
        close <= open) {
        throw FieldError("ray syntax: expected '(c1,c2,c3,c4)' in '" + text +
                         "'");
    }
    std::string body = text.substr(open + 1, close - open - 1);
    std::array<AlgebraicNumber, 4> comps;
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t comma = i < 3 ? body.find(',', pos) : body.size();
        if (comma == std::string::npos) {
            throw FieldError("ray syntax: expected 4 components in '" + text +
                             "'");
        }
        comps[i] = AlgebraicNumber::parse(body.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return Ray4(comps);
}

AlgebraicNumber dot(const Ray4& u, const Ray4& v) {
    AlgebraicNumber s;
    for (int i = 0; i < 4; ++i) s = s + u.components()[i] * v.components()[i];
    return s;
}

bool is_orthogonal(const Ray4& u, const Ray4& v) { return dot(u, v).is_zero(); }

bool is_parallel(const Ray4& u, const Ray4& v) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            AlgebraicNumber m = u.components()[i] * v.components()[j] -
                                u.components()[j] * v.components()[i];
            if (!m.is_zero()) return false;
        }
    }
    return true;
}

CandidatePool::CandidatePool(std::vector<Ray4> rays, std::string name)
    : rays_(std::move(rays)), name_(std::move(name)) {
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        for (std::size_t j = i + 1; j < rays_.size(); ++j) {
            if (is_parallel(rays_[i], rays_[j])) {
                throw FieldError("pool rays " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are parallel");
            }
        }
    }
}

CandidatePool CandidatePool::parse(const std::string& text, std::string name) {
    std::vector<Ray4> rays;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        }
        if (blank) continue;
        rays.push_back(Ray4::parse(line));
    }
    return CandidatePool(std::move(rays), std::move(name));
}

const CandidatePool& standard_pool_m101() {
    static const CandidatePool pool = [] {
        std::vector<Ray4> rays;
        for (int c1 = -1; c1 <= 1; ++c1) {
            for (int c2 = -1; c2 <= 1; ++c2) {
                for (int c3 = -1; c3 <= 1; ++c3) {
                    for (int c4 = -1; c4 <= 1; ++c4) {
                        int comps[4] = {c1, c2, c3, c4};
                        int first = 0;
                        for (int i = 0; i < 4 && comps[i] == 0; ++i) {
                            first = i + 1;
                        }
                        if (first == 4) continue;       // zero vector
                        if (comps[first] != 1) continue;  // keep +1 leaders
                        rays.push_back(Ray4::of_ints(c1, c2, c3, c4));
                    }
                }
            }
        }
        return CandidatePool(std::move(rays), "m101");
    }();
    return pool;
}

const Ray4* VectorAssignment::ray_of(int vertex) const {
    auto it = std::lower_bound(
        rays.begin(), rays.end(), vertex,
        [](const auto& p, int v) { return p.first < v; });
    if (it == rays.end() || it->first != vertex) return nullptr;
    return &it->second;
}

std::string VectorAssignment::str() const {
    std::string out;
    for (const auto& [v, ray] : rays) {
        out += vertex_symbol(v);
        out += ": ";
        out += ray.str();
        out += '\n';
    }
    return out;
}

VectorAssignment VectorAssignment::parse(const std::string& text) {
    VectorAssignment va;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            bool blank = true;
            for (char c : line) {
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            }
            if (blank) continue;
            throw FieldError("assignment line missing ':': '" + line + "'");
        }
        std::string sym = line.substr(0, colon);
        sym.erase(std::remove_if(sym.begin(), sym.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  sym.end());
        if (sym.size() != 1) {
            throw FieldError("assignment line needs one vertex symbol: '" +
                             line + "'");
        }
        int v = vertex_index(sym[0]);
        va.rays.emplace_back(v, Ray4::parse(line.substr(colon + 1)));
    }
    std::sort(va.rays.begin(), va.rays.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < va.rays.size(); ++i) {
        if (va.rays[i].first == va.rays[i - 1].first) {
            throw FieldError("duplicate vertex in assignment");
        }
    }
    return va;
}

bool verify_assignment(const MmpDiagram& d, const VectorAssignment& va) {
    for (int v : d.vertices()) {
        if (!va.ray_of(v)) {
            throw MmpError(std::string("assignment missing vertex '") +
                           vertex_symbol(v) + "'");
        }
    }
    for (const auto& e : d.edges()) {
        const auto& vs = e.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!is_orthogonal(*va.ray_of(vs[i]), *va.ray_of(vs[j]))) {
                    return false;
                }
            }
        }
    }
    const auto& verts = d.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (is_parallel(*va.ray_of(verts[i]), *va.ray_of(verts[j]))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::string> orthogonality_system(const MmpDiagram& d) {
    std::vector<std::string> out;
    for (const auto& e : d.edges()) {
        const auto& vs = e.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                char x = vertex_symbol(vs[i]);
                char y = vertex_symbol(vs[j]);
                std::string eq;
                for (int k = 1; k <= d.dim(); ++k) {
                    if (k > 1) eq += '+';
                    eq += "a_";
                    eq += x;
                    eq += std::to_string(k);
                    eq += "*a_";
                    eq += y;
                    eq += std::to_string(k);
                }
                eq += "=0";
                out.push_back(std::move(eq));
            }
        }
    }
    return out;
}

namespace {

class VectorfindSearch {
public:
    VectorfindSearch(const MmpDiagram& d, const CandidatePool& pool,
                     std::chrono::duration<double> timeout)
        : d_(d), pool_(pool) {
        if (timeout.count() > 0) {
            deadline_ = Clock::now() +
                        std::chrono::duration_cast<Clock::duration>(timeout);
            has_deadline_ = true;
        }
    }

    VectorfindResult run() {
        n_ = d_.vertex_count();
        p_ = pool_.size();
        orth_.assign(p_ * p_, 0);
        for (std::size_t i = 0; i < p_; ++i) {
            for (std::size_t j = i; j < p_; ++j) {
                bool o = is_orthogonal(pool_[i], pool_[j]);
                orth_[i * p_ + j] = orth_[j * p_ + i] = o;
            }
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return d_.edges_of(d_.vertices()[a]).size() >
                   d_.edges_of(d_.vertices()[b]).size();
        });
        // co-edge neighbours already placed when a vertex is reached
        pos_in_order_.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) pos_in_order_[order_[i]] = i;
        earlier_neighbours_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            int p = order_[i];
            std::vector<int> nb;
            for (int e : d_.edges_of(d_.vertices()[p])) {
                for (int v : d_.edges()[e].vertices()) {
                    int q = d_.vertex_position(v);
                    if (q != p && pos_in_order_[q] < i) nb.push_back(q);
                }
            }
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            earlier_neighbours_[p] = std::move(nb);
        }
        choice_.assign(n_, -1);
        used_.assign(p_, false);
        VectorfindResult result;
        Status st = search(0, result);
        if (st == Status::Found) {
            result.outcome = VectorfindOutcome::Assigned;
            VectorAssignment va;
            for (std::size_t q = 0; q < n_; ++q) {
                va.rays.emplace_back(d_.vertices()[q], pool_[choice_[q]]);
            }
            result.assignment = std::move(va);
        } else if (st == Status::Timeout) {
            result.outcome = VectorfindOutcome::Indeterminate;
        } else {
            result.outcome = VectorfindOutcome::NoSolution;
        }
        return result;
    }

private:
    using Clock = std::chrono::steady_clock;
    enum class Status { Found, Exhausted, Timeout };

    Status search(std::size_t oi, VectorfindResult& result) {
        if (oi == n_) return Status::Found;
        if (has_deadline_ && (result.nodes & 63) == 0 &&
            Clock::now() > deadline_) {
            return Status::Timeout;
        }
        int p = order_[oi];
        for (std::size_t c = 0; c < p_; ++c) {
            if (used_[c]) continue;
            bool ok = true;
            for (int q : earlier_neighbours_[p]) {
                if (!orth_[c * p_ + choice_[q]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            ++result.nodes;
            choice_[p] = static_cast<int>(c);
            used_[c] = true;
            Status st = search(oi + 1, result);
            if (st == Status::Found) return st;  // keep choice_ for extraction
            used_[c] = false;
            choice_[p] = -1;
            if (st == Status::Timeout) return st;
        }
        return Status::Exhausted;
    }

    const MmpDiagram& d_;
    const CandidatePool& pool_;
    std::size_t n_ = 0, p_ = 0;
    std::vector<char> orth_;
    std::vector<int> order_;
    std::vector<std::size_t> pos_in_order_;
    std::vector<std::vector<int>> earlier_neighbours_;
    std::vector<int> choice_;
    std::vector<bool> used_;
    Clock::time_point deadline_;
    bool has_deadline_ = false;
};

}  // namespace

VectorfindResult vectorfind(const MmpDiagram& d, const CandidatePool& pool,
                            std::chrono::duration<double> timeout) {
    VectorfindResult result = VectorfindSearch(d, pool, timeout).run();
    if (result.outcome == VectorfindOutcome::Assigned &&
        !verify_assignment(d, *result.assignment)) {
        throw FieldError("vectorfind produced an invalid assignment");
    }
    return result;
}

}  // namespace ksforge
