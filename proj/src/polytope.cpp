#include "polyidp/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polyidp/errors.hpp"

namespace polyidp {

SymmetricPolytope SymmetricPolytope::from_generators(std::vector<Partition> gens, std::size_t n) {
    if (gens.empty()) throw EmptyInput("polytope needs at least one generator");
    SymmetricPolytope p;
    p.ambient_ = n;
    std::set<LatticePoint> verts;
    for (const auto& g : gens) {
        auto orb = orbit(g.padded(n));
        verts.insert(orb.begin(), orb.end());
    }
    p.vertices_.assign(verts.begin(), verts.end());
    const int s0 = gens.front().size();
    if (std::all_of(gens.begin(), gens.end(), [s0](const Partition& g) { return g.size() == s0; }))
        p.uniform_size_ = s0;
    p.generators_ = std::move(gens);

    int lo = p.vertices_.front()[0], hi = lo;
    for (const auto& v : p.vertices_)
        for (int c : v.coords) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
    if (n == 0) lo = hi = 0;
    p.range_ = {lo, hi};

    p.system_ = IntMatrix(n + 1, p.vertices_.size());
    for (std::size_t j = 0; j < p.vertices_.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) p.system_.at(i, j) = p.vertices_[j][i];
        p.system_.at(n, j) = 1;
    }
    return p;
}

std::vector<long long> SymmetricPolytope::rhs(const LatticePoint& x, int t) const {
    std::vector<long long> b(x.coords.begin(), x.coords.end());
    b.push_back(t);
    return b;
}

bool SymmetricPolytope::quick_reject(const LatticePoint& x, int t) const {
    if (x.dim() != ambient_) return true;
    for (int c : x.coords)
        if (c < t * range_.first || c > t * range_.second) return true;
    if (uniform_size_ && x.sum() != static_cast<long long>(t) * *uniform_size_) return true;
    return false;
}

bool SymmetricPolytope::contains(const LatticePoint& x, int t) const {
    if (t < 1 || quick_reject(x, t)) return false;
    const auto b = rhs(x, t);
    return has_nonnegative_solution(system_, b);
}

std::optional<Certificate> SymmetricPolytope::certify(const LatticePoint& x, int t) const {
    if (t < 1 || quick_reject(x, t)) return std::nullopt;
    const auto b = rhs(x, t);
    auto sol = find_nonnegative_solution(system_, b);
    if (!sol) return std::nullopt;
    Certificate c;
    for (std::size_t j = 0; j < sol->size(); ++j)
        if (sgn((*sol)[j]) != 0) c.terms.emplace_back(vertices_[j], (*sol)[j]);
    return c;
}

bool certificate_valid(const Certificate& c, const LatticePoint& x, int t) {
    mpq_class total = 0;
    std::vector<mpq_class> acc(x.dim(), mpq_class(0));
    for (const auto& [v, w] : c.terms) {
        if (sgn(w) < 0 || v.dim() != x.dim()) return false;
        total += w;
        for (std::size_t i = 0; i < x.dim(); ++i) acc[i] += w * v[i];
    }
    if (total != t) return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (acc[i] != x[i]) return false;
    return true;
}

namespace {

// Weakly decreasing vectors in [lo, hi]^n, optionally with a fixed sum.
void decreasing_candidates(std::size_t n, int lo, int hi, std::optional<long long> sum,
                           std::vector<LatticePoint>& out) {
    std::vector<int> cur(n, 0);
    const auto rec = [&](auto&& self, std::size_t i, int cap, long long acc) -> void {
        if (i == n) {
            if (!sum || acc == *sum) out.emplace_back(cur);
            return;
        }
        const long long left = static_cast<long long>(n - i);
        for (int v = cap; v >= lo; --v) {
            if (sum) {
                // remaining coordinates lie in [lo, v]
                if (acc + v + (left - 1) * static_cast<long long>(v) < *sum) break;
                if (acc + v + (left - 1) * static_cast<long long>(lo) > *sum) continue;
            }
            cur[i] = v;
            self(self, i + 1, v, acc + v);
        }
    };
    rec(rec, 0, hi, 0);
}

// Weakly decreasing x lies in tP iff some c >= 0 with sum t has x dominated
// by sum c_i g_i. Rows: weight total, size, then prefix sums less a slack.
bool contains_sorted(const std::vector<std::vector<int>>& gens, std::size_t n, const LatticePoint& x, int t) {
    const std::size_t k = gens.size();
    IntMatrix a(n + 1, k + (n ? n - 1 : 0));
    std::vector<long long> b(n + 1, 0);
    b[0] = t;
    for (std::size_t j = 0; j < k; ++j) {
        a.at(0, j) = 1;
        long long acc = 0;
        for (std::size_t r = 0; r < n; ++r) {
            acc += gens[j][r];
            if (r + 1 == n) a.at(1, j) = acc;
            else a.at(r + 2, j) = acc;
        }
    }
    long long acc = 0;
    for (std::size_t r = 0; r < n; ++r) {
        acc += x[r];
        if (r + 1 == n) {
            b[1] = acc;
        } else {
            b[r + 2] = acc;
            a.at(r + 2, k + r) = -1;
        }
    }
    if (n == 0) b.resize(1);
    return has_nonnegative_solution(a, b);
}

} // namespace

std::vector<LatticePoint> lattice_points(const SymmetricPolytope& p, int t) {
    const std::size_t n = p.ambient();
    const auto [lo, hi] = p.coordinate_range();
    std::optional<long long> sum;
    if (p.uniform_size()) sum = static_cast<long long>(t) * *p.uniform_size();

    std::vector<LatticePoint> cands;
    decreasing_candidates(n, t * lo, t * hi, sum, cands);

    std::vector<char> inside(cands.size(), 0);
    const long long count = static_cast<long long>(cands.size());
    std::vector<std::vector<int>> gens;
    for (const auto& g : p.generators()) gens.push_back(g.padded(n).coords);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) inside[i] = contains_sorted(gens, n, cands[i], t) ? 1 : 0;

    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!inside[i]) continue;
        auto orb = orbit(cands[i]);
        out.insert(out.end(), orb.begin(), orb.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> lattice_points_reference(const SymmetricPolytope& p, int t) {
    const std::size_t n = p.ambient();
    const auto [lo, hi] = p.coordinate_range();
    std::vector<LatticePoint> out;
    if (n == 0) return out;
    // free coordinates run over the box; with a uniform size the last one is determined
    const bool fixed_sum = p.uniform_size().has_value();
    const std::size_t free = fixed_sum ? n - 1 : n;
    std::vector<int> cur(n, t * lo);
    for (;;) {
        bool keep = true;
        if (fixed_sum) {
            long long s = static_cast<long long>(t) * *p.uniform_size();
            for (std::size_t i = 0; i < free; ++i) s -= cur[i];
            if (s < t * lo || s > t * hi) keep = false;
            else cur[n - 1] = static_cast<int>(s);
        }
        if (keep) {
            LatticePoint x(cur);
            if (p.contains(x, t)) out.push_back(std::move(x));
        }
        std::size_t i = 0;
        while (i < free && cur[i] == t * hi) cur[i++] = t * lo;
        if (i == free) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> mlp(const SymmetricPolytope& p) {
    std::vector<Partition> parts;
    for (const auto& x : lattice_points(p, 1))
        if (x.is_weakly_decreasing()) parts.emplace_back(x.coords);
    return antichain_max(parts);
}

bool is_2pm(const SymmetricPolytope& p) { return mlp(p).size() == 2; }

Region3D region_3d(const Partition& lam_in, const Partition& mu_in) {
    if (lam_in.length() > 3 || mu_in.length() > 3)
        throw PreconditionViolated("region_3d: partitions must have at most 3 parts");
    if (lam_in.size() != mu_in.size())
        throw PreconditionViolated("region_3d: partitions must have equal sizes");
    if (compare_dominance(lam_in, mu_in) != Dominance::Incomparable)
        throw PreconditionViolated("region_3d: partitions must be incomparable");
    Region3D r;
    r.lam = lam_in[0] > mu_in[0] ? lam_in : mu_in;
    r.mu = lam_in[0] > mu_in[0] ? mu_in : lam_in;
    const auto& l = r.lam;
    const auto& m = r.mu;
    r.size = l.size();
    r.iota = LatticePoint{m[0], r.size - m[0] - l[2], l[2]};
    r.slope_x = l[2] - m[2];
    r.slope_z = l[0] - m[0];
    r.bound = static_cast<long long>(m[0]) * l[2] - static_cast<long long>(m[2]) * l[0];
    return r;
}

std::vector<long long> Region3D::slacks(const LatticePoint& p, int t) const {
    const long long x = p[0], z = p[2];
    return {t * bound - (slope_x * x - slope_z * z), x - static_cast<long long>(t) * mu[0],
            static_cast<long long>(t) * lam[2] - z};
}

bool Region3D::contains(const LatticePoint& p, int t) const {
    if (p.dim() != 3 || p.sum() != static_cast<long long>(t) * size) return false;
    const auto s = slacks(p, t);
    return std::all_of(s.begin(), s.end(), [](long long v) { return v >= 0; });
}

bool Region3D::contains_interior(const LatticePoint& p, int t) const {
    if (p.dim() != 3 || p.sum() != static_cast<long long>(t) * size) return false;
    const auto s = slacks(p, t);
    return std::all_of(s.begin(), s.end(), [](long long v) { return v > 0; });
}

} // namespace polyidp
