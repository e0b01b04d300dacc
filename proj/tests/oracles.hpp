// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Vec = std::vector<int>;

inline Vec pad(Vec v, std::size_t n) {
    v.resize(std::max(v.size(), n), 0);
    return v;
}

inline long long total(const Vec& v) {
    long long s = 0;
    for (int x : v) s += x;
    return s;
}

/// a ⊴ b by prefix sums over zero-padded vectors (both assumed sorted, same size).
inline bool dominated(Vec a, Vec b) {
    const std::size_t n = std::max(a.size(), b.size());
    a = pad(a, n);
    b = pad(b, n);
    long long sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

/// All weakly decreasing vectors of exactly `len` entries summing to `size`
/// (zeros allowed), by filtering every vector in [0,size]^len.
inline std::vector<Vec> partitions_brute(int size, std::size_t len) {
    std::vector<Vec> out;
    Vec cur(len, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            if (total(cur) == size && std::is_sorted(cur.begin(), cur.end(), std::greater<>())) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= size; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Number of fillings of `shape` with letters 1..m and content alpha that are
/// semistandard: generate every filling with the right content, then test.
inline std::uint64_t kostka_brute(const Vec& shape, const Vec& alpha) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    if (total(alpha) != static_cast<long long>(cells.size())) return 0;
    std::vector<Vec> grid;
    for (int len : shape) grid.emplace_back(len, 0);
    Vec left = alpha;
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == cells.size()) {
            for (std::size_t r = 0; r < grid.size(); ++r)
                for (std::size_t c = 0; c < grid[r].size(); ++c) {
                    if (c > 0 && grid[r][c] < grid[r][c - 1]) return;
                    if (r > 0 && grid[r][c] <= grid[r - 1][c]) return;
                }
            ++count;
            return;
        }
        for (std::size_t v = 0; v < left.size(); ++v) {
            if (!left[v]) continue;
            --left[v];
            grid[cells[p].first][cells[p].second] = static_cast<int>(v) + 1;
            rec(p + 1);
            ++left[v];
        }
    };
    rec(0);
    return count;
}

/// Kostka number by peeling the largest letter: the cells holding letter m
/// form a horizontal strip λ/ν of size α_m, so K(λ, α) = Σ_ν K(ν, α without α_m).
inline std::uint64_t kostka_strips(Vec shape, Vec alpha) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (alpha.empty()) return shape.empty() ? 1 : 0;
    const int last = alpha.back();
    alpha.pop_back();
    if (shape.size() > alpha.size() + 1) return 0;
    std::uint64_t total_count = 0;
    // choose ν with λ_{i+1} <= ν_i <= λ_i and |λ| - |ν| = last
    Vec nu(shape.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int removed) {
        if (i == shape.size()) {
            if (removed == last) total_count += kostka_strips(nu, alpha);
            return;
        }
        const int lower = i + 1 < shape.size() ? shape[i + 1] : 0;
        for (int v = shape[i]; v >= lower; --v) {
            const int r = removed + (shape[i] - v);
            if (r > last) break;
            nu[i] = v;
            rec(i + 1, r);
        }
    };
    rec(0, 0);
    return total_count;
}

/// Every SSYT of `shape` with entries in 1..m, as row lists.
inline std::vector<std::vector<Vec>> all_ssyt(const Vec& shape, int m) {
    std::vector<std::vector<Vec>> out;
    std::vector<Vec> grid;
    for (int len : shape) grid.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == cells.size()) {
            out.push_back(grid);
            return;
        }
        const auto [r, c] = cells[p];
        for (int v = 1; v <= m; ++v) {
            if (c > 0 && v < grid[r][c - 1]) continue;
            if (r > 0 && v <= grid[r - 1][c]) continue;
            grid[r][c] = v;
            rec(p + 1);
        }
        grid[r][c] = 0;
    };
    rec(0);
    return out;
}

/// 3x3 determinant by the Leibniz permutation sum.
inline mpq_class det3(const std::vector<std::vector<mpq_class>>& m) {
    int perm[3] = {0, 1, 2};
    mpq_class d = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) inversions += perm[i] > perm[j];
        mpq_class term = inversions % 2 ? -1 : 1;
        for (int i = 0; i < 3; ++i) term *= m[i][perm[i]];
        d += term;
    } while (std::next_permutation(perm, perm + 3));
    return d;
}

/// Cramer's rule for a 3x3 system.
inline std::vector<mpq_class> cramer3(const std::vector<std::vector<mpq_class>>& m, const std::vector<mpq_class>& b) {
    const mpq_class d = det3(m);
    std::vector<mpq_class> x(3);
    for (int j = 0; j < 3; ++j) {
        auto mj = m;
        for (int i = 0; i < 3; ++i) mj[i][j] = b[i];
        x[j] = det3(mj) / d;
    }
    return x;
}

/// Lattice points of a 2D segment/triangle etc. are not needed; instead this
/// checks convex-combination membership in the plane for three points by
/// solving the 3x3 barycentric system with Cramer's rule (points must be
/// affinely independent in the plane x+y+z = const).
inline bool in_triangle(const Vec& p, const Vec& a, const Vec& b, const Vec& c) {
    // use coordinates (x, z, 1) since all points share the coordinate sum
    std::vector<std::vector<mpq_class>> m = {{a[0], b[0], c[0]}, {a[2], b[2], c[2]}, {1, 1, 1}};
    if (det3(m) == 0) return false;
    auto w = cramer3(m, {p[0], p[2], 1});
    return std::all_of(w.begin(), w.end(), [](const mpq_class& q) { return q >= 0; });
}

/// Membership in t·conv(vertices) for 3-coordinate vertices sharing one
/// coordinate sum: planar convex hull (monotone chain) on the first two
/// coordinates, then exact cross-product tests.
class PlanarHull {
public:
    using P2 = std::pair<long long, long long>;

    PlanarHull(const std::vector<Vec>& verts, int t) {
        sum_ = t * total(verts.front());
        std::vector<P2> pts;
        for (const auto& v : verts) pts.emplace_back(1LL * t * v[0], 1LL * t * v[1]);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3) {
            hull_ = pts;
            return;
        }
        std::vector<P2> h(2 * pts.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
            h[k++] = pts[i];
        }
        for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
            while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
            h[k++] = pts[i];
        }
        h.resize(k - 1);
        hull_ = h;
    }

    bool contains(const Vec& x) const {
        if (total(x) != sum_) return false;
        const P2 p{x[0], x[1]};
        if (hull_.size() == 1) return p == hull_[0];
        if (hull_.size() == 2) {
            const auto& [a, b] = std::pair{hull_[0], hull_[1]};
            return cross(a, b, p) == 0 && std::min(a, b) <= p && p <= std::max(a, b);
        }
        // two collinear-only hulls collapse to their endpoints above; here it is a proper polygon
        for (std::size_t i = 0; i < hull_.size(); ++i)
            if (cross(hull_[i], hull_[(i + 1) % hull_.size()], p) < 0) return false;
        return true;
    }

    const std::vector<P2>& hull() const { return hull_; }

private:
    static long long cross(const P2& o, const P2& a, const P2& b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    }

    long long sum_ = 0;
    std::vector<P2> hull_;
};

/// All distinct permutations of v.
inline std::vector<Vec> perms(Vec v) {
    std::sort(v.begin(), v.end());
    std::vector<Vec> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace oracle
