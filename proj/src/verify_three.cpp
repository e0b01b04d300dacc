// Checks specific to incomparable pairs of partitions with at most three parts.
#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "polyidp/errors.hpp"
#include "polyidp/simplex.hpp"
#include "polyidp/verify.hpp"

namespace polyidp {

namespace {

void require_pair(const Partition& lam, const Partition& mu, const char* op, bool incomparable) {
    const std::string where = std::string(op) + ": ";
    if (lam.length() > 3 || mu.length() > 3) throw PreconditionViolated(where + "partitions must have at most 3 parts");
    if (lam.size() != mu.size()) throw PreconditionViolated(where + "partitions must have equal sizes");
    if (incomparable && compare_dominance(lam, mu) != Dominance::Incomparable)
        throw PreconditionViolated(where + "partitions must be incomparable");
}

Json pair_instance(const Partition& lam, const Partition& mu) {
    Json j = Json::object();
    j["lambda"] = to_json(lam, 3);
    j["mu"] = to_json(mu, 3);
    return j;
}

Json rationals_to_json(const std::vector<mpq_class>& v) {
    Json j = Json::array();
    for (const auto& q : v) j.push_back(q.get_str());
    return j;
}

LatticePoint gamma_point(const Partition& lam, const Partition& mu) {
    const int n = lam.size();
    return LatticePoint{mu[0] + 1, n - mu[0] - lam[2], lam[2] - 1};
}

Partition combination(const Partition& lam, const Partition& mu, int t, int k) {
    std::vector<Partition> parts{scale(lam, t - k), scale(mu, k)};
    return partition_sum(parts);
}

} // namespace

Report lemma41_check(const Partition& lam_in, const Partition& mu_in) {
    require_pair(lam_in, mu_in, "lemma41_check", true);
    const bool swap = lam_in[0] < mu_in[0];
    const Partition& lam = swap ? mu_in : lam_in;
    const Partition& mu = swap ? lam_in : mu_in;

    Report rep;
    rep.kind = ReportKind::Lemma41;
    rep.instance = pair_instance(lam, mu);

    std::vector<int> diffs(3);
    for (int i = 0; i < 3; ++i) diffs[i] = std::abs(lam[i] - mu[i]);
    rep.stats["differences"] = diffs;
    const int min_diff = *std::min_element(diffs.begin(), diffs.end());

    if (min_diff == 0) {
        // equal coordinates force comparability, so this would contradict the precondition
        rep.counterexamples.push_back({{"type", "zero-difference"}, {"differences", diffs}});
        rep.finalize();
        return rep;
    }
    if (min_diff == 1) {
        Json at = Json::array();
        for (int i = 0; i < 3; ++i)
            if (diffs[i] == 1) at.push_back(i + 1);
        rep.witnesses.push_back({{"difference_one_at", at}});
        rep.stats["outcome"] = "difference-one";
        rep.finalize();
        return rep;
    }

    // every gap is at least 2: γ is a third maximal lattice partition
    const LatticePoint gamma = gamma_point(lam, mu);
    const Region3D region = region_3d(lam, mu);
    Json checks = Json::object();
    const bool is_partition = gamma.is_weakly_decreasing() && gamma[2] >= 0;
    checks["gamma_is_partition"] = is_partition;

    bool antichain = false;
    if (is_partition) {
        const Partition g(gamma.coords);
        antichain = compare_dominance(g, lam) == Dominance::Incomparable &&
                    compare_dominance(g, mu) == Dominance::Incomparable;
    }
    checks["antichain"] = antichain;

    IntMatrix tri(4, 3);
    const LatticePoint cols[3] = {lam.padded(3), mu.padded(3), region.iota};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) tri.at(i, j) = cols[j][i];
        tri.at(3, j) = 1;
    }
    const std::vector<long long> rhs{gamma[0], gamma[1], gamma[2], 1};
    const auto coeffs = gamma[2] >= 0 ? find_nonnegative_solution(tri, rhs) : std::nullopt;
    checks["gamma_in_triangle"] = coeffs.has_value();

    const auto poly = SymmetricPolytope::from_generators({lam, mu}, 3);
    const bool in_p = gamma[2] >= 0 && poly.contains(gamma);
    checks["gamma_in_polytope"] = in_p;
    const auto maximal = mlp(poly);
    checks["mlp_size"] = maximal.size();

    const bool valid = is_partition && antichain && coeffs && in_p && maximal.size() >= 3;
    Json ce = {{"type", valid ? "not-2pm" : "gamma-witness-invalid"}, {"gamma", to_json(gamma)}};
    if (coeffs) ce["coefficients"] = rationals_to_json(*coeffs);
    ce["iota"] = to_json(region.iota);
    ce["checks"] = checks;
    rep.counterexamples.push_back(std::move(ce));
    rep.stats["outcome"] = valid ? "not-2pm" : "gamma-witness-invalid";
    rep.finalize();
    return rep;
}

std::vector<mpq_class> gaussian_solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) throw SingularMatrix("gaussian_solve: matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            const mpq_class f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

MatrixIdentities compute_matrix_identities(const Partition& lam, const Partition& mu) {
    require_pair(lam, mu, "matrix_identities", false);
    if (lam[0] == mu[0] || lam[2] == mu[2])
        throw SingularMatrix("matrix_identities: determinant n(λ₃−μ₃)(λ₁−μ₁) vanishes");
    const long long n = lam.size();
    const long long a = lam[0], b = lam[1], c = lam[2], d = mu[0], e = mu[1], f = mu[2];
    // columns λ, μ, ι
    const long long m[3][3] = {{a, d, d}, {b, e, n - d - c}, {c, f, c}};

    MatrixIdentities out;
    out.det_expansion = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    out.det_formula = n * (c - f) * (a - d);

    std::vector<std::vector<mpq_class>> mat(3, std::vector<mpq_class>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mat[i][j] = mpq_class(static_cast<long>(m[i][j]));
    const LatticePoint g = gamma_point(lam, mu);
    out.solved = gaussian_solve(mat, {mpq_class(g[0]), mpq_class(g[1]), mpq_class(g[2])});

    const mpq_class d1(static_cast<long>(a - d)), d2(static_cast<long>(b - e)), d3(static_cast<long>(c - f));
    out.closed_form = {1 / d1, 1 / d3, 1 + d2 / (d1 * d3)};
    for (auto& q : out.closed_form) q.canonicalize();
    out.sums_to_one = (out.solved[0] + out.solved[1] + out.solved[2]) == 1;
    return out;
}

Report matrix_identities(const Partition& lam, const Partition& mu) {
    const auto r = compute_matrix_identities(lam, mu);
    Report rep;
    rep.kind = ReportKind::Matrix;
    rep.instance = pair_instance(lam, mu);
    rep.witnesses.push_back({{"det_expansion", r.det_expansion},
                             {"det_formula", r.det_formula},
                             {"solution", rationals_to_json(r.solved)},
                             {"closed_form", rationals_to_json(r.closed_form)},
                             {"sums_to_one", r.sums_to_one}});
    if (r.det_expansion != r.det_formula)
        rep.counterexamples.push_back({{"type", "determinant"}});
    if (r.solved != r.closed_form) rep.counterexamples.push_back({{"type", "inverse-times-gamma"}});
    if (!r.sums_to_one) rep.counterexamples.push_back({{"type", "sum-not-one"}});
    rep.finalize();
    return rep;
}

Thm43Witness thm43_witness(const Partition& lam, const Partition& mu, int t, const LatticePoint& x) {
    require_pair(lam, mu, "thm43_witness", true);
    if (t < 1) throw PreconditionViolated("thm43_witness: t must be positive");
    if (x.dim() != 3 || x.sum() != static_cast<long long>(t) * lam.size())
        throw PreconditionViolated("thm43_witness: point must have 3 coordinates summing to t·|λ|");

    const Partition sx = Partition::from_point(x);
    Thm43Witness w;
    for (int k = 0; k <= t; ++k) {
        if (dominated_by(sx, combination(lam, mu, t, k))) {
            w.k = k;
            break;
        }
    }

    const bool flip = mu[2] - lam[2] == 1;
    if (lam[2] - mu[2] == 1 || flip) {
        const Partition& big = flip ? mu : lam;
        const Partition& small = flip ? lam : mu;
        const Region3D region = region_3d(big, small);
        const LatticePoint sorted_x = sx.padded(3);
        if (region.lam == big && region.contains(sorted_x, t)) {
            const int kk = t * big[2] - sorted_x[2];
            w.closed_form_k = flip ? t - kk : kk;
            w.closed_form_ok = kk >= 0 && kk <= t && dominated_by(sx, combination(big, small, t, kk));
        }
    }
    return w;
}

Report check_thm43(const Partition& lam, const Partition& mu, int t) {
    require_pair(lam, mu, "check_thm43", true);
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.kind = ReportKind::Thm43;
    rep.instance = pair_instance(lam, mu);
    rep.instance["t"] = t;
    const auto p = SymmetricPolytope::from_generators({lam, mu}, 3);
    std::size_t checked = 0, closed = 0;
    for (const auto& x : lattice_points(p, t)) {
        if (!x.is_weakly_decreasing()) continue;
        ++checked;
        const auto w = thm43_witness(lam, mu, t, x);
        if (w.closed_form_k) ++closed;
        if (!w.k) rep.counterexamples.push_back({{"type", "no-witness"}, {"point", to_json(x)}});
        if (!w.closed_form_ok)
            rep.counterexamples.push_back({{"type", "closed-form-failed"}, {"point", to_json(x)}, {"k", *w.closed_form_k}});
    }
    rep.stats["decreasing_points"] = checked;
    rep.stats["closed_form_checked"] = closed;
    rep.finalize();
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace polyidp
