#include <algorithm>
#include <chrono>
#include <exception>
#include <set>
#include <stdexcept>

#include "polyidp/errors.hpp"
#include "polyidp/tableau.hpp"
#include "polyidp/verify.hpp"

namespace polyidp {

namespace {

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Partition> dedup(std::vector<Partition> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

void check_envelope(std::size_t n, const std::vector<Partition>& gens) {
    if (n > kMaxAmbient)
        throw OutOfEnvelope("ambient dimension " + std::to_string(n) + " exceeds the supported maximum " +
                            std::to_string(kMaxAmbient));
    for (const auto& g : gens)
        if (g.length() && g[0] > kMaxPart)
            throw OutOfEnvelope("part " + std::to_string(g[0]) + " of " + to_string(g) +
                                " exceeds the supported maximum " + std::to_string(kMaxPart));
}

Report check_snp(const SchurSum& s, int t, bool certificates) {
    if (t < 1) throw PreconditionViolated("check_snp: t must be positive");
    check_envelope(s.ambient, s.generators);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = s.ambient;

    Report rep;
    rep.kind = ReportKind::SNP;
    rep.instance = to_json(s);
    rep.instance["t"] = t;

    const auto p = SymmetricPolytope::from_generators(s.generators, n);
    const auto summands = dedup(ts_summands(s, static_cast<std::size_t>(t)));
    const auto newt = SymmetricPolytope::from_generators(summands, n);

    // Newt(ts) ⊆ tP and tP ⊆ Newt(ts), vertex by vertex
    for (const auto& v : newt.vertices())
        if (!p.contains(v, t)) rep.counterexamples.push_back({{"type", "hull"}, {"vertex_of_newt_ts_outside_tP", to_json(v)}});
    for (const auto& v : p.vertices()) {
        const LatticePoint tv = t * v;
        if (!newt.contains(tv, 1))
            rep.counterexamples.push_back({{"type", "hull"}, {"vertex_of_tP_outside_newt_ts", to_json(tv)}});
    }

    const auto pts = lattice_points(p, t);
    const auto newt_pts = lattice_points(newt, 1);
    if (pts != newt_pts) {
        std::vector<LatticePoint> diff;
        std::set_symmetric_difference(pts.begin(), pts.end(), newt_pts.begin(), newt_pts.end(), std::back_inserter(diff));
        for (const auto& d : diff) rep.counterexamples.push_back({{"type", "lattice-mismatch"}, {"point", to_json(d)}});
    }

    // saturation: index of the first summand whose support holds the point
    std::vector<long long> hit(pts.size(), -1);
    const long long np = static_cast<long long>(pts.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < summands.size(); ++j) {
            if (in_schur_support(pts[i], summands[j])) {
                hit[i] = static_cast<long long>(j);
                break;
            }
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (hit[i] < 0) {
            rep.counterexamples.push_back({{"type", "unsaturated"}, {"point", to_json(pts[i])}});
        } else if (certificates) {
            rep.witnesses.push_back({{"point", to_json(pts[i])}, {"summand", to_json(summands[hit[i]], n)}});
        }
    }

    rep.stats["points"] = pts.size();
    rep.stats["summands"] = summands.size();
    rep.stats["newt_vertices"] = newt.vertices().size();
    rep.finalize();
    rep.millis = elapsed_ms(start);
    return rep;
}

std::optional<std::vector<LatticePoint>> decompose_point(const SchurSum& s, int t, const LatticePoint& x) {
    if (t < 1) throw PreconditionViolated("decompose_point: t must be positive");
    for (const auto& idx : multisubsets(s.generators.size(), static_cast<std::size_t>(t))) {
        std::vector<Partition> shapes;
        shapes.reserve(idx.size());
        for (std::size_t i : idx) shapes.push_back(s.generators[i]);
        const Partition total = partition_sum(shapes);
        if (!in_schur_support(x, total)) continue;
        auto tab = ssyt_witness(total, x);
        if (!tab) throw std::logic_error("decompose_point: dominance holds but no tableau of shape " +
                                         to_string(total) + " has content " + to_string(x));
        std::vector<LatticePoint> pieces;
        for (const auto& piece : decompose_tableau(*tab, shapes)) pieces.push_back(content(piece, x.dim()));
        return pieces;
    }
    return std::nullopt;
}

SumsetOracle::SumsetOracle(const SymmetricPolytope& p, int t) : t_(t), base_(lattice_points(p, 1)) {
    if (t < 1) throw PreconditionViolated("SumsetOracle: t must be positive");
    const auto [lo, hi] = p.coordinate_range();
    layers_.resize(t);
    for (const auto& b : base_) layers_[0].emplace(b, b);
    for (int j = 2; j <= t; ++j) {
        auto& layer = layers_[j - 1];
        for (const auto& [q, _] : layers_[j - 2]) {
            for (const auto& b : base_) {
                LatticePoint r = q + b;
                const bool in_box = std::all_of(r.coords.begin(), r.coords.end(),
                                                [&](int c) { return c >= j * lo && c <= j * hi; });
                if (in_box) layer.try_emplace(std::move(r), b);
            }
        }
    }
}

bool SumsetOracle::decomposable(const LatticePoint& x) const { return layers_.back().count(x) > 0; }

std::optional<std::vector<LatticePoint>> SumsetOracle::decomposition(const LatticePoint& x) const {
    if (!decomposable(x)) return std::nullopt;
    std::vector<LatticePoint> out;
    LatticePoint cur = x;
    for (int j = t_; j >= 1; --j) {
        const LatticePoint& b = layers_[j - 1].at(cur);
        out.push_back(b);
        for (std::size_t i = 0; i < cur.dim(); ++i) cur[i] -= b[i];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

bool decomposition_valid(const std::vector<LatticePoint>& pieces, const LatticePoint& x,
                         const std::vector<LatticePoint>& sorted_base, int t) {
    if (pieces.size() != static_cast<std::size_t>(t)) return false;
    LatticePoint acc(std::vector<int>(x.dim(), 0));
    for (const auto& q : pieces) {
        if (q.dim() != x.dim() || !std::binary_search(sorted_base.begin(), sorted_base.end(), q)) return false;
        acc += q;
    }
    return acc == x;
}

IdpAnalysis analyze_idp(const SymmetricPolytope& p, int t) {
    if (t < 1) throw PreconditionViolated("check_idp: t must be positive");
    check_envelope(p.ambient(), p.generators());
    IdpAnalysis out;
    const SumsetOracle oracle(p, t);
    out.base = oracle.base();
    out.schur = SchurSum(mlp(p), p.ambient());
    const auto pts = lattice_points(p, t);
    out.points.resize(pts.size());
    const long long np = static_cast<long long>(pts.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < np; ++i) {
        try {
            IdpPoint& ip = out.points[i];
            ip.point = pts[i];
            ip.certificate = decompose_point(out.schur, t, pts[i]);
            ip.certificate_valid = ip.certificate && decomposition_valid(*ip.certificate, pts[i], out.base, t);
            ip.sumset = oracle.decomposition(pts[i]);
        } catch (...) {
#pragma omp critical(polyidp_idp_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

Report check_idp(const SymmetricPolytope& p, int t, bool certificates) {
    const auto start = std::chrono::steady_clock::now();
    const auto analysis = analyze_idp(p, t);
    const std::size_t n = p.ambient();

    Report rep;
    rep.kind = ReportKind::IDP;
    rep.instance["n"] = n;
    rep.instance["generators"] = partitions_to_json(p.generators(), n);
    rep.instance["t"] = t;

    std::size_t cert_ok = 0, cert_absent = 0, cert_invalid = 0, dp_ok = 0, disagree = 0;
    for (const auto& ip : analysis.points) {
        const bool has_cert = ip.certificate.has_value();
        cert_absent += !has_cert;
        cert_invalid += has_cert && !ip.certificate_valid;
        cert_ok += ip.certificate_valid;
        dp_ok += ip.sumset.has_value();
        if (ip.certificate_valid != ip.sumset.has_value()) ++disagree;

        if (has_cert && !ip.certificate_valid) {
            rep.counterexamples.push_back(
                {{"type", "invalid-certificate"}, {"point", to_json(ip.point)}, {"pieces", points_to_json(*ip.certificate)}});
        }
        if (!ip.sumset) {
            rep.counterexamples.push_back({{"type", "indecomposable"}, {"point", to_json(ip.point)}});
        } else if (certificates) {
            Json w = {{"point", to_json(ip.point)}};
            w["pieces"] = points_to_json(ip.certificate_valid ? *ip.certificate : *ip.sumset);
            w["route"] = ip.certificate_valid ? "tableau" : "sumset";
            rep.witnesses.push_back(std::move(w));
        }
    }
    rep.stats["points"] = analysis.points.size();
    rep.stats["base_points"] = analysis.base.size();
    rep.stats["mlp"] = partitions_to_json(analysis.schur.generators, n);
    rep.stats["tableau_route"] = cert_ok;
    rep.stats["tableau_absent"] = cert_absent;
    rep.stats["tableau_invalid"] = cert_invalid;
    rep.stats["sumset_route"] = dp_ok;
    rep.stats["route_disagreements"] = disagree;
    rep.finalize();
    rep.millis = elapsed_ms(start);
    return rep;
}

} // namespace polyidp
