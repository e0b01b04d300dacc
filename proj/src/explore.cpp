#include <algorithm>
#include <chrono>
#include <exception>

#include "polyidp/errors.hpp"
#include "polyidp/verify.hpp"

namespace polyidp {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

SplitMix64 SplitMix64::split(std::uint64_t stream) const {
    SplitMix64 g(state_ ^ (stream * 0xd1b54a32d192ed03ULL));
    return SplitMix64(g.next());
}

std::string to_string(ExploreFilter f) {
    switch (f) {
        case ExploreFilter::All: return "all";
        case ExploreFilter::TwoPMOnly: return "2pm-only";
        case ExploreFilter::SameSizeOnly: return "same-size-only";
    }
    return "?";
}

std::string to_string(ExploreMode m) {
    switch (m) {
        case ExploreMode::Mlp: return "mlp";
        case ExploreMode::Raw: return "raw";
        case ExploreMode::Both: return "both";
    }
    return "?";
}

ExploreFilter parse_filter(const std::string& s) {
    if (s == "all") return ExploreFilter::All;
    if (s == "2pm-only") return ExploreFilter::TwoPMOnly;
    if (s == "same-size-only") return ExploreFilter::SameSizeOnly;
    throw ParseError("unknown filter '" + s + "' (expected all, 2pm-only or same-size-only)");
}

ExploreMode parse_mode(const std::string& s) {
    if (s == "mlp") return ExploreMode::Mlp;
    if (s == "raw") return ExploreMode::Raw;
    if (s == "both") return ExploreMode::Both;
    throw ParseError("unknown mode '" + s + "' (expected mlp, raw or both)");
}

void ExploreConfig::validate() const {
    if (n < 1 || k < 1 || max_part < 1 || max_t < 1)
        throw PreconditionViolated("explore: n, k, max part and max dilation must all be positive");
    if (n > kMaxAmbient) throw OutOfEnvelope("explore: n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxAmbient));
    if (max_part > kMaxPart)
        throw OutOfEnvelope("explore: max part " + std::to_string(max_part) + " exceeds " + std::to_string(kMaxPart));
}

std::vector<std::vector<Partition>> explore_instances(const ExploreConfig& cfg) {
    cfg.validate();
    const auto pool = partitions_in_box(cfg.n, cfg.max_part);
    std::vector<std::vector<Partition>> out;
    if (cfg.samples == 0) {
        for (const auto& idx : multisubsets(pool.size(), cfg.k)) {
            std::vector<Partition> gens;
            for (std::size_t i : idx) gens.push_back(pool[i]);
            out.push_back(std::move(gens));
        }
        return out;
    }
    const SplitMix64 root(cfg.seed);
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        SplitMix64 g = root.split(s);
        std::vector<std::size_t> idx(cfg.k);
        for (auto& i : idx) i = static_cast<std::size_t>(g.below(pool.size()));
        std::sort(idx.begin(), idx.end());
        std::vector<Partition> gens;
        for (std::size_t i : idx) gens.push_back(pool[i]);
        out.push_back(std::move(gens));
    }
    return out;
}

namespace {

struct InstanceResult {
    bool selected = false;
    Json failures = Json::array();  // one entry per failing (mode, t)
    std::size_t snp_runs_mlp = 0;
    std::size_t snp_runs_raw = 0;
    std::string error;
};

InstanceResult run_instance(const ExploreConfig& cfg, const std::vector<Partition>& gens) {
    InstanceResult r;
    const auto poly = SymmetricPolytope::from_generators(gens, cfg.n);
    const int s0 = gens.front().size();
    const bool same_size = std::all_of(gens.begin(), gens.end(), [s0](const Partition& g) { return g.size() == s0; });
    if (cfg.filter == ExploreFilter::SameSizeOnly && !same_size) return r;

    const auto maximal = mlp(poly);
    if (cfg.filter == ExploreFilter::TwoPMOnly && maximal.size() != 2) return r;
    r.selected = true;

    const auto run = [&](const SchurSum& s, const char* mode, std::size_t& runs) {
        for (int t = 1; t <= cfg.max_t; ++t) {
            const Report rep = check_snp(s, t);
            ++runs;
            if (!rep.passed()) {
                Json f = Json::object();
                f["mode"] = mode;
                f["generators"] = partitions_to_json(gens, cfg.n);
                f["mlp"] = partitions_to_json(maximal, cfg.n);
                f["t"] = t;
                Json pts = Json::array();
                for (std::size_t i = 0; i < rep.counterexamples.size() && i < 8; ++i) pts.push_back(rep.counterexamples[i]);
                f["violations"] = pts;
                f["violation_count"] = rep.counterexamples.size();
                r.failures.push_back(std::move(f));
                if (cfg.stop_on_first) return;
            }
        }
    };
    if (cfg.mode != ExploreMode::Raw) run(SchurSum(maximal, cfg.n), "mlp", r.snp_runs_mlp);
    if (cfg.mode != ExploreMode::Mlp && !(cfg.stop_on_first && !r.failures.empty()))
        run(SchurSum(gens, cfg.n), "raw", r.snp_runs_raw);
    return r;
}

} // namespace

Report explore_conjecture(const ExploreConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const auto instances = explore_instances(cfg);

    Report rep;
    rep.kind = ReportKind::Explore;
    rep.instance = {{"n", cfg.n},
                    {"k", cfg.k},
                    {"max_part", cfg.max_part},
                    {"max_t", cfg.max_t},
                    {"filter", to_string(cfg.filter)},
                    {"mode", to_string(cfg.mode)},
                    {"seed", cfg.seed},
                    {"samples", cfg.samples},
                    {"stop_on_first", cfg.stop_on_first}};

    std::vector<InstanceResult> results(instances.size());
    // blocks keep stop-on-first deterministic: the first failing index wins
    const std::size_t block = cfg.stop_on_first ? 64 : instances.size();
    std::size_t done = 0;
    bool stopped = false;
    while (done < instances.size() && !stopped) {
        const std::size_t end = std::min(instances.size(), done + std::max<std::size_t>(block, 1));
        const long long lo = static_cast<long long>(done), hi = static_cast<long long>(end);
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = lo; i < hi; ++i) {
            try {
                results[i] = run_instance(cfg, instances[i]);
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
        for (std::size_t i = done; i < end; ++i) {
            if (!results[i].error.empty()) throw Error("explore: instance " + std::to_string(i) + ": " + results[i].error);
            if (cfg.stop_on_first && !results[i].failures.empty()) {
                stopped = true;
                done = i + 1;
                break;
            }
        }
        if (!stopped) done = end;
    }

    std::size_t selected = 0, runs_mlp = 0, runs_raw = 0, failing_mlp = 0, failing_raw = 0;
    for (std::size_t i = 0; i < done; ++i) {
        const auto& r = results[i];
        selected += r.selected;
        runs_mlp += r.snp_runs_mlp;
        runs_raw += r.snp_runs_raw;
        bool fm = false, fr = false;
        for (const auto& f : r.failures) {
            Json ce = f;
            ce["instance_index"] = i;
            (f["mode"] == "mlp" ? fm : fr) = true;
            rep.counterexamples.push_back(std::move(ce));
        }
        failing_mlp += fm;
        failing_raw += fr;
    }
    rep.stats["instances_enumerated"] = done;
    rep.stats["instances_selected"] = selected;
    if (cfg.mode != ExploreMode::Raw)
        rep.stats["mlp"] = {{"snp_checks", runs_mlp}, {"failing_instances", failing_mlp}};
    if (cfg.mode != ExploreMode::Mlp)
        rep.stats["raw"] = {{"snp_checks", runs_raw}, {"failing_instances", failing_raw}};
    rep.stats["stopped_early"] = stopped;
    rep.finalize();
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace polyidp
