#include "polyidp/schur.hpp"

#include <algorithm>
#include <set>

#include "polyidp/errors.hpp"

namespace polyidp {

SchurSum::SchurSum(std::vector<Partition> gens, std::size_t n) : generators(std::move(gens)), ambient(n) {
    if (generators.empty()) throw EmptyInput("SchurSum needs at least one generator");
    for (const auto& g : generators)
        if (g.length() > ambient) throw LengthExceedsAmbient(to_string(g) + " does not fit in " + std::to_string(n) + " variables");
}

bool in_schur_support(const LatticePoint& alpha, const Partition& lam) {
    if (alpha.sum() != lam.size()) return false;
    const Partition sorted = Partition::from_point(alpha);
    return dominated_by(sorted, lam);
}

std::vector<LatticePoint> schur_support(const Partition& lam, std::size_t n) {
    if (lam.length() > n)
        throw LengthExceedsAmbient(to_string(lam) + " does not fit in " + std::to_string(n) + " variables");
    std::vector<LatticePoint> out;
    for (const auto& nu : enumerate_dominated(lam, n)) {
        auto orb = orbit(nu.padded(n));
        out.insert(out.end(), orb.begin(), orb.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> multisubsets(std::size_t k, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    if (k == 0) return out;
    std::vector<std::size_t> cur(t, 0);
    for (;;) {
        out.push_back(cur);
        // advance the rightmost index that can still grow
        std::size_t i = t;
        while (i > 0 && cur[i - 1] == k - 1) --i;
        if (i == 0) break;
        const std::size_t v = cur[i - 1] + 1;
        for (std::size_t j = i - 1; j < t; ++j) cur[j] = v;
    }
    return out;
}

std::vector<Partition> ts_summands(const SchurSum& s, std::size_t t) {
    std::vector<Partition> out;
    for (const auto& idx : multisubsets(s.generators.size(), t)) {
        std::vector<Partition> parts;
        parts.reserve(idx.size());
        for (std::size_t i : idx) parts.push_back(s.generators[i]);
        out.push_back(partition_sum(parts));
    }
    return out;
}

std::vector<LatticePoint> ts_support(const SchurSum& s, std::size_t t) {
    auto summands = ts_summands(s, t);
    std::sort(summands.begin(), summands.end());
    summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
    std::set<LatticePoint> acc;
    for (const auto& lam : summands) {
        auto sup = schur_support(lam, s.ambient);
        acc.insert(sup.begin(), sup.end());
    }
    return {acc.begin(), acc.end()};
}

bool in_ts_support(const LatticePoint& alpha, const SchurSum& s, std::size_t t) {
    for (const auto& lam : ts_summands(s, t))
        if (in_schur_support(alpha, lam)) return true;
    return false;
}

} // namespace polyidp
