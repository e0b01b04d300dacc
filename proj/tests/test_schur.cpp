#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "polyidp/errors.hpp"
#include "polyidp/schur.hpp"
#include "polyidp/tableau.hpp"

using namespace polyidp;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<LatticePoint> all_points(int size, std::size_t n) {
    std::vector<LatticePoint> out;
    std::vector<int> cur(n, 0);
    const auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, size);
    return out;
}

} // namespace

TEST_CASE("in_schur_support examples") {
    CHECK(in_schur_support({1, 2, 0}, {2, 1, 0}));
    CHECK_FALSE(in_schur_support({8, 5, 1}, {10, 2, 2}));
    CHECK(in_schur_support({0, 0, 0}, {}));
    CHECK_FALSE(in_schur_support({1, 1}, {3}));
}

TEST_CASE("schur_support examples") {
    const auto s = schur_support({2, 1, 0}, 3);
    CHECK(s.size() == 7);
    CHECK(std::count(s.begin(), s.end(), LatticePoint{1, 1, 1}) == 1);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(schur_support({1, 1, 1}, 3) == std::vector<LatticePoint>{{1, 1, 1}});
    CHECK(schur_support({2, 1, 1}, 3) == std::vector<LatticePoint>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK_THROWS_AS(schur_support({1, 1, 1, 1}, 3), LengthExceedsAmbient);
}

TEST_CASE("ts_summands examples") {
    const SchurSum s({{5, 1, 1}, {4, 3, 0}}, 3);
    CHECK(ts_summands(s, 2) == std::vector<Partition>{{10, 2, 2}, {9, 4, 1}, {8, 6, 0}});
    CHECK(ts_summands(SchurSum({{3, 1}}, 2), 3) == std::vector<Partition>{{9, 3}});
    CHECK(multisubsets(2, 2) == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(SchurSum({}, 3), EmptyInput);
    CHECK_THROWS_AS(SchurSum({{1, 1, 1}}, 2), LengthExceedsAmbient);
}

TEST_CASE("ts_support examples") {
    const SchurSum s({{5, 1, 1}, {4, 3, 0}}, 3);
    std::set<LatticePoint> expect;
    for (const auto& g : s.generators)
        for (const auto& p : schur_support(g, 3)) expect.insert(p);
    const auto got = ts_support(s, 1);
    CHECK(std::set<LatticePoint>(got.begin(), got.end()) == expect);
    CHECK(got.size() == expect.size());
    CHECK(in_ts_support({8, 5, 1}, s, 2));
    const auto two = ts_support(s, 2);
    CHECK(std::count(two.begin(), two.end(), LatticePoint{8, 5, 1}) == 1);
    CHECK(ts_support(SchurSum({{1, 0}}, 2), 2) == std::vector<LatticePoint>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("support agrees with Kostka positivity for |λ| <= 8, n <= 4") {
    for (int size = 0; size <= 8; ++size)
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& lam : partitions_of(size, n)) {
                const auto supp = schur_support(lam, n);
                const std::set<LatticePoint> in(supp.begin(), supp.end());
                for (const auto& alpha : all_points(size, n)) {
                    const bool k = oracle::kostka_strips(lam.parts(), alpha.coords) > 0;
                    CHECK(in_schur_support(alpha, lam) == k);
                    CHECK(in.count(alpha) == static_cast<std::size_t>(k));
                }
            }
}

TEST_CASE("schur_support is permutation closed and monotone in dominance") {
    for (int size = 0; size <= 8; ++size) {
        const auto ps = partitions_of(size, 4);
        for (const auto& lam : ps) {
            const auto supp = schur_support(lam, 4);
            const std::set<LatticePoint> in(supp.begin(), supp.end());
            for (const auto& p : supp)
                for (const auto& q : oracle::perms(p.coords)) CHECK(in.count(LatticePoint(q)));
            for (const auto& mu : ps) {
                if (!dominated_by(lam, mu)) continue;
                const auto big = schur_support(mu, 4);
                CHECK(std::includes(big.begin(), big.end(), supp.begin(), supp.end()));
            }
        }
    }
}

TEST_CASE("ts_summands has C(k+t-1, t) entries and ts_support matches in_ts_support") {
    const SchurSum s({{3, 1, 0}, {2, 2, 0}, {2, 1, 1}}, 3);
    for (std::size_t t = 1; t <= 4; ++t) {
        const auto sums = ts_summands(s, t);
        CHECK(sums.size() == binom(3 + t - 1, t));
        for (const auto& p : sums) CHECK(p.size() == static_cast<int>(4 * t));
        const auto supp = ts_support(s, t);
        const std::set<LatticePoint> in(supp.begin(), supp.end());
        CHECK(in.size() == supp.size());
        for (const auto& a : all_points(static_cast<int>(4 * t), 3)) CHECK(in_ts_support(a, s, t) == (in.count(a) == 1));
    }
}
