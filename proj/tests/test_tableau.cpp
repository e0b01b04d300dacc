#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "polyidp/errors.hpp"
#include "polyidp/tableau.hpp"

using namespace polyidp;

namespace {

using Rows = std::vector<std::vector<int>>;

Tableau worked_tableau() {
    return Tableau({8, 7, 2}, {{1, 1, 1, 2, 2, 3, 3, 3}, {2, 2, 3, 3, 4, 4, 4}, {3, 4}});
}

// Every composition of `size` into `len` nonnegative parts.
std::vector<LatticePoint> compositions(int size, std::size_t len) {
    std::vector<LatticePoint> out;
    std::vector<int> cur(len, 0);
    const auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == len) {
            cur[i] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    if (len == 0) {
        if (size == 0) out.emplace_back();
        return out;
    }
    rec(rec, 0, size);
    return out;
}

// Ordered pairs (μ, ν) of partitions with μ + ν = λ.
std::vector<std::pair<Partition, Partition>> splits(const Partition& lam) {
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> a(lam.length(), 0);
    const auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == lam.length()) {
            std::vector<int> b(lam.length());
            for (std::size_t j = 0; j < b.size(); ++j) b[j] = lam[j] - a[j];
            if (std::is_sorted(b.begin(), b.end(), std::greater<>())) out.emplace_back(Partition(a), Partition(b));
            return;
        }
        const int cap = i ? a[i - 1] : lam[0];
        for (int v = 0; v <= std::min(cap, lam[i]); ++v) {
            a[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

TEST_CASE("is_ssyt") {
    CHECK(is_ssyt(worked_tableau()));
    CHECK_FALSE(is_ssyt(Tableau(Rows{{1, 1}, {1}})));
    CHECK_FALSE(is_ssyt(Tableau(Rows{{2, 1}})));
    CHECK_THROWS_AS(Tableau(Rows{{1}, {2, 3}}), ShapeMismatch);
    CHECK_THROWS_AS(Tableau(Partition{3}, Rows{{1, 1}}), ShapeMismatch);
}

TEST_CASE("content") {
    CHECK(content(worked_tableau(), 4) == LatticePoint{3, 4, 6, 4});
    CHECK(content(Tableau(Rows{{1}}), 3) == LatticePoint{1, 0, 0});
    CHECK(content(superstandard({3, 2}), 2) == LatticePoint{3, 2});
    CHECK_THROWS_AS(content(worked_tableau(), 3), LetterOutOfRange);
}

TEST_CASE("kostka examples") {
    CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka({3, 2}, {3, 2}) == 1);
    CHECK(kostka({2, 1}, {0, 3}) == 0);
    const auto k = kostka({8, 7, 2}, {3, 4, 6, 4});
    CHECK(k >= 1);
    CHECK(k == oracle::kostka_strips({8, 7, 2}, {3, 4, 6, 4}));
    CHECK(k == 14);
    CHECK_THROWS_AS(kostka({2, 1}, {1, 1}), SizeMismatch);
}

TEST_CASE("kostka agrees with brute-force filling count") {
    for (int size = 0; size <= 6; ++size)
        for (const auto& lam : partitions_of(size, 3))
            for (const auto& alpha : compositions(size, 3))
                CHECK(kostka(lam, alpha) == oracle::kostka_brute(lam.parts(), alpha.coords));
}

TEST_CASE("kostka positivity, symmetry and witnesses on |λ| <= 8, <= 4 letters") {
    for (int size = 0; size <= 8; ++size) {
        for (const auto& lam : partitions_of(size, 4)) {
            for (std::size_t letters = 1; letters <= 4; ++letters) {
                for (const auto& alpha : compositions(size, letters)) {
                    const auto k = kostka(lam, alpha);
                    CHECK(k == oracle::kostka_strips(lam.parts(), alpha.coords));
                    const Partition sorted = Partition::from_point(alpha);
                    CHECK((k > 0) == oracle::dominated(sorted.parts(), lam.parts()));
                    CHECK(k == kostka(lam, sorted.padded(letters)));
                    const auto w = ssyt_witness(lam, alpha);
                    CHECK(w.has_value() == (k > 0));
                    if (w) {
                        CHECK(is_ssyt(*w));
                        CHECK(w->shape() == lam);
                        CHECK(content(*w, letters) == alpha);
                    }
                }
            }
        }
    }
}

TEST_CASE("ssyt_witness examples") {
    CHECK(ssyt_witness({2, 1}, {1, 1, 1}) == Tableau(Rows{{1, 2}, {3}}));
    CHECK_FALSE(ssyt_witness({2, 1}, {0, 3}).has_value());
    CHECK(ssyt_witness({3, 2}, {3, 2}) == Tableau(Rows{{1, 1, 1}, {2, 2}}));
    CHECK_THROWS_AS(ssyt_witness({2}, {1}), SizeMismatch);
}

TEST_CASE("ssyt_witness is the first tableau in row-major reading order") {
    for (const auto& lam : std::vector<Partition>{{3, 2}, {2, 2, 1}, {4, 1, 1}, {3, 3}}) {
        const auto all = oracle::all_ssyt(lam.parts(), 4);
        std::map<LatticePoint, std::vector<int>> first;  // content -> smallest reading word
        for (const auto& rows : all) {
            std::vector<int> word;
            for (const auto& r : rows) word.insert(word.end(), r.begin(), r.end());
            const auto c = content(Tableau(rows), 4);
            auto it = first.find(c);
            if (it == first.end() || word < it->second) first[c] = word;
        }
        for (const auto& [c, word] : first) {
            const auto w = ssyt_witness(lam, c);
            REQUIRE(w);
            std::vector<int> got;
            for (const auto& r : w->rows()) got.insert(got.end(), r.begin(), r.end());
            CHECK(got == word);
        }
    }
}

TEST_CASE("ssyt_witness handles large shapes with few letters") {
    const Partition lam{40, 31, 25};
    const LatticePoint alpha{36, 34, 26};
    const auto w = ssyt_witness(lam, alpha);
    REQUIRE(w);
    CHECK(is_ssyt(*w));
    CHECK(content(*w, 3) == alpha);
    CHECK_FALSE(ssyt_witness(lam, LatticePoint{41, 30, 25}).has_value());
}

TEST_CASE("decompose_tableau reproduces the worked example") {
    const std::vector<Partition> shapes{{2, 2, 1}, {4, 3, 1}, {2, 2, 0}};
    const auto parts = decompose_tableau(worked_tableau(), shapes);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == Tableau(Rows{{1, 1}, {2, 3}, {3}}));
    CHECK(parts[1] == Tableau(Rows{{1, 2, 2, 3}, {2, 3, 4}, {4}}));
    CHECK(parts[2] == Tableau(Rows{{3, 3}, {4, 4}}));
    LatticePoint sum{0, 0, 0, 0};
    for (const auto& p : parts) {
        CHECK(is_ssyt(p));
        sum += content(p, 4);
    }
    CHECK(sum == LatticePoint{3, 4, 6, 4});
}

TEST_CASE("decompose_tableau edge cases") {
    const auto t = worked_tableau();
    const std::vector<Partition> whole{t.shape()};
    CHECK(decompose_tableau(t, whole) == std::vector<Tableau>{t});

    const std::vector<Partition> halves{{2, 1}, {2, 1}};
    const auto two = decompose_tableau(superstandard({4, 2}), halves);
    CHECK(two == std::vector<Tableau>{Tableau(Rows{{1, 1}, {2}}), Tableau(Rows{{1, 1}, {2}})});

    const std::vector<Partition> wrong{{2, 1}, {2, 2}};
    CHECK_THROWS_AS(decompose_tableau(superstandard({4, 2}), wrong), ShapeSumMismatch);
}

TEST_CASE("decompose_tableau keeps columns and contents for all SSYT up to size 10") {
    std::size_t runs = 0;
    for (int size = 1; size <= 10; ++size) {
        for (const auto& lam : partitions_of(size, 3)) {
            const auto sp = splits(lam);
            const auto all = oracle::all_ssyt(lam.parts(), 4);
            for (std::size_t i = 0; i < all.size(); ++i) {
                const Tableau t(all[i]);
                // two summands, cycling through the splits
                const auto& [a, b] = sp[i % sp.size()];
                // three summands: split the second part again
                const auto sp2 = splits(b);
                const auto& [b1, b2] = sp2[i % sp2.size()];
                for (const auto& shapes : {std::vector<Partition>{a, b}, std::vector<Partition>{a, b1, b2}}) {
                    const auto pieces = decompose_tableau(t, shapes);
                    REQUIRE(pieces.size() == shapes.size());
                    LatticePoint sum{0, 0, 0, 0};
                    std::vector<std::vector<int>> cols;
                    for (std::size_t j = 0; j < pieces.size(); ++j) {
                        CHECK(is_ssyt(pieces[j]));
                        CHECK(pieces[j].shape() == shapes[j]);
                        sum += content(pieces[j], 4);
                        auto c = pieces[j].columns();
                        cols.insert(cols.end(), c.begin(), c.end());
                    }
                    CHECK(sum == content(t, 4));
                    auto orig = t.columns();
                    std::sort(cols.begin(), cols.end());
                    std::sort(orig.begin(), orig.end());
                    CHECK(cols == orig);
                    ++runs;
                }
            }
        }
    }
    CHECK(runs > 10000);
}
