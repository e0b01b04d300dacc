#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "polyidp/rational.hpp"

namespace polyidp {

/// Dense row-major integer matrix.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    long long& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    long long at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

/// Phase-1 simplex on {c ≥ 0 : A c = b} with Bland's rule. Artificial
/// columns are implicit and dropped once they leave the basis. `b` must be
/// nonnegative. Returns one basic feasible solution or nullopt.
template <class F>
std::optional<std::vector<F>> phase_one(const IntMatrix& a, std::span<const long long> b) {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    const std::size_t w = n + 1;  // last column holds the right-hand side
    std::vector<F> tab(m * w);
    std::vector<F> obj(w);
    std::vector<std::size_t> basis(m);

    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) throw std::invalid_argument("phase_one: negative right-hand side");
        for (std::size_t j = 0; j < n; ++j) tab[i * w + j] = F(static_cast<long>(a.at(i, j)));
        tab[i * w + n] = F(static_cast<long>(b[i]));
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j <= n; ++j) {
        F s(0);
        for (std::size_t i = 0; i < m; ++i) s -= tab[i * w + j];
        obj[j] = s;
    }

    for (;;) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (sign_of(obj[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n) break;

        std::size_t leave = m;
        F best;
        for (std::size_t i = 0; i < m; ++i) {
            const F& piv = tab[i * w + enter];
            if (sign_of(piv) <= 0) continue;
            F ratio = tab[i * w + n] / piv;
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("phase_one: unbounded auxiliary problem");

        F* prow = &tab[leave * w];
        const F inv = F(1) / prow[enter];
        for (std::size_t j = 0; j <= n; ++j)
            if (sign_of(prow[j]) != 0) prow[j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            F* row = &tab[i * w];
            const F f = row[enter];
            if (sign_of(f) == 0) continue;
            for (std::size_t j = 0; j <= n; ++j)
                if (sign_of(prow[j]) != 0) row[j] -= f * prow[j];
        }
        {
            const F f = obj[enter];
            for (std::size_t j = 0; j <= n; ++j)
                if (sign_of(prow[j]) != 0) obj[j] -= f * prow[j];
        }
        basis[leave] = enter;
    }

    if (sign_of(obj[n]) != 0) return std::nullopt;
    std::vector<F> sol(n, F(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) sol[basis[i]] = tab[i * w + n];
    return sol;
}

} // namespace detail

/// Exact feasibility of {c ≥ 0 : A c = b}. Runs on 64-bit rationals first
/// and reruns on GMP rationals if an intermediate overflows.
std::optional<std::vector<mpq_class>> find_nonnegative_solution(const IntMatrix& a, std::span<const long long> b);

/// Feasibility only; same arithmetic strategy.
bool has_nonnegative_solution(const IntMatrix& a, std::span<const long long> b);

} // namespace polyidp
