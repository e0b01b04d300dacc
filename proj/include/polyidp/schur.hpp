#pragma once

#include <cstddef>
#include <vector>

#include "polyidp/partition.hpp"

namespace polyidp {

/// s = s_{λ_1} + ... + s_{λ_k} in `ambient` variables. Generators may repeat.
struct SchurSum {
    std::vector<Partition> generators;
    std::size_t ambient = 0;

    SchurSum() = default;
    /// Throws EmptyInput or LengthExceedsAmbient.
    SchurSum(std::vector<Partition> gens, std::size_t n);
};

/// alpha is an exponent vector of s_λ: same size and sorted(alpha) ⊴ λ.
bool in_schur_support(const LatticePoint& alpha, const Partition& lam);

/// Every n-coordinate exponent vector of s_λ, sorted lexicographically.
/// Throws LengthExceedsAmbient if λ has more than n parts.
std::vector<LatticePoint> schur_support(const Partition& lam, std::size_t n);

/// Size-t multisubsets of {0..k-1} as nondecreasing index sequences, in
/// lexicographic order.
std::vector<std::vector<std::size_t>> multisubsets(std::size_t k, std::size_t t);

/// λ_I for every size-t multisubset I, in multisubset order. Duplicates kept.
std::vector<Partition> ts_summands(const SchurSum& s, std::size_t t);

/// Union of the supports of the ts summands, sorted lexicographically.
std::vector<LatticePoint> ts_support(const SchurSum& s, std::size_t t);

/// Membership in ts_support without materialising it.
bool in_ts_support(const LatticePoint& alpha, const SchurSum& s, std::size_t t);

} // namespace polyidp
