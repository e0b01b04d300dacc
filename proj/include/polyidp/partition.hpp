#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace polyidp {

/// A nonnegative integer vector of fixed ambient length: an exponent or
/// content vector. No ordering constraint on the coordinates.
struct LatticePoint {
    std::vector<int> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<int> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }
    long long sum() const;
    bool is_weakly_decreasing() const;

    /// Coordinates sorted into weakly decreasing order.
    LatticePoint sorted_desc() const;

    LatticePoint& operator+=(const LatticePoint& other);
    friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
    friend LatticePoint operator*(int k, LatticePoint a);

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const noexcept;
};

/// Weakly decreasing nonnegative integer sequence. Trailing zeros are not
/// stored, so equality and ordering ignore zero-padding.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidPartition if `parts` is not weakly decreasing and nonnegative.
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parts with trailing zeros stripped.
    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    std::size_t length() const { return parts_.size(); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    /// i-th part (0-based); zero beyond the length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int operator[](std::size_t i) const { return part(i); }

    /// Zero-padded to `n` coordinates. Throws LengthExceedsAmbient if length() > n.
    LatticePoint padded(std::size_t n) const;

    /// Reads a partition from an arbitrary point by sorting its coordinates.
    static Partition from_point(const LatticePoint& p);

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

enum class Dominance { Less, Greater, Equal, Incomparable };

std::string to_string(Dominance d);
std::string to_string(const Partition& p);
std::string to_string(const LatticePoint& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);
std::ostream& operator<<(std::ostream& os, Dominance d);

/// Dominance comparison of two partitions of equal size.
/// Throws SizeMismatch when the sizes differ.
Dominance compare_dominance(const Partition& a, const Partition& b);

/// a ⊴ b (Less or Equal). Same-size precondition as compare_dominance.
bool dominated_by(const Partition& a, const Partition& b);

/// Coordinatewise sum. Throws EmptyInput on an empty list.
Partition partition_sum(std::span<const Partition> parts);

/// λ scaled coordinatewise by k ≥ 0.
Partition scale(const Partition& p, int k);

/// All partitions with at most `max_length` parts, of the same size as `lam`,
/// dominated by `lam`. Sorted in decreasing lexicographic order.
std::vector<Partition> enumerate_dominated(const Partition& lam, std::size_t max_length);

/// Elements of `cands` not strictly dominated by another candidate of the same
/// size. Elements of different sizes are never compared. Output is sorted and
/// deduplicated.
std::vector<Partition> antichain_max(std::span<const Partition> cands);

/// All partitions with at most `max_length` parts, each part at most `max_part`,
/// in increasing lexicographic order of the zero-padded vectors.
std::vector<Partition> partitions_in_box(std::size_t max_length, int max_part);

/// All partitions of `size` with at most `max_length` parts.
std::vector<Partition> partitions_of(int size, std::size_t max_length);

/// Distinct coordinate permutations of a point, sorted lexicographically.
std::vector<LatticePoint> orbit(const LatticePoint& p);

} // namespace polyidp

template <>
struct std::hash<polyidp::LatticePoint> : polyidp::LatticePointHash {};
