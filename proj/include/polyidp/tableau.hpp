#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyidp/partition.hpp"

namespace polyidp {

/// A filling of a Young diagram, row by row. Construction only checks that the
/// row lengths form a partition; use is_ssyt for the semistandard conditions.
class Tableau {
public:
    Tableau() = default;
    /// Throws ShapeMismatch if the row lengths are not weakly decreasing.
    explicit Tableau(std::vector<std::vector<int>> rows);
    /// Throws ShapeMismatch if `rows` do not have the lengths given by `shape`.
    Tableau(const Partition& shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::size_t num_rows() const { return rows_.size(); }
    int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    /// Columns left to right, each read top to bottom.
    std::vector<std::vector<int>> columns() const;
    static Tableau from_columns(std::span<const std::vector<int>> cols);

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Rows weakly increase and columns strictly increase; entries are positive.
bool is_ssyt(const Tableau& t);

/// Letter multiplicities: counts[i] is the number of (i+1)'s.
/// Throws LetterOutOfRange if an entry exceeds `num_letters` or is < 1.
LatticePoint content(const Tableau& t, std::size_t num_letters);

/// Number of SSYT of the given shape and content, by exhaustive backtracking.
/// Throws SizeMismatch if |alpha| != |shape|.
std::uint64_t kostka(const Partition& shape, const LatticePoint& alpha);

/// The first SSYT of the given shape and content in the order obtained by
/// filling cells in row-major order with letters tried in increasing order.
/// Throws SizeMismatch if |alpha| != |shape|.
std::optional<Tableau> ssyt_witness(const Partition& shape, const LatticePoint& alpha);

/// Splits an SSYT into one SSYT per summand shape by stripping columns,
/// longest first, taking shapes in list order within each column height.
/// Throws ShapeSumMismatch unless the shapes sum to t's shape.
std::vector<Tableau> decompose_tableau(const Tableau& t, std::span<const Partition> shapes);

/// Row i filled with the letter i+1.
Tableau superstandard(const Partition& shape);

} // namespace polyidp
