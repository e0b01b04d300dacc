#include "polyidp/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "polyidp/errors.hpp"

namespace polyidp {

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    for (std::size_t i = 1; i < lens.size(); ++i)
        if (lens[i] > lens[i - 1]) throw ShapeMismatch("row lengths are not weakly decreasing");
    return Partition(lens);
}

} // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    shape_ = shape_of_rows(rows_);
}

Tableau::Tableau(const Partition& shape, std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {
    if (shape_ != shape)
        throw ShapeMismatch("rows have shape " + to_string(shape_) + ", expected " + to_string(shape));
}

std::vector<std::vector<int>> Tableau::columns() const {
    const std::size_t width = rows_.empty() ? 0 : rows_[0].size();
    std::vector<std::vector<int>> cols(width);
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

Tableau Tableau::from_columns(std::span<const std::vector<int>> cols) {
    std::vector<std::vector<int>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c > 0 && cols[c].size() > cols[c - 1].size())
            throw ShapeMismatch("column lengths are not weakly decreasing");
        for (std::size_t r = 0; r < cols[c].size(); ++r) {
            if (rows.size() <= r) rows.emplace_back();
            rows[r].push_back(cols[c][r]);
        }
    }
    return Tableau(std::move(rows));
}

bool is_ssyt(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1) return false;
            if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    return true;
}

LatticePoint content(const Tableau& t, std::size_t num_letters) {
    std::vector<int> counts(num_letters, 0);
    for (const auto& row : t.rows()) {
        for (int v : row) {
            if (v < 1 || static_cast<std::size_t>(v) > num_letters)
                throw LetterOutOfRange("letter " + std::to_string(v) + " outside 1.." + std::to_string(num_letters));
            ++counts[v - 1];
        }
    }
    return LatticePoint(std::move(counts));
}

Tableau superstandard(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 0; r < shape.length(); ++r) rows.emplace_back(shape.part(r), static_cast<int>(r) + 1);
    return Tableau(std::move(rows));
}

namespace {

/// Cell-by-cell filler shared by kostka and ssyt_witness.
class Filler {
public:
    Filler(const Partition& shape, const LatticePoint& alpha) : shape_(shape), remaining_(alpha.coords) {
        if (alpha.sum() != shape.size())
            throw SizeMismatch("content " + to_string(alpha) + " does not match shape " + to_string(shape));
        letters_ = static_cast<int>(alpha.dim());
        for (std::size_t r = 0; r < shape.length(); ++r)
            for (int c = 0; c < shape.part(r); ++c) cells_.push_back({static_cast<int>(r), c});
        col_height_.assign(shape.length() ? shape.part(0) : 0, 0);
        for (std::size_t r = 0; r < shape.length(); ++r)
            for (int c = 0; c < shape.part(r); ++c) ++col_height_[c];
        for (std::size_t r = 0; r < shape.length(); ++r) grid_.emplace_back(shape.part(r), 0);
    }

    std::uint64_t count() { return count_from(0); }

    std::optional<Tableau> first() {
        failed_.clear();
        if (!first_from(0)) return std::nullopt;
        return Tableau(grid_);
    }

private:
    struct Cell {
        int r, c;
    };

    // Allowed letter range for a cell given its filled neighbours.
    std::pair<int, int> bounds(const Cell& cell) const {
        int lo = cell.r + 1;
        if (cell.c > 0) lo = std::max(lo, grid_[cell.r][cell.c - 1]);
        if (cell.r > 0) lo = std::max(lo, grid_[cell.r - 1][cell.c] + 1);
        // leave room for a strictly increasing column below this cell
        const int hi = letters_ - (col_height_[cell.c] - cell.r - 1);
        return {lo, hi};
    }

    std::uint64_t count_from(std::size_t p) {
        if (p == cells_.size()) return 1;
        const Cell cell = cells_[p];
        const auto [lo, hi] = bounds(cell);
        std::uint64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            if (remaining_[v - 1] == 0) continue;
            --remaining_[v - 1];
            grid_[cell.r][cell.c] = v;
            total += count_from(p + 1);
            ++remaining_[v - 1];
        }
        grid_[cell.r][cell.c] = 0;
        return total;
    }

    // Everything that constrains the unfilled cells: position, remaining
    // content, row r to the left of the cursor and row r-1 from the cursor on.
    std::string state_key(std::size_t p) const {
        const Cell cell = cells_[p];
        std::string key;
        const auto put = [&key](int v) {
            key.push_back(static_cast<char>(v & 0xff));
            key.push_back(static_cast<char>((v >> 8) & 0xff));
        };
        put(static_cast<int>(p));
        for (int v : remaining_) put(v);
        for (int c = 0; c < cell.c; ++c) put(grid_[cell.r][c]);
        if (cell.r > 0)
            for (int c = cell.c; c < shape_.part(cell.r - 1); ++c) put(grid_[cell.r - 1][c]);
        return key;
    }

    bool first_from(std::size_t p) {
        if (p == cells_.size()) return true;
        std::string key = state_key(p);
        if (failed_.count(key)) return false;
        const Cell cell = cells_[p];
        const auto [lo, hi] = bounds(cell);
        for (int v = lo; v <= hi; ++v) {
            if (remaining_[v - 1] == 0) continue;
            --remaining_[v - 1];
            grid_[cell.r][cell.c] = v;
            const bool ok = first_from(p + 1);
            ++remaining_[v - 1];
            if (ok) return true;
        }
        grid_[cell.r][cell.c] = 0;
        failed_.insert(std::move(key));
        return false;
    }

    Partition shape_;
    std::vector<int> remaining_;
    int letters_ = 0;
    std::vector<Cell> cells_;
    std::vector<int> col_height_;
    std::vector<std::vector<int>> grid_;
    std::unordered_set<std::string> failed_;
};

} // namespace

std::uint64_t kostka(const Partition& shape, const LatticePoint& alpha) {
    return Filler(shape, alpha).count();
}

std::optional<Tableau> ssyt_witness(const Partition& shape, const LatticePoint& alpha) {
    return Filler(shape, alpha).first();
}

std::vector<Tableau> decompose_tableau(const Tableau& t, std::span<const Partition> shapes) {
    if (shapes.empty()) throw ShapeSumMismatch("no summand shapes given");
    if (partition_sum(shapes) != t.shape())
        throw ShapeSumMismatch("shapes sum to " + to_string(partition_sum(shapes)) + ", tableau has shape " +
                               to_string(t.shape()));

    const auto cols = t.columns();
    std::size_t next = 0;
    std::vector<std::vector<int>> cur;
    for (const auto& s : shapes) cur.push_back(s.parts());
    std::vector<std::vector<std::vector<int>>> assigned(shapes.size());

    for (std::size_t height = t.num_rows(); height >= 1; --height) {
        for (std::size_t j = 0; j < shapes.size(); ++j) {
            auto& parts = cur[j];
            const int take = parts.size() >= height ? parts[height - 1] : 0;
            for (int i = 0; i < take; ++i, ++next) {
                if (next >= cols.size() || cols[next].size() != height)
                    throw std::logic_error("decompose_tableau: column height invariant broken");
                assigned[j].push_back(cols[next]);
            }
            if (parts.size() >= height) parts.resize(height - 1);
            for (int& v : parts) v -= take;
        }
    }
    if (next != cols.size()) throw std::logic_error("decompose_tableau: columns left over");

    std::vector<Tableau> out;
    out.reserve(shapes.size());
    for (const auto& a : assigned) out.push_back(Tableau::from_columns(a));
    return out;
}

} // namespace polyidp
