#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace imm {

/// A composition: a finite sequence of positive integers.  The empty
/// composition is the unique composition of 0.  Diagram rows are indexed
/// bottom to top, so part(1) is the length of the bottom row.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Sum of the parts.
    int size() const {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }

    /// 1-based part access; rows beyond length() have size 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    /// Weakly decreasing parts.
    bool is_partition() const {
        for (int i = 1; i < length(); ++i)
            if (parts_[i] > parts_[i - 1]) return false;
        return true;
    }

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// A cell of a diagram. Row 1 is the bottom row, column 1 the leftmost.
struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

/// set(alpha): the partial sums of alpha excluding |alpha|, as a sorted list.
std::vector<int> set_of(const Composition& alpha);

/// comp(S) for S a subset of [n-1]: the inverse of set_of.
Composition comp_of(const std::vector<int>& s, int n);

/// The complement composition, comp(set(alpha)^c).  An involution.
Composition complement(const Composition& alpha);

/// Containment of diagrams: beta_j <= alpha_j for all j <= length(beta).
bool contains(const Composition& beta, const Composition& alpha);

/// A skew diagram alpha/beta with beta contained in alpha and placed in the
/// bottom-left corner.  beta may be empty (straight shape) or equal to alpha
/// (empty diagram).
class SkewShape {
public:
    explicit SkewShape(Composition outer, Composition inner = Composition())
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!contains(inner_, outer_))
            throw std::invalid_argument("inner composition not contained in outer");
    }

    const Composition& outer() const { return outer_; }
    const Composition& inner() const { return inner_; }

    /// Number of skew cells, |alpha| - |beta|.
    int cell_count() const { return outer_.size() - inner_.size(); }

    /// Skew cells in row i: columns inner_part(i)+1 .. outer_part(i).
    int row_start(int i) const { return inner_.part(i) + 1; }
    int row_end(int i) const { return outer_.part(i); }
    int row_length(int i) const { return outer_.part(i) - inner_.part(i); }

    bool has_cell(Cell c) const {
        return c.row >= 1 && c.row <= outer_.length() &&
               c.col >= row_start(c.row) && c.col <= row_end(c.row);
    }

    bool operator==(const SkewShape&) const = default;
    auto operator<=>(const SkewShape&) const = default;

private:
    Composition outer_;
    Composition inner_;
};

/// All skew cells in canonical order: row-major, bottom row first, left to
/// right.  This order is fixed; serialized tableaux depend on it.
std::vector<Cell> cells(const SkewShape& shape);

/// Cells of column 1 of alpha that survive in alpha/beta: rows
/// length(beta)+1 .. length(alpha).  Empty exactly when the lengths agree.
std::vector<Cell> leftmost_column_cells(const SkewShape& shape);

}  // namespace imm
