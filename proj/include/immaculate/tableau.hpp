#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "immaculate/shapes.hpp"

namespace imm {

/// The four descent-set variants on standard tableaux.  Each classifies a
/// position i by where i+1 sits relative to i:
///   DualImmaculate  -- strictly above
///   RowStrict       -- weakly below
///   AStar           -- strictly below
///   ABarStar        -- weakly above
enum class DescentKind { DualImmaculate, RowStrict, AStar, ABarStar };

constexpr std::array<DescentKind, 4> kAllDescentKinds = {
    DescentKind::DualImmaculate, DescentKind::RowStrict, DescentKind::AStar,
    DescentKind::ABarStar};

std::string to_string(DescentKind kind);
std::optional<DescentKind> descent_kind_from_string(const std::string& name);

/// Column rules for the eight semistandard filling families.  "FirstCol"
/// rules constrain only the surviving cells of column 1; "AllCols" rules
/// constrain every column (reading the column's cells bottom to top, across
/// any gaps).
enum class ColumnRule { FirstColStrict, FirstColWeak, AllColsStrict, AllColsWeak };
enum class RowRule { Strict, Weak };

struct FillingFamily {
    ColumnRule col_rule;
    RowRule row_rule;
    bool operator==(const FillingFamily&) const = default;
};

/// The filling family whose generating function matches the descent-based
/// expansion over SIT (extended=false) or SET (extended=true).
FillingFamily family_for(DescentKind kind, bool extended);

/// A filling of a skew diagram.  Entries are stored sparsely: one vector per
/// row (bottom row first) holding the skew-cell entries left to right.
class Tableau {
public:
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.cell_count(); }

    int entry(Cell c) const;
    /// Cell holding a given value; requires a standard tableau.
    Cell cell_of(int value) const;
    int row_of(int value) const { return cell_of(value).row; }

    /// Entries are a bijection onto 1..cell_count().
    bool is_standard() const;

    /// New tableau with the values i and i+1 exchanged.
    Tableau with_swapped(int i) const;

    /// Entries read right to left along rows, top row first.
    std::vector<int> reading_word() const;

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Standard immaculate: standard, rows strictly increasing, surviving
/// leftmost-column entries strictly increasing bottom to top.
bool is_sit(const Tableau& t);

/// Extended: SIT with every column strictly increasing bottom to top.
bool is_set(const Tableau& t);

/// Row/column rules of a filling family, for arbitrary (non-standard) fillings.
bool satisfies(const Tableau& t, FillingFamily family);

/// All standard immaculate tableaux of the shape, sorted lexicographically
/// by reading word.
std::vector<Tableau> generate_sit(const SkewShape& shape);

/// The SET subset of generate_sit, same order.
std::vector<Tableau> generate_set(const SkewShape& shape);

/// All fillings with entries in 1..max_entry satisfying the family rules
/// (entries may repeat), in lexicographic order of the entry sequence along
/// the canonical cell order.
std::vector<Tableau> generate_fillings(const SkewShape& shape, FillingFamily family,
                                       int max_entry);

/// Descent set of a standard tableau, a subset of [size-1].
std::vector<int> descent_set(const Tableau& t, DescentKind kind);

/// Number of inversion pairs of a word.
int inversions(const std::vector<int>& word);

/// The minimal tableau of the skew immaculate Hecke poset: surviving
/// leftmost-column cells get 1..l(outer)-l(inner) bottom to top, remaining
/// cells are filled by rows top to bottom, left to right.
Tableau s0(const SkewShape& shape);

/// Row superstandard: rows filled left to right, bottom to top.
Tableau srow(const SkewShape& shape);

/// Column superstandard: columns filled bottom to top, left to right.
Tableau scol(const SkewShape& shape);

/// Embed a skew standard immaculate tableau into the straight shape: shift
/// every entry up by |inner| and fill the inner cells with u (defaults to
/// the row superstandard filling of the inner shape).
Tableau phi(const Tableau& t);
Tableau phi(const Tableau& t, const Tableau& u);

/// Number of mixed inversion pairs contributed by the embedding, i.e. pairs
/// (i, j) with i > |beta| >= j in the reading word of phi(T).  Independent
/// of the tableau; computed in closed form.
long long inv_alpha_beta(const Composition& alpha, const Composition& beta);

}  // namespace imm
