#include "immaculate/tableau.hpp"

#include <algorithm>
#include <functional>

namespace imm {

std::string to_string(DescentKind kind) {
    switch (kind) {
        case DescentKind::DualImmaculate: return "di";
        case DescentKind::RowStrict: return "rdi";
        case DescentKind::AStar: return "astar";
        case DescentKind::ABarStar: return "abarstar";
    }
    return "?";
}

std::optional<DescentKind> descent_kind_from_string(const std::string& name) {
    if (name == "di") return DescentKind::DualImmaculate;
    if (name == "rdi") return DescentKind::RowStrict;
    if (name == "astar") return DescentKind::AStar;
    if (name == "abarstar") return DescentKind::ABarStar;
    return std::nullopt;
}

FillingFamily family_for(DescentKind kind, bool extended) {
    switch (kind) {
        case DescentKind::DualImmaculate:
            return {extended ? ColumnRule::AllColsStrict : ColumnRule::FirstColStrict,
                    RowRule::Weak};
        case DescentKind::RowStrict:
            return {extended ? ColumnRule::AllColsWeak : ColumnRule::FirstColWeak,
                    RowRule::Strict};
        case DescentKind::AStar:
            return {extended ? ColumnRule::AllColsWeak : ColumnRule::FirstColWeak,
                    RowRule::Weak};
        case DescentKind::ABarStar:
            return {extended ? ColumnRule::AllColsStrict : ColumnRule::FirstColStrict,
                    RowRule::Strict};
    }
    throw std::invalid_argument("bad descent kind");
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.outer().length())
        throw std::invalid_argument("tableau row count does not match shape");
    for (int i = 1; i <= shape_.outer().length(); ++i) {
        if (static_cast<int>(rows_[i - 1].size()) != shape_.row_length(i))
            throw std::invalid_argument("tableau row length does not match shape");
        for (int e : rows_[i - 1])
            if (e < 1) throw std::invalid_argument("tableau entries must be positive");
    }
}

int Tableau::entry(Cell c) const {
    if (!shape_.has_cell(c)) throw std::invalid_argument("cell not in skew shape");
    return rows_[c.row - 1][c.col - shape_.row_start(c.row)];
}

Cell Tableau::cell_of(int value) const {
    for (int i = 1; i <= shape_.outer().length(); ++i) {
        const auto& row = rows_[i - 1];
        for (int k = 0; k < static_cast<int>(row.size()); ++k)
            if (row[k] == value) return {i, shape_.row_start(i) + k};
    }
    throw std::invalid_argument("value not present in tableau");
}

bool Tableau::is_standard() const {
    std::vector<char> seen(size() + 1, 0);
    for (const auto& row : rows_)
        for (int e : row) {
            if (e > size() || seen[e]) return false;
            seen[e] = 1;
        }
    return true;
}

Tableau Tableau::with_swapped(int i) const {
    Tableau out = *this;
    Cell a = cell_of(i), b = cell_of(i + 1);
    out.rows_[a.row - 1][a.col - shape_.row_start(a.row)] = i + 1;
    out.rows_[b.row - 1][b.col - shape_.row_start(b.row)] = i;
    return out;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    word.reserve(size());
    for (int i = shape_.outer().length(); i >= 1; --i)
        for (auto it = rows_[i - 1].rbegin(); it != rows_[i - 1].rend(); ++it)
            word.push_back(*it);
    return word;
}

namespace {

// Rows of the shape that have a cell in column c, bottom to top.
std::vector<int> column_rows(const SkewShape& shape, int c) {
    std::vector<int> rows;
    for (int i = 1; i <= shape.outer().length(); ++i)
        if (shape.inner().part(i) < c && c <= shape.outer().part(i)) rows.push_back(i);
    return rows;
}

bool check_rows(const Tableau& t, RowRule rule) {
    for (const auto& row : t.rows())
        for (size_t k = 1; k < row.size(); ++k) {
            if (rule == RowRule::Strict ? row[k] <= row[k - 1] : row[k] < row[k - 1])
                return false;
        }
    return true;
}

bool check_column(const Tableau& t, int c, bool strict) {
    const auto rows = column_rows(t.shape(), c);
    for (size_t k = 1; k < rows.size(); ++k) {
        int lo = t.entry({rows[k - 1], c});
        int hi = t.entry({rows[k], c});
        if (strict ? hi <= lo : hi < lo) return false;
    }
    return true;
}

int max_column(const SkewShape& shape) {
    int m = 0;
    for (int p : shape.outer().parts()) m = std::max(m, p);
    return m;
}

}  // namespace

bool is_sit(const Tableau& t) {
    if (!t.is_standard()) return false;
    if (!check_rows(t, RowRule::Strict)) return false;
    return check_column(t, 1, /*strict=*/true);
}

bool is_set(const Tableau& t) {
    if (!is_sit(t)) return false;
    for (int c = 2; c <= max_column(t.shape()); ++c)
        if (!check_column(t, c, /*strict=*/true)) return false;
    return true;
}

bool satisfies(const Tableau& t, FillingFamily family) {
    if (!check_rows(t, family.row_rule)) return false;
    switch (family.col_rule) {
        case ColumnRule::FirstColStrict: return check_column(t, 1, true);
        case ColumnRule::FirstColWeak: return check_column(t, 1, false);
        case ColumnRule::AllColsStrict:
        case ColumnRule::AllColsWeak: {
            bool strict = family.col_rule == ColumnRule::AllColsStrict;
            for (int c = 1; c <= max_column(t.shape()); ++c)
                if (!check_column(t, c, strict)) return false;
            return true;
        }
    }
    return false;
}

std::vector<Tableau> generate_sit(const SkewShape& shape) {
    const int n_rows = shape.outer().length();
    const int total = shape.cell_count();
    std::vector<int> filled(n_rows, 0);  // cells placed so far in each row
    std::vector<std::vector<int>> rows(n_rows);
    for (int i = 0; i < n_rows; ++i) rows[i].resize(shape.row_length(i + 1));
    std::vector<Tableau> out;

    // Place values 1..total in increasing order; each value picks a row and
    // occupies that row's next free cell.  Rows then increase automatically,
    // and the surviving leftmost-column cells increase if they are filled
    // bottom to top.
    std::function<void(int)> place = [&](int value) {
        if (value > total) {
            out.emplace_back(shape, rows);
            return;
        }
        for (int i = 1; i <= n_rows; ++i) {
            if (filled[i - 1] >= shape.row_length(i)) continue;
            if (shape.row_start(i) == 1 && filled[i - 1] == 0) {
                // Next cell is a leftmost-column cell: the ones below must be taken.
                bool ready = true;
                for (int r = shape.inner().length() + 1; r < i; ++r)
                    if (filled[r - 1] == 0) ready = false;
                if (!ready) continue;
            }
            rows[i - 1][filled[i - 1]] = value;
            ++filled[i - 1];
            place(value + 1);
            --filled[i - 1];
        }
    };
    place(1);

    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

std::vector<Tableau> generate_set(const SkewShape& shape) {
    std::vector<Tableau> out;
    for (const Tableau& t : generate_sit(shape))
        if (is_set(t)) out.push_back(t);
    return out;
}

std::vector<Tableau> generate_fillings(const SkewShape& shape, FillingFamily family,
                                       int max_entry) {
    if (max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
    const auto cell_list = cells(shape);
    const int total = static_cast<int>(cell_list.size());

    // Per cell: index of its left neighbour and of its column predecessor
    // (the nearest cell below in the same constrained column), or -1.
    std::vector<int> left(total, -1), below(total, -1);
    auto index_of = [&](Cell c) {
        for (int k = 0; k < total; ++k)
            if (cell_list[k] == c) return k;
        return -1;
    };
    const bool all_cols = family.col_rule == ColumnRule::AllColsStrict ||
                          family.col_rule == ColumnRule::AllColsWeak;
    const bool col_strict = family.col_rule == ColumnRule::AllColsStrict ||
                            family.col_rule == ColumnRule::FirstColStrict;
    for (int k = 0; k < total; ++k) {
        const Cell c = cell_list[k];
        if (c.col > shape.row_start(c.row)) left[k] = index_of({c.row, c.col - 1});
        if (all_cols || c.col == 1) {
            for (int r = c.row - 1; r >= 1; --r)
                if (shape.has_cell({r, c.col})) {
                    below[k] = index_of({r, c.col});
                    break;
                }
        }
    }

    std::vector<int> values(total, 0);
    std::vector<Tableau> out;
    std::function<void(int)> fill = [&](int k) {
        if (k == total) {
            std::vector<std::vector<int>> rows(shape.outer().length());
            int pos = 0;
            for (int i = 1; i <= shape.outer().length(); ++i)
                for (int j = 0; j < shape.row_length(i); ++j) rows[i - 1].push_back(values[pos++]);
            out.emplace_back(shape, std::move(rows));
            return;
        }
        int lo = 1;
        if (left[k] >= 0) lo = values[left[k]] + (family.row_rule == RowRule::Strict ? 1 : 0);
        if (below[k] >= 0) lo = std::max(lo, values[below[k]] + (col_strict ? 1 : 0));
        for (int v = lo; v <= max_entry; ++v) {
            values[k] = v;
            fill(k + 1);
        }
    };
    fill(0);
    return out;
}

std::vector<int> descent_set(const Tableau& t, DescentKind kind) {
    const int n = t.size();
    std::vector<int> row_of_value(n + 1, 0);
    for (int i = 1; i <= t.shape().outer().length(); ++i)
        for (int e : t.rows()[i - 1]) row_of_value[e] = i;
    std::vector<int> des;
    for (int i = 1; i <= n - 1; ++i) {
        const int r = row_of_value[i], s = row_of_value[i + 1];
        bool d = false;
        switch (kind) {
            case DescentKind::DualImmaculate: d = s > r; break;
            case DescentKind::RowStrict: d = s <= r; break;
            case DescentKind::AStar: d = s < r; break;
            case DescentKind::ABarStar: d = s >= r; break;
        }
        if (d) des.push_back(i);
    }
    return des;
}

int inversions(const std::vector<int>& word) {
    int count = 0;
    for (size_t p = 0; p < word.size(); ++p)
        for (size_t q = p + 1; q < word.size(); ++q)
            if (word[p] > word[q]) ++count;
    return count;
}

namespace {

Tableau fill_special(const SkewShape& shape,
                     const std::function<void(std::vector<std::vector<int>>&)>& filler) {
    std::vector<std::vector<int>> rows(shape.outer().length());
    for (int i = 1; i <= shape.outer().length(); ++i) rows[i - 1].resize(shape.row_length(i));
    filler(rows);
    return Tableau(shape, std::move(rows));
}

}  // namespace

Tableau s0(const SkewShape& shape) {
    return fill_special(shape, [&](std::vector<std::vector<int>>& rows) {
        int next = 1;
        for (Cell c : leftmost_column_cells(shape)) rows[c.row - 1][0] = next++;
        for (int i = shape.outer().length(); i >= 1; --i) {
            int start = (shape.row_start(i) == 1) ? 1 : 0;  // skip the column-1 cell
            for (int k = start; k < shape.row_length(i); ++k) rows[i - 1][k] = next++;
        }
    });
}

Tableau srow(const SkewShape& shape) {
    return fill_special(shape, [&](std::vector<std::vector<int>>& rows) {
        int next = 1;
        for (int i = 1; i <= shape.outer().length(); ++i)
            for (int k = 0; k < shape.row_length(i); ++k) rows[i - 1][k] = next++;
    });
}

Tableau scol(const SkewShape& shape) {
    return fill_special(shape, [&](std::vector<std::vector<int>>& rows) {
        int next = 1;
        int maxc = 0;
        for (int p : shape.outer().parts()) maxc = std::max(maxc, p);
        for (int c = 1; c <= maxc; ++c)
            for (int i = 1; i <= shape.outer().length(); ++i)
                if (shape.has_cell({i, c})) rows[i - 1][c - shape.row_start(i)] = next++;
    });
}

Tableau phi(const Tableau& t) { return phi(t, srow(SkewShape(t.shape().inner()))); }

Tableau phi(const Tableau& t, const Tableau& u) {
    if (!is_sit(t)) throw std::invalid_argument("phi requires a standard immaculate tableau");
    if (u.shape() != SkewShape(t.shape().inner()) || !is_sit(u))
        throw std::invalid_argument("phi filler must be a standard immaculate tableau of the inner shape");
    const int m = t.shape().inner().size();
    std::vector<std::vector<int>> rows(t.shape().outer().length());
    for (int i = 1; i <= t.shape().outer().length(); ++i) {
        if (i <= u.shape().outer().length())
            rows[i - 1] = u.rows()[i - 1];
        for (int e : t.rows()[i - 1]) rows[i - 1].push_back(e + m);
    }
    return Tableau(SkewShape(t.shape().outer()), std::move(rows));
}

long long inv_alpha_beta(const Composition& alpha, const Composition& beta) {
    if (!contains(beta, alpha))
        throw std::invalid_argument("inner composition not contained in outer");
    long long total = 0;
    long long beta_partial = 0;
    for (int i = 1; i <= beta.length(); ++i) {
        beta_partial += beta.part(i);
        total += static_cast<long long>(alpha.part(i) - beta.part(i)) * beta_partial;
    }
    long long above = 0;
    for (int i = beta.length() + 1; i <= alpha.length(); ++i) above += alpha.part(i);
    total += above * beta_partial;
    return total;
}

}  // namespace imm
