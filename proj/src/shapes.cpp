#include "immaculate/shapes.hpp"

#include <algorithm>

namespace imm {

std::vector<int> set_of(const Composition& alpha) {
    std::vector<int> s;
    int sum = 0;
    for (int i = 1; i < alpha.length(); ++i) {
        sum += alpha.part(i);
        s.push_back(sum);
    }
    return s;
}

Composition comp_of(const std::vector<int>& s, int n) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (int x : sorted)
        if (x < 1 || x > n - 1)
            throw std::invalid_argument("set element outside 1..n-1");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate set element");
    if (n == 0) return Composition();
    std::vector<int> parts;
    int prev = 0;
    for (int x : sorted) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition complement(const Composition& alpha) {
    const int n = alpha.size();
    std::vector<int> in = set_of(alpha);
    std::vector<int> out;
    auto it = in.begin();
    for (int x = 1; x <= n - 1; ++x) {
        if (it != in.end() && *it == x)
            ++it;
        else
            out.push_back(x);
    }
    return comp_of(out, n);
}

bool contains(const Composition& beta, const Composition& alpha) {
    if (beta.length() > alpha.length()) return false;
    for (int j = 1; j <= beta.length(); ++j)
        if (beta.part(j) > alpha.part(j)) return false;
    return true;
}

std::vector<Cell> cells(const SkewShape& shape) {
    std::vector<Cell> out;
    out.reserve(shape.cell_count());
    for (int i = 1; i <= shape.outer().length(); ++i)
        for (int j = shape.row_start(i); j <= shape.row_end(i); ++j)
            out.push_back({i, j});
    return out;
}

std::vector<Cell> leftmost_column_cells(const SkewShape& shape) {
    std::vector<Cell> out;
    for (int i = shape.inner().length() + 1; i <= shape.outer().length(); ++i)
        out.push_back({i, 1});
    return out;
}

}  // namespace imm
