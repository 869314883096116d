#include "immaculate/hecke.hpp"

#include <algorithm>

namespace imm {

HeckeResult apply(DescentKind kind, int i, const Tableau& t) {
    if (i < 1 || i > t.size() - 1) throw std::out_of_range("generator index out of range");
    if (!is_sit(t)) throw std::invalid_argument("apply requires a standard immaculate tableau");
    const int r = t.row_of(i), s = t.row_of(i + 1);
    bool descent = false;
    switch (kind) {
        case DescentKind::DualImmaculate: descent = s > r; break;
        case DescentKind::RowStrict: descent = s <= r; break;
        case DescentKind::AStar: descent = s < r; break;
        case DescentKind::ABarStar: descent = s >= r; break;
    }
    if (!descent) return {HeckeTag::Fixed, t};
    Tableau swapped = t.with_swapped(i);
    if (is_sit(swapped)) return {HeckeTag::Swapped, std::move(swapped)};
    return {HeckeTag::Zero, std::nullopt};
}

HeckeResult apply_word(DescentKind kind, const GeneratorWord& word, const Tableau& t) {
    Tableau cur = t;
    bool moved = false;
    for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it) {
        HeckeResult r = apply(kind, *it, cur);
        if (r.tag == HeckeTag::Zero) return {HeckeTag::Zero, std::nullopt};
        if (r.tag == HeckeTag::Swapped) {
            cur = *r.tableau;
            moved = true;
        }
    }
    return {moved ? HeckeTag::Swapped : HeckeTag::Fixed, std::move(cur)};
}

GeneratorWord straighten_from_bottom(const Tableau& t) {
    if (!is_sit(t)) throw std::invalid_argument("straightening requires a standard immaculate tableau");
    const SkewShape& shape = t.shape();
    const Tableau target = s0(shape);
    Tableau cur = t;
    std::vector<int> word;  // composition order: factors discovered outermost first

    // Peel generators off t until s0 remains: each step factors cur as
    // pi_{x-1}(previous), i.e. swaps x-1 and x in cur.
    auto lower_entry_to = [&](Cell c, int goal) {
        for (int x = cur.entry(c); x > goal; x = cur.entry(c)) {
            word.push_back(x - 1);
            cur = cur.with_swapped(x - 1);
        }
    };

    // First column, bottom to top.
    for (Cell c : leftmost_column_cells(shape)) lower_entry_to(c, target.entry(c));
    // Then rows top to bottom, left to right.
    for (int i = shape.outer().length(); i >= 1; --i)
        for (int j = shape.row_start(i); j <= shape.row_end(i); ++j)
            lower_entry_to({i, j}, target.entry({i, j}));
    if (cur != target) throw std::logic_error("straightening did not reach s0");
    return {std::move(word)};
}

GeneratorWord straighten_to_top(const Tableau& t) {
    if (!is_sit(t)) throw std::invalid_argument("straightening requires a standard immaculate tableau");
    const SkewShape& shape = t.shape();
    const Tableau target = srow(shape);
    Tableau cur = t;
    std::vector<int> applied;  // application order

    // Walk rows top to bottom; in each row raise the largest mismatched
    // entry until it matches, right to left.
    for (int i = shape.outer().length(); i >= 1; --i)
        for (int j = shape.row_end(i); j >= shape.row_start(i); --j) {
            const int goal = target.entry({i, j});
            for (int x = cur.entry({i, j}); x < goal; x = cur.entry({i, j})) {
                applied.push_back(x);
                cur = cur.with_swapped(x);
            }
        }
    if (cur != target) throw std::logic_error("straightening did not reach srow");
    std::reverse(applied.begin(), applied.end());
    return {std::move(applied)};
}

namespace {

using OpResult = std::optional<Tableau>;

OpResult op(DescentKind kind, int i, const OpResult& t) {
    if (!t) return std::nullopt;
    HeckeResult r = apply(kind, i, *t);
    if (r.tag == HeckeTag::Zero) return std::nullopt;
    return r.tableau;
}

}  // namespace

bool check_relations(DescentKind kind, const SkewShape& shape) {
    const int n = shape.cell_count();
    if (n <= 1) return true;
    const auto basis = generate_sit(shape);
    for (const Tableau& t : basis) {
        const OpResult v = t;
        for (int i = 1; i <= n - 1; ++i) {
            if (op(kind, i, op(kind, i, v)) != op(kind, i, v)) return false;
            if (i + 1 <= n - 1) {
                auto lhs = op(kind, i, op(kind, i + 1, op(kind, i, v)));
                auto rhs = op(kind, i + 1, op(kind, i, op(kind, i + 1, v)));
                if (lhs != rhs) return false;
            }
            for (int j = i + 2; j <= n - 1; ++j)
                if (op(kind, i, op(kind, j, v)) != op(kind, j, op(kind, i, v))) return false;
        }
    }
    return true;
}

}  // namespace imm
