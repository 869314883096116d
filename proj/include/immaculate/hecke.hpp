#pragma once

#include <optional>
#include <vector>

#include "immaculate/tableau.hpp"

namespace imm {

enum class HeckeTag { Fixed, Swapped, Zero };

/// Outcome of one generator application.  Zero is an explicit value so the
/// operators can be treated as linear maps with the tableaux as basis.
struct HeckeResult {
    HeckeTag tag;
    std::optional<Tableau> tableau;  // present for Fixed (the input) and Swapped

    bool operator==(const HeckeResult&) const = default;
};

/// A word in the generators, stored in composition order: indices[0] is the
/// outermost operator, so the word is applied right to left.
struct GeneratorWord {
    std::vector<int> indices;
    bool operator==(const GeneratorWord&) const = default;
};

/// One generator of the 0-Hecke action determined by the descent kind:
/// fixes T when i is not a descent, swaps i and i+1 when the swap stays
/// standard immaculate, and annihilates otherwise.
HeckeResult apply(DescentKind kind, int i, const Tableau& t);

/// Fold of apply over the word, rightmost index first; Zero is absorbing.
HeckeResult apply_word(DescentKind kind, const GeneratorWord& word, const Tableau& t);

/// Word w such that applying w (under the row-strict action) to s0(shape)
/// yields t through a chain of swaps.  Deterministic; empty iff t == s0.
GeneratorWord straighten_from_bottom(const Tableau& t);

/// Word w such that applying w (under the row-strict action) to t yields
/// srow(shape).  Deterministic; empty iff t == srow.
GeneratorWord straighten_to_top(const Tableau& t);

/// Exhaustively checks the 0-Hecke relations (idempotency, braid, and far
/// commutation) as linear operators on the span of SIT(shape).
bool check_relations(DescentKind kind, const SkewShape& shape);

}  // namespace imm
