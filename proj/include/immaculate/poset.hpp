#pragma once

#include <string>
#include <vector>

#include "immaculate/hecke.hpp"

namespace imm {

struct Cover {
    int from = 0;
    int to = 0;
    int gen = 0;
    bool operator==(const Cover&) const = default;
    auto operator<=>(const Cover&) const = default;
};

/// The skew immaculate Hecke poset: nodes are the standard immaculate
/// tableaux of the shape in canonical (reading-word) order, covers are the
/// swap transitions of the row-strict action, and ranks are inversion counts
/// relative to s0.  Every cover raises rank by exactly 1; this is validated
/// at construction.
class HeckePoset {
public:
    HeckePoset(SkewShape shape, std::vector<Tableau> nodes, std::vector<Cover> covers,
               std::vector<int> ranks);

    const SkewShape& shape() const { return shape_; }
    const std::vector<Tableau>& nodes() const { return nodes_; }
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<int>& ranks() const { return ranks_; }

    int index_of(const Tableau& t) const;  // -1 if absent

private:
    SkewShape shape_;
    std::vector<Tableau> nodes_;
    std::vector<Cover> covers_;
    std::vector<int> ranks_;
};

HeckePoset build_poset(const SkewShape& shape);

/// Swap transitions of the given action as sorted covers over the canonical
/// node order.  The row-strict and A* digraphs agree and equal the poset
/// covers; the other two are their reversals.
std::vector<Cover> action_covers(const SkewShape& shape, DescentKind kind);

std::vector<Tableau> minimal_elements(const HeckePoset& p);
std::vector<Tableau> maximal_elements(const HeckePoset& p);

/// Graded: every cover raises rank by 1, and all minimal (resp. maximal)
/// elements share a rank, so all maximal chains have equal length.
bool is_graded(const HeckePoset& p);

/// Closed form for the inversion count of s0(alpha/beta).
long long inv_s0_formula(const Composition& alpha, const Composition& beta);

/// Closed form for the rank of the poset, i.e. inv(srow) - inv(s0).
long long rank_formula(const Composition& alpha, const Composition& beta);

/// Induced subposet on the standard extended tableaux; ranks are inherited.
HeckePoset set_subposet(const HeckePoset& p);

/// Graphviz DOT export.  Nodes are labelled by their bottom-to-top row
/// lists and identified by reading word; edges carry the generator index.
/// With highlight_set, nodes that are extended tableaux are drawn bold.
std::string export_dot(const HeckePoset& p, bool highlight_set = false);

}  // namespace imm
