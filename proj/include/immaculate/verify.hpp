#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "immaculate/poset.hpp"
#include "immaculate/qsym.hpp"

namespace imm {

/// Factorisation of a straight standard tableau at an entry threshold m:
/// low holds the entries 1..m (a straight tableau of the inner shape),
/// high holds the remaining entries shifted down by m (a skew tableau).
struct SplitPair {
    Tableau low;
    Tableau high;
};

/// Splits t at m when the cells holding 1..m form a left-justified
/// composition diagram inside the shape; otherwise returns nothing.  For
/// standard immaculate input the split always exists.
std::optional<SplitPair> split(const Tableau& t, int m);

/// The generator action used on the span of SET: the plain action for the
/// row-strict and A* kinds (SET is closed), and the quotient action for the
/// other two (a swap leaving SET counts as zero).
HeckeResult apply_set_action(DescentKind kind, int i, const Tableau& t);

struct BranchReport {
    Composition alpha;
    int m = 0;
    DescentKind kind = DescentKind::RowStrict;
    bool over_set = false;

    std::map<Composition, long long> block_sizes;  // beta -> |X_{alpha,beta}|
    bool partition_ok = false;    // every tableau splits into a valid block
    bool dimension_ok = false;    // block sizes match the product counts
    bool intertwiner_ok = false;  // generators act factor-wise through split
    std::vector<std::string> flags;  // non-fatal findings

    bool ok() const { return partition_ok && dimension_ok && intertwiner_ok; }
};

/// Restriction check over SIT(alpha): the blocks X_{alpha,beta} partition
/// SIT(alpha), split is a bijection onto SIT(beta) x SIT(alpha/beta) per
/// block, and every generator other than pi_m acts on the matching tensor
/// factor.
BranchReport branching_check(const Composition& alpha, int m, DescentKind kind);

/// The same check over SET(alpha) with the SET actions.  Here the blocks
/// partition SET(alpha) and split lands inside SET(beta) x SET(alpha/beta);
/// a block that does not fill its product set is reported in flags.
BranchReport branching_check_set(const Composition& alpha, int m, DescentKind kind);

struct SeriesResult {
    bool ok = false;
    QSymF characteristic{0};
};

/// Builds a linear extension of the poset (or its dual, for the two
/// top-generated kinds) and checks that every generator sends each basis
/// tableau to itself, to zero, or strictly later, so the filtration has
/// one-dimensional quotients.  The accumulated characteristic must match
/// char_tableaux.
SeriesResult composition_series_check(const SkewShape& shape, DescentKind kind);

/// Every tableau is reachable from the designated generator (s0 for the
/// bottom-generated kinds, srow for the top-generated ones).  For the
/// row-strict and dual immaculate kinds the straightening words are
/// replayed as independent witnesses.
bool cyclicity_check(const SkewShape& shape, DescentKind kind);

/// Whether some single extended tableau reaches all of SET(shape) under the
/// row-strict action.  Fails for shapes whose SET subposet has several
/// minimal elements.
bool set_cyclicity_check(const SkewShape& shape);

struct ClosureReport {
    bool set_closed_rowstrict = false;
    bool set_closed_astar = false;
    bool nset_closed_dual = false;
    bool nset_closed_abarstar = false;
    bool all() const {
        return set_closed_rowstrict && set_closed_astar && nset_closed_dual &&
               nset_closed_abarstar;
    }
};

/// No swap transition leaves SET under the row-strict/A* actions, and none
/// leaves its complement under the other two.
ClosureReport closure_check(const SkewShape& shape);

struct SitCountReport {
    long long by_generation = 0;
    long long formula_value = 0;
    std::optional<long long> multinomial_value;  // set when lengths agree
    bool formula_agrees = false;
    std::vector<std::string> notes;
};

/// Counts SIT(shape) by generation (normative) and against the closed
/// formula; interpretation adjustments to the closed formula are recorded
/// in notes.
SitCountReport sit_count(const SkewShape& shape);

/// Enumeration helper shared by the exhaustive suites: all skew shapes with
/// |outer| in 1..max_n (inner ranging over all contained compositions,
/// including empty and full).
std::vector<SkewShape> all_skew_shapes(int max_n);

}  // namespace imm
