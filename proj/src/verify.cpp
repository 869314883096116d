#include "immaculate/verify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace imm {

namespace {

std::string describe(const Tableau& t) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < t.rows().size(); ++i) {
        if (i) out << " / ";
        for (size_t k = 0; k < t.rows()[i].size(); ++k) {
            if (k) out << ",";
            out << t.rows()[i][k];
        }
    }
    out << "]";
    return out.str();
}

std::string describe(const Composition& c) {
    std::ostringstream out;
    out << "(";
    for (int i = 1; i <= c.length(); ++i) {
        if (i > 1) out << ",";
        out << c.part(i);
    }
    out << ")";
    return out.str();
}

}  // namespace

std::optional<SplitPair> split(const Tableau& t, int m) {
    const SkewShape& shape = t.shape();
    if (!shape.inner().empty())
        throw std::invalid_argument("split requires a straight-shape tableau");
    if (m < 0 || m > t.size()) throw std::out_of_range("threshold out of range");
    if (!t.is_standard()) throw std::invalid_argument("split requires a standard tableau");

    // Entries <= m must occupy a left-justified prefix of each row, and the
    // rows with nonempty prefix must be the bottom rows.
    const int n_rows = shape.outer().length();
    std::vector<int> prefix(n_rows, 0);
    for (int i = 1; i <= n_rows; ++i) {
        const auto& row = t.rows()[i - 1];
        size_t k = 0;
        while (k < row.size() && row[k] <= m) ++k;
        prefix[i - 1] = static_cast<int>(k);
        for (; k < row.size(); ++k)
            if (row[k] <= m) return std::nullopt;
    }
    int inner_len = n_rows;
    while (inner_len > 0 && prefix[inner_len - 1] == 0) --inner_len;
    for (int i = 0; i < inner_len; ++i)
        if (prefix[i] == 0) return std::nullopt;

    Composition beta(std::vector<int>(prefix.begin(), prefix.begin() + inner_len));
    std::vector<std::vector<int>> low_rows(inner_len);
    for (int i = 0; i < inner_len; ++i)
        low_rows[i].assign(t.rows()[i].begin(), t.rows()[i].begin() + prefix[i]);

    std::vector<std::vector<int>> high_rows(n_rows);
    for (int i = 0; i < n_rows; ++i)
        for (size_t k = prefix[i]; k < t.rows()[i].size(); ++k)
            high_rows[i].push_back(t.rows()[i][k] - m);

    return SplitPair{Tableau(SkewShape(beta), std::move(low_rows)),
                     Tableau(SkewShape(shape.outer(), beta), std::move(high_rows))};
}

HeckeResult apply_set_action(DescentKind kind, int i, const Tableau& t) {
    HeckeResult r = apply(kind, i, t);
    const bool quotient =
        kind == DescentKind::DualImmaculate || kind == DescentKind::ABarStar;
    if (quotient && r.tag == HeckeTag::Swapped && !is_set(*r.tableau))
        return {HeckeTag::Zero, std::nullopt};
    return r;
}

namespace {

BranchReport branching_check_impl(const Composition& alpha, int m, DescentKind kind,
                                  bool over_set) {
    const int n = alpha.size();
    if (m < 1 || m > n) throw std::out_of_range("threshold out of range");

    BranchReport report;
    report.alpha = alpha;
    report.m = m;
    report.kind = kind;
    report.over_set = over_set;
    report.partition_ok = true;
    report.dimension_ok = true;
    report.intertwiner_ok = true;

    const SkewShape straight(alpha);
    const auto basis = over_set ? generate_set(straight) : generate_sit(straight);
    auto act = [&](int i, const Tableau& t) {
        return over_set ? apply_set_action(kind, i, t) : apply(kind, i, t);
    };

    std::map<Composition, std::vector<std::pair<Tableau, SplitPair>>> blocks;
    for (const Tableau& t : basis) {
        auto sp = split(t, m);
        if (!sp) {
            report.partition_ok = false;
            report.flags.push_back("no valid split: " + describe(t));
            continue;
        }
        const bool factors_ok =
            over_set ? (is_set(sp->low) && is_set(sp->high)) : (is_sit(sp->low) && is_sit(sp->high));
        if (!factors_ok) {
            report.partition_ok = false;
            report.flags.push_back("split factors leave the family: " + describe(t));
            continue;
        }
        if (phi(sp->high, sp->low) != t) {
            report.partition_ok = false;
            report.flags.push_back("split does not reassemble: " + describe(t));
            continue;
        }
        blocks[sp->low.shape().outer()].push_back({t, std::move(*sp)});
    }

    // Block sizes against the product counts.
    long long total = 0;
    for (const Composition& beta : contained_compositions(alpha)) {
        if (beta.size() != m) continue;
        const SkewShape skew(alpha, beta);
        const long long product =
            over_set
                ? static_cast<long long>(generate_set(SkewShape(beta)).size()) *
                      static_cast<long long>(generate_set(skew).size())
                : static_cast<long long>(generate_sit(SkewShape(beta)).size()) *
                      static_cast<long long>(generate_sit(skew).size());
        const auto it = blocks.find(beta);
        const long long got = it == blocks.end() ? 0 : static_cast<long long>(it->second.size());
        report.block_sizes[beta] = got;
        total += got;
        if (got != product) {
            if (over_set) {
                std::ostringstream note;
                note << "block " << describe(beta) << " spans " << got << " of "
                     << product << " product elements";
                report.flags.push_back(note.str());
            } else {
                report.dimension_ok = false;
                report.flags.push_back("block size mismatch at " + describe(beta));
            }
        }
    }
    if (total != static_cast<long long>(basis.size())) {
        report.dimension_ok = false;
        report.flags.push_back("blocks do not partition the basis");
    }

    // Generators other than pi_m act on one tensor factor.
    for (const auto& [beta, members] : blocks) {
        (void)beta;
        for (const auto& [t, sp] : members) {
            for (int i = 1; i <= n - 1; ++i) {
                if (i == m) continue;
                const HeckeResult lhs = act(i, t);
                const HeckeResult fac =
                    i < m ? act(i, sp.low) : act(i - m, sp.high);
                bool match = lhs.tag == fac.tag;
                if (match && lhs.tag == HeckeTag::Swapped) {
                    auto sp2 = split(*lhs.tableau, m);
                    match = sp2.has_value() &&
                            (i < m ? (sp2->low == *fac.tableau && sp2->high == sp.high)
                                   : (sp2->low == sp.low && sp2->high == *fac.tableau));
                }
                if (!match) {
                    report.intertwiner_ok = false;
                    std::ostringstream note;
                    note << "generator " << i << " does not factor at " << describe(t);
                    report.flags.push_back(note.str());
                }
            }
        }
    }
    return report;
}

}  // namespace

BranchReport branching_check(const Composition& alpha, int m, DescentKind kind) {
    return branching_check_impl(alpha, m, kind, false);
}

BranchReport branching_check_set(const Composition& alpha, int m, DescentKind kind) {
    return branching_check_impl(alpha, m, kind, true);
}

SeriesResult composition_series_check(const SkewShape& shape, DescentKind kind) {
    const int n = shape.cell_count();
    const bool ascending =
        kind == DescentKind::RowStrict || kind == DescentKind::AStar;

    std::vector<Tableau> order = generate_sit(shape);
    std::stable_sort(order.begin(), order.end(), [&](const Tableau& a, const Tableau& b) {
        const int ia = inversions(a.reading_word()), ib = inversions(b.reading_word());
        return ascending ? ia < ib : ia > ib;
    });
    std::map<Tableau, int> pos;
    for (int k = 0; k < static_cast<int>(order.size()); ++k) pos.emplace(order[k], k);

    SeriesResult result;
    result.characteristic = QSymF(n);
    result.ok = true;
    for (int k = 0; k < static_cast<int>(order.size()); ++k) {
        const Tableau& t = order[k];
        result.characteristic.add(comp_of(descent_set(t, kind), n), 1);
        for (int i = 1; i <= n - 1; ++i) {
            const HeckeResult r = apply(kind, i, t);
            if (r.tag == HeckeTag::Swapped && pos.at(*r.tableau) <= k) result.ok = false;
        }
    }
    if (!(result.characteristic == char_tableaux(shape, kind, false))) result.ok = false;
    return result;
}

namespace {

// Indices reachable from `start` by swap transitions of the given action.
std::vector<char> reachable(const std::vector<Tableau>& nodes,
                            const std::map<Tableau, int>& index, int start, DescentKind kind,
                            bool set_action) {
    const int n = nodes.empty() ? 0 : nodes.front().size();
    std::vector<char> seen(nodes.size(), 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        const int k = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n - 1; ++i) {
            const HeckeResult r =
                set_action ? apply_set_action(kind, i, nodes[k]) : apply(kind, i, nodes[k]);
            if (r.tag != HeckeTag::Swapped) continue;
            const auto it = index.find(*r.tableau);
            if (it == index.end()) continue;
            if (!seen[it->second]) {
                seen[it->second] = 1;
                queue.push_back(it->second);
            }
        }
    }
    return seen;
}

}  // namespace

bool cyclicity_check(const SkewShape& shape, DescentKind kind) {
    const auto nodes = generate_sit(shape);
    std::map<Tableau, int> index;
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k) index.emplace(nodes[k], k);

    const bool from_bottom =
        kind == DescentKind::RowStrict || kind == DescentKind::AStar;
    const Tableau generator = from_bottom ? s0(shape) : srow(shape);
    const auto seen = reachable(nodes, index, index.at(generator), kind, false);
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;

    // Independent witnesses via the straightening words.
    if (kind == DescentKind::RowStrict) {
        for (const Tableau& t : nodes) {
            const HeckeResult r = apply_word(kind, straighten_from_bottom(t), generator);
            if (r.tag == HeckeTag::Zero || *r.tableau != t) return false;
        }
    } else if (kind == DescentKind::DualImmaculate) {
        for (const Tableau& t : nodes) {
            GeneratorWord word = straighten_to_top(t);
            std::reverse(word.indices.begin(), word.indices.end());
            const HeckeResult r = apply_word(kind, word, generator);
            if (r.tag == HeckeTag::Zero || *r.tableau != t) return false;
        }
    }
    return true;
}

bool set_cyclicity_check(const SkewShape& shape) {
    const auto nodes = generate_set(shape);
    std::map<Tableau, int> index;
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k) index.emplace(nodes[k], k);
    for (int start = 0; start < static_cast<int>(nodes.size()); ++start) {
        const auto seen = reachable(nodes, index, start, DescentKind::RowStrict, false);
        if (std::find(seen.begin(), seen.end(), 0) == seen.end()) return true;
    }
    return nodes.empty();
}

ClosureReport closure_check(const SkewShape& shape) {
    ClosureReport report;
    report.set_closed_rowstrict = true;
    report.set_closed_astar = true;
    report.nset_closed_dual = true;
    report.nset_closed_abarstar = true;
    const int n = shape.cell_count();
    for (const Tableau& t : generate_sit(shape)) {
        const bool in_set = is_set(t);
        for (int i = 1; i <= n - 1; ++i) {
            if (in_set) {
                for (DescentKind kind : {DescentKind::RowStrict, DescentKind::AStar}) {
                    const HeckeResult r = apply(kind, i, t);
                    if (r.tag == HeckeTag::Swapped && !is_set(*r.tableau)) {
                        if (kind == DescentKind::RowStrict) report.set_closed_rowstrict = false;
                        else report.set_closed_astar = false;
                    }
                }
            } else {
                for (DescentKind kind : {DescentKind::DualImmaculate, DescentKind::ABarStar}) {
                    const HeckeResult r = apply(kind, i, t);
                    if (r.tag == HeckeTag::Swapped && is_set(*r.tableau)) {
                        if (kind == DescentKind::DualImmaculate) report.nset_closed_dual = false;
                        else report.nset_closed_abarstar = false;
                    }
                }
            }
        }
    }
    return report;
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long multinomial(int total, const std::vector<int>& parts) {
    long long value = factorial(total);
    for (int p : parts) value /= factorial(p);
    return value;
}

}  // namespace

SitCountReport sit_count(const SkewShape& shape) {
    SitCountReport report;
    report.by_generation = static_cast<long long>(generate_sit(shape).size());

    const Composition& alpha = shape.outer();
    const Composition& beta = shape.inner();
    const int k = beta.length();
    const int ell = alpha.length();

    std::vector<int> gamma_parts;
    for (int i = k + 1; i <= ell; ++i) gamma_parts.push_back(alpha.part(i));
    const Composition gamma(gamma_parts);
    const int gamma_size = gamma.size();

    long long sit_gamma = 1;
    if (gamma.length() > 0) {
        long long denom = gamma_size;
        long long partial = 0;
        // The partial-sum factors stop at the second-to-last part: the full
        // sum would contribute a zero factor.
        for (int t = 1; t <= gamma.length() - 1; ++t) {
            partial += gamma.part(t);
            denom *= gamma_size - partial;
        }
        for (int i = 1; i <= gamma.length(); ++i) denom *= factorial(gamma.part(i) - 1);
        sit_gamma = factorial(gamma_size) / denom;
        report.notes.push_back(
            "hook factor evaluated with partial sums over the first " +
            std::to_string(gamma.length() - 1) + " rows of the upper shape");
    }

    std::vector<int> mult_parts{gamma_size};
    for (int i = k; i >= 1; --i) mult_parts.push_back(alpha.part(i) - beta.part(i));
    // Multinomial over the skew cell count, not |alpha|.
    report.formula_value = sit_gamma * multinomial(shape.cell_count(), mult_parts);
    if (beta.size() > 0)
        report.notes.push_back("multinomial taken over the skew cell count " +
                               std::to_string(shape.cell_count()));

    if (k == ell) {
        std::vector<int> diff;
        for (int i = 1; i <= ell; ++i) diff.push_back(alpha.part(i) - beta.part(i));
        report.multinomial_value = multinomial(shape.cell_count(), diff);
    }
    report.formula_agrees = report.formula_value == report.by_generation;
    return report;
}

std::vector<SkewShape> all_skew_shapes(int max_n) {
    std::vector<SkewShape> shapes;
    for (int n = 1; n <= max_n; ++n)
        for (const Composition& alpha : compositions_of(n))
            for (const Composition& beta : contained_compositions(alpha))
                shapes.emplace_back(alpha, beta);
    return shapes;
}

}  // namespace imm
