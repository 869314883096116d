#include "immaculate/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace imm {

HeckePoset::HeckePoset(SkewShape shape, std::vector<Tableau> nodes, std::vector<Cover> covers,
                       std::vector<int> ranks)
    : shape_(std::move(shape)),
      nodes_(std::move(nodes)),
      covers_(std::move(covers)),
      ranks_(std::move(ranks)) {
    for (const Cover& c : covers_)
        if (ranks_[c.to] != ranks_[c.from] + 1)
            throw std::logic_error("cover does not raise rank by one");
}

int HeckePoset::index_of(const Tableau& t) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), t);
    return it == nodes_.end() ? -1 : static_cast<int>(it - nodes_.begin());
}

HeckePoset build_poset(const SkewShape& shape) {
    std::vector<Tableau> nodes = generate_sit(shape);
    std::map<Tableau, int> index;
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k) index.emplace(nodes[k], k);

    const int base = inversions(s0(shape).reading_word());
    std::vector<int> ranks;
    ranks.reserve(nodes.size());
    for (const Tableau& t : nodes) ranks.push_back(inversions(t.reading_word()) - base);

    std::vector<Cover> covers;
    const int n = shape.cell_count();
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
        for (int i = 1; i <= n - 1; ++i) {
            HeckeResult r = apply(DescentKind::RowStrict, i, nodes[k]);
            if (r.tag == HeckeTag::Swapped) covers.push_back({k, index.at(*r.tableau), i});
        }
    std::sort(covers.begin(), covers.end());
    return HeckePoset(shape, std::move(nodes), std::move(covers), std::move(ranks));
}

std::vector<Cover> action_covers(const SkewShape& shape, DescentKind kind) {
    std::vector<Tableau> nodes = generate_sit(shape);
    std::map<Tableau, int> index;
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k) index.emplace(nodes[k], k);
    std::vector<Cover> covers;
    const int n = shape.cell_count();
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
        for (int i = 1; i <= n - 1; ++i) {
            HeckeResult r = apply(kind, i, nodes[k]);
            if (r.tag == HeckeTag::Swapped) covers.push_back({k, index.at(*r.tableau), i});
        }
    std::sort(covers.begin(), covers.end());
    return covers;
}

namespace {

std::vector<Tableau> extremes(const HeckePoset& p, bool minimal) {
    std::vector<char> has_edge(p.nodes().size(), 0);
    for (const Cover& c : p.covers()) has_edge[minimal ? c.to : c.from] = 1;
    std::vector<Tableau> out;
    for (size_t k = 0; k < p.nodes().size(); ++k)
        if (!has_edge[k]) out.push_back(p.nodes()[k]);
    return out;
}

}  // namespace

std::vector<Tableau> minimal_elements(const HeckePoset& p) { return extremes(p, true); }
std::vector<Tableau> maximal_elements(const HeckePoset& p) { return extremes(p, false); }

bool is_graded(const HeckePoset& p) {
    for (const Cover& c : p.covers())
        if (p.ranks()[c.to] != p.ranks()[c.from] + 1) return false;
    auto shared_rank = [&](const std::vector<Tableau>& ts) {
        int r = p.ranks()[p.index_of(ts.front())];
        for (const Tableau& t : ts)
            if (p.ranks()[p.index_of(t)] != r) return false;
        return true;
    };
    if (p.nodes().empty()) return true;
    return shared_rank(minimal_elements(p)) && shared_rank(maximal_elements(p));
}

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }
long long choose3(long long x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

}  // namespace

long long inv_s0_formula(const Composition& alpha, const Composition& beta) {
    if (!contains(beta, alpha))
        throw std::invalid_argument("inner composition not contained in outer");
    const int lb = beta.length();
    long long total = 0;
    for (int i = 1; i <= lb; ++i) total += choose2(alpha.part(i) - beta.part(i));
    for (int i = lb + 1; i <= alpha.length(); ++i) total += choose2(alpha.part(i) + i - lb - 1);
    return total - choose3(alpha.length() - lb);
}

long long rank_formula(const Composition& alpha, const Composition& beta) {
    return choose2(alpha.size() - beta.size()) - inv_s0_formula(alpha, beta);
}

HeckePoset set_subposet(const HeckePoset& p) {
    std::vector<int> remap(p.nodes().size(), -1);
    std::vector<Tableau> nodes;
    std::vector<int> ranks;
    for (size_t k = 0; k < p.nodes().size(); ++k)
        if (is_set(p.nodes()[k])) {
            remap[k] = static_cast<int>(nodes.size());
            nodes.push_back(p.nodes()[k]);
            ranks.push_back(p.ranks()[k]);
        }
    std::vector<Cover> covers;
    for (const Cover& c : p.covers())
        if (remap[c.from] >= 0 && remap[c.to] >= 0)
            covers.push_back({remap[c.from], remap[c.to], c.gen});
    return HeckePoset(p.shape(), std::move(nodes), std::move(covers), std::move(ranks));
}

std::string export_dot(const HeckePoset& p, bool highlight_set) {
    auto node_id = [](const Tableau& t) {
        std::ostringstream id;
        id << "t";
        for (int v : t.reading_word()) id << "_" << v;
        return id.str();
    };
    auto node_label = [](const Tableau& t) {
        std::ostringstream label;
        for (size_t i = 0; i < t.rows().size(); ++i) {
            if (i) label << " | ";
            const auto& row = t.rows()[i];
            if (row.empty()) label << "-";
            for (size_t k = 0; k < row.size(); ++k) {
                if (k) label << " ";
                label << row[k];
            }
        }
        return label.str();
    };

    std::ostringstream out;
    out << "digraph hecke_poset {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (const Tableau& t : p.nodes()) {
        out << "  " << node_id(t) << " [label=\"" << node_label(t) << "\"";
        if (highlight_set && is_set(t)) out << ", style=bold";
        out << "];\n";
    }
    for (const Cover& c : p.covers())
        out << "  " << node_id(p.nodes()[c.from]) << " -> " << node_id(p.nodes()[c.to])
            << " [label=\"pi_" << c.gen << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace imm
