#include "immaculate/qsym.hpp"

#include <algorithm>
#include <functional>

namespace imm {

void QSymF::add(const Composition& comp, const Int& c) {
    if (comp.size() != degree_)
        throw std::invalid_argument("composition degree mismatch");
    if (c == 0) return;
    Int& slot = coeffs_[comp];
    slot += c;
    if (slot == 0) coeffs_.erase(comp);
}

QSymF& QSymF::operator+=(const QSymF& other) {
    if (other.degree_ != degree_) throw std::invalid_argument("degree mismatch");
    for (const auto& [comp, c] : other.coeffs_) add(comp, c);
    return *this;
}

QSymF psi(const QSymF& f) {
    QSymF out(f.degree());
    for (const auto& [comp, c] : f.coeffs()) out.add(complement(comp), c);
    return out;
}

void TruncatedPoly::add_term(const std::vector<int>& exp, const Int& c) {
    if (exp.size() != vars_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    Int& slot = terms_[exp];
    slot += c;
    if (slot == 0) terms_.erase(exp);
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
    if (other.vars_ != vars_) throw std::invalid_argument("variable list mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& other) const {
    if (other.vars_ != vars_) throw std::invalid_argument("variable list mismatch");
    TruncatedPoly out(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            std::vector<int> exp(ea.size());
            for (size_t k = 0; k < exp.size(); ++k) exp[k] = ea[k] + eb[k];
            out.add_term(exp, ca * cb);
        }
    return out;
}

TruncatedPoly TruncatedPoly::with_vars(std::vector<std::string> vars) const {
    if (vars.size() != vars_.size()) throw std::invalid_argument("variable count mismatch");
    TruncatedPoly out(std::move(vars));
    for (const auto& [exp, c] : terms_) out.add_term(exp, c);
    return out;
}

std::vector<std::string> x_vars(int count) {
    std::vector<std::string> vars;
    for (int i = 1; i <= count; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

std::vector<std::string> xy_vars(int xcount, int ycount) {
    std::vector<std::string> vars = x_vars(xcount);
    for (int i = 1; i <= ycount; ++i) vars.push_back("y" + std::to_string(i));
    return vars;
}

TruncatedPoly poly_one(std::vector<std::string> vars) {
    TruncatedPoly out(std::move(vars));
    out.add_term(std::vector<int>(out.vars().size(), 0), 1);
    return out;
}

TruncatedPoly fundamental_poly(const Composition& alpha, int vars) {
    if (vars < 0) throw std::invalid_argument("vars must be nonnegative");
    const int n = alpha.size();
    TruncatedPoly out(x_vars(vars));
    std::vector<char> strict_after(n + 1, 0);
    for (int s : set_of(alpha)) strict_after[s] = 1;

    std::vector<int> exp(vars, 0);
    std::function<void(int, int)> walk = [&](int pos, int min_index) {
        if (pos > n) {
            out.add_term(exp, 1);
            return;
        }
        for (int i = min_index; i <= vars; ++i) {
            ++exp[i - 1];
            walk(pos + 1, strict_after[pos] ? i + 1 : i);
            --exp[i - 1];
        }
    };
    walk(1, 1);
    return out;
}

QSymF char_tableaux(const SkewShape& shape, DescentKind kind, bool restrict_to_set) {
    const int n = shape.cell_count();
    QSymF out(n);
    const auto tableaux = restrict_to_set ? generate_set(shape) : generate_sit(shape);
    for (const Tableau& t : tableaux) out.add(comp_of(descent_set(t, kind), n), 1);
    return out;
}

TruncatedPoly gf_fillings(const SkewShape& shape, FillingFamily family, int vars) {
    TruncatedPoly out(x_vars(vars));
    for (const Tableau& t : generate_fillings(shape, family, vars)) {
        std::vector<int> exp(vars, 0);
        for (const auto& row : t.rows())
            for (int e : row) ++exp[e - 1];
        out.add_term(exp, 1);
    }
    return out;
}

TruncatedPoly to_poly(const QSymF& f, int vars) {
    TruncatedPoly out(x_vars(vars));
    for (const auto& [comp, c] : f.coeffs()) {
        TruncatedPoly basis = fundamental_poly(comp, vars);
        for (const auto& [exp, b] : basis.terms()) out.add_term(exp, b * c);
    }
    return out;
}

Composition transpose(const Composition& lambda) {
    if (!lambda.is_partition()) throw std::invalid_argument("transpose requires a partition");
    std::vector<int> parts;
    for (int j = 1; j <= lambda.part(1); ++j) {
        int count = 0;
        for (int i = 1; i <= lambda.length(); ++i)
            if (lambda.part(i) >= j) ++count;
        parts.push_back(count);
    }
    return Composition(std::move(parts));
}

TruncatedPoly skew_schur_poly(const Composition& lambda, const Composition& mu, int vars) {
    if (!lambda.is_partition() || !mu.is_partition())
        throw std::invalid_argument("skew Schur polynomial requires partitions");
    if (!contains(mu, lambda)) throw std::invalid_argument("mu not contained in lambda");

    // Semistandard fillings in the English convention: row r runs over
    // columns mu_r+1..lambda_r, rows weakly increase left to right, and each
    // cell exceeds the cell of the previous (longer) row in its column.
    const int n_rows = lambda.length();
    std::vector<std::vector<int>> values(n_rows);
    for (int r = 1; r <= n_rows; ++r) values[r - 1].assign(lambda.part(r) - mu.part(r), 0);

    TruncatedPoly out(x_vars(vars));
    std::vector<int> exp(vars, 0);
    std::function<void(int, int)> fill_row = [&](int r, int k) {
        if (r > n_rows) {
            out.add_term(exp, 1);
            return;
        }
        if (k == static_cast<int>(values[r - 1].size())) {
            fill_row(r + 1, 0);
            return;
        }
        const int col = mu.part(r) + 1 + k;
        int lo = 1;
        if (k > 0) lo = values[r - 1][k - 1];
        if (r > 1 && col > mu.part(r - 1)) {
            const int above = values[r - 2][col - 1 - mu.part(r - 1)];
            lo = std::max(lo, above + 1);
        }
        for (int v = lo; v <= vars; ++v) {
            values[r - 1][k] = v;
            ++exp[v - 1];
            fill_row(r, k + 1);
            --exp[v - 1];
        }
    };
    fill_row(1, 0);
    return out;
}

namespace {

// Complete homogeneous (weak == false is unused) or elementary symmetric
// polynomial of degree d in `vars` variables.
TruncatedPoly symmetric_poly(int d, int vars, bool elementary) {
    TruncatedPoly out(x_vars(vars));
    std::vector<int> exp(vars, 0);
    std::function<void(int, int)> pick = [&](int left, int min_index) {
        if (left == 0) {
            out.add_term(exp, 1);
            return;
        }
        for (int i = min_index; i <= vars; ++i) {
            ++exp[i - 1];
            pick(left - 1, elementary ? i + 1 : i);
            --exp[i - 1];
        }
    };
    pick(d, 1);
    return out;
}

}  // namespace

TruncatedPoly hooked_product(const SkewShape& shape, char kind, int vars) {
    if (kind != 'h' && kind != 'e') throw std::invalid_argument("kind must be 'h' or 'e'");
    if (shape.outer().length() != shape.inner().length())
        throw std::invalid_argument("hooked product requires equal outer and inner lengths");
    TruncatedPoly out = poly_one(x_vars(vars));
    for (int i = 1; i <= shape.outer().length(); ++i)
        out = out * symmetric_poly(shape.row_length(i), vars, kind == 'e');
    return out;
}

std::vector<Composition> contained_compositions(const Composition& alpha) {
    std::vector<Composition> out;
    out.push_back(Composition());
    std::vector<int> parts;
    std::function<void(int)> extend = [&](int next_row) {
        if (next_row > alpha.length()) return;
        for (int p = 1; p <= alpha.part(next_row); ++p) {
            parts.push_back(p);
            out.push_back(Composition(parts));
            extend(next_row + 1);
            parts.pop_back();
        }
    };
    extend(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> parts;
    std::function<void(int)> extend = [&](int left) {
        if (left == 0) {
            out.push_back(Composition(parts));
            return;
        }
        for (int p = 1; p <= left; ++p) {
            parts.push_back(p);
            extend(left - p);
            parts.pop_back();
        }
    };
    extend(n);
    return out;
}

bool two_alphabet_check(const Composition& alpha, DescentKind kind, int xvars, int yvars) {
    if (kind != DescentKind::DualImmaculate && kind != DescentKind::RowStrict)
        throw std::invalid_argument("two-alphabet expansion applies to the di and rdi kinds");
    const FillingFamily family = family_for(kind, /*extended=*/false);
    const auto names = xy_vars(xvars, yvars);

    const TruncatedPoly lhs =
        gf_fillings(SkewShape(alpha), family, xvars + yvars).with_vars(names);

    TruncatedPoly rhs(names);
    for (const Composition& beta : contained_compositions(alpha)) {
        TruncatedPoly xpart = gf_fillings(SkewShape(beta), family, xvars);
        TruncatedPoly ypart = gf_fillings(SkewShape(alpha, beta), family, yvars);
        TruncatedPoly term(names);
        for (const auto& [ex, cx] : xpart.terms())
            for (const auto& [ey, cy] : ypart.terms()) {
                std::vector<int> exp = ex;
                exp.insert(exp.end(), ey.begin(), ey.end());
                term.add_term(exp, cx * cy);
            }
        rhs += term;
    }
    return lhs == rhs;
}

}  // namespace imm
