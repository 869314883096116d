#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "immaculate/tableau.hpp"

namespace imm {

using Int = boost::multiprecision::cpp_int;

/// An element of QSym_n in the fundamental basis, with exact integer
/// coefficients.  Keys are compositions of the degree; zero coefficients
/// are never stored.
class QSymF {
public:
    explicit QSymF(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Composition, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Composition& comp, const Int& c);
    QSymF& operator+=(const QSymF& other);

    bool operator==(const QSymF&) const = default;

private:
    int degree_;
    std::map<Composition, Int> coeffs_;
};

/// The involution sending F_alpha to F of the complement composition.
QSymF psi(const QSymF& f);

/// An exact multivariate polynomial over an ordered, finite variable list.
/// Exponent vectors are dense and match the variable list length.
class TruncatedPoly {
public:
    explicit TruncatedPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exp, const Int& c);
    TruncatedPoly& operator+=(const TruncatedPoly& other);
    TruncatedPoly operator*(const TruncatedPoly& other) const;

    /// Same terms under a different variable list of equal length.
    TruncatedPoly with_vars(std::vector<std::string> vars) const;

    bool operator==(const TruncatedPoly&) const = default;

private:
    std::vector<std::string> vars_;
    std::map<std::vector<int>, Int> terms_;
};

std::vector<std::string> x_vars(int count);
std::vector<std::string> xy_vars(int xcount, int ycount);

TruncatedPoly poly_one(std::vector<std::string> vars);

/// Expansion of the fundamental quasisymmetric function F_alpha in the
/// first `vars` variables: monomials over weakly increasing index chains
/// with strict rises at set(alpha).
TruncatedPoly fundamental_poly(const Composition& alpha, int vars);

/// Sum of F_{comp(Des_kind(T))} over SIT (or SET) of the shape.
QSymF char_tableaux(const SkewShape& shape, DescentKind kind, bool restrict_to_set);

/// Sum of x^T over the fillings of the shape in the family with entries
/// bounded by `vars`.
TruncatedPoly gf_fillings(const SkewShape& shape, FillingFamily family, int vars);

/// Linear extension of fundamental_poly.
TruncatedPoly to_poly(const QSymF& f, int vars);

/// Skew Schur polynomial s_{lambda/mu} in `vars` variables, computed by an
/// independent semistandard-tableau enumeration (rows weakly increase,
/// columns strictly increase).  Requires partitions mu inside lambda.
TruncatedPoly skew_schur_poly(const Composition& lambda, const Composition& mu, int vars);

/// Conjugate of a partition.
Composition transpose(const Composition& lambda);

/// Product over the rows of complete homogeneous ('h') or elementary ('e')
/// symmetric polynomials of degree outer_i - inner_i.  Requires the inner
/// and outer compositions to have the same length.
TruncatedPoly hooked_product(const SkewShape& shape, char kind, int vars);

/// Checks the two-alphabet expansion for the dual immaculate or row-strict
/// kind: the generating function of alpha over the concatenated alphabet
/// X,Y equals the sum over all beta inside alpha of the straight generating
/// function of beta over X times the skew one of alpha/beta over Y.
bool two_alphabet_check(const Composition& alpha, DescentKind kind, int xvars, int yvars);

/// All compositions contained in alpha (all lengths 0..length(alpha)).
std::vector<Composition> contained_compositions(const Composition& alpha);

/// All compositions of n.
std::vector<Composition> compositions_of(int n);

}  // namespace imm
