#pragma once

#include "bhk/matrix.hpp"

#include <string>
#include <vector>

namespace bhk {

/// Exponent matrix of a superpotential: one column per monomial, one row per
/// variable, all coefficients implicitly 1. Columns are pairwise distinct and
/// stored in graded-lexicographic descending order, so equal polynomials give
/// identical matrices.
class ExponentMatrix {
public:
    /// Parses a sum of monomials over the declared variables. Grammar:
    /// monomials joined by '+', each a '*'-joined product of `var` or
    /// `var^k` factors with k >= 1. Explicit numeric coefficients, unknown
    /// variables, duplicate monomials and non-positive exponents are errors.
    static ExponentMatrix parse(const std::string& text,
                                const std::vector<std::string>& variables);

    /// Wraps an existing exponent matrix. With canonicalize = true the
    /// columns are sorted into canonical order; with false the given order
    /// is kept (used for transposed matrices, whose column order is keyed to
    /// the source). Distinctness and non-negativity are enforced either way.
    static ExponentMatrix from_matrix(IntMatrix p, std::vector<std::string> variables,
                                      bool canonicalize = true);

    std::size_t variable_count() const { return p_.rows(); }
    std::size_t monomial_count() const { return p_.cols(); }
    const IntMatrix& matrix() const { return p_; }
    const std::vector<std::string>& variables() const { return variables_; }

    /// Canonical text form; parse(polynomial_string(), variables()) is the
    /// identity.
    std::string polynomial_string() const;

    /// Names of declared variables that appear in no monomial.
    std::vector<std::string> unused_variables() const;

    friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) = default;

private:
    ExponentMatrix(IntMatrix p, std::vector<std::string> variables);

    IntMatrix p_;
    std::vector<std::string> variables_;
};

/// Graded-lex-descending comparison on exponent columns (true when a comes
/// strictly before b).
bool monomial_order_before(const IntVector& a, const IntVector& b);

} // namespace bhk
