#pragma once

#include "bhk/matrix.hpp"

#include <optional>
#include <vector>

namespace bhk {

/// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
/// non-negative, d1 | d2 | ...
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// Diagonal entries of d, in order.
    IntVector diagonal() const;
    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

/// Exact determinant (Bareiss). Throws dimension_error unless square.
Int det(const IntMatrix& m);

/// Adjugate matrix: m * adjugate(m) = det(m) * I exactly, also for singular m.
IntMatrix adjugate(const IntMatrix& m);

SnfDecomposition snf(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice generated over Z by the
/// columns of `gens`: pivot rows strictly increase, pivots are positive, and
/// in each pivot row the entries left of the pivot are reduced into
/// [0, pivot). Zero columns are dropped, so the result has rank-many columns.
/// Two generating sets of the same lattice give identical output.
IntMatrix hnf_columns(const IntMatrix& gens);

/// Canonical basis of the full-rank lattice in Q^ambient generated over Z by
/// `generators`. Throws rank_error when the span is rank-deficient and
/// dimension_error on a length mismatch.
RatMatrix hnf_basis(const std::vector<RatVector>& generators, std::size_t ambient);

/// Z-basis (as columns, HNF-canonical) of {x integral : m * x = 0}.
/// The basis is empty (0 columns) when the kernel is trivial.
IntMatrix integer_kernel(const IntMatrix& m);

/// Exact rational solution of m * x = rhs, or nullopt when inconsistent.
/// For underdetermined systems one particular solution is returned.
std::optional<RatVector> solve_exact(const IntMatrix& m, const RatVector& rhs);

/// Exact inverse; throws rank_error when singular.
RatMatrix rat_inverse(const RatMatrix& m);

Rat rat_det(const RatMatrix& m);

} // namespace bhk
