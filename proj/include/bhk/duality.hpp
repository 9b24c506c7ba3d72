#pragma once

#include "bhk/model.hpp"

namespace bhk {

/// The dual quotient model data: the transposed exponent matrix, the kernel
/// group it is quotiented by, and the two maps factoring the transpose
/// (b = btau^T and atau = a^T). Column order of ptau is keyed to the source
/// variables, not re-canonicalized, so dualizing twice restores the source.
struct DualModel {
    IntMatrix ptau;
    KernelGroup gt;
    IntMatrix b;
    IntMatrix atau;
};

/// Builds the dual model of (p, g). The kernel group is read off the Smith
/// form of btau: torus rank = (#monomials) - rank(btau), finite divisors are
/// the diagonal entries > 1, and when the kernel is finite its exponent
/// lattice is { v : btau * v integral }.
DualModel dualize(const IntMatrix& p, const DiagonalGroup& g);
DualModel dualize(const QuotientLGModel& model);

/// The transpose-side group of g with respect to a square invertible p:
/// its exponent lattice is p^{-1} * M with M the invariant character
/// lattice. Requires square invertible p and an invariant g.
DiagonalGroup krawitz_dual(const IntMatrix& p, const DiagonalGroup& g);

/// Integer functionals annihilating all differences of a set of monomial
/// characters, as a canonical lattice of row vectors.
struct WeightLattice {
    IntMatrix basis_rows; // rank x ambient
    std::size_t rank() const { return basis_rows.rows(); }
    std::size_t ambient() const { return basis_rows.cols(); }

    friend bool operator==(const WeightLattice& a, const WeightLattice& b) = default;
};

/// Weight lattice of a character sum; throws precondition_error when the
/// sum is empty.
WeightLattice weight_lattice(const CharacterSum& monomials);

/// For a rank-1 weight lattice: the gcd-1 generator, signed so that it pairs
/// positively with the monomials when all pairings share a sign, otherwise
/// lexicographically positive. Throws precondition_error when rank != 1.
IntVector normalize_weight_generator(const WeightLattice& w, const CharacterSum& monomials);

/// Report of the Calabi-Yau test on an exponent matrix.
struct CyReport {
    bool square = false;
    bool invertible = false;
    bool sign_uniform = false;
    bool sum_matches_det = false;
    IntVector weights_row; // (1,...,1) * adjugate(p); empty when not square
    Int determinant = 0;   // 0 when not square

    bool calabi_yau() const { return square && invertible && sign_uniform && sum_matches_det; }
};

CyReport is_calabi_yau(const IntMatrix& p);

} // namespace bhk
