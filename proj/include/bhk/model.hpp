#pragma once

#include "bhk/groups.hpp"
#include "bhk/polynomial.hpp"

#include <string>
#include <vector>

namespace bhk {

/// Identifies which torus a character sum lives on.
enum class TorusTag {
    Source,        // (C*)^{n+1}, characters are columns of P
    Dual,          // (C*)^{m+1}, characters are columns of the transpose
    QuotientFm,    // quotient torus with character lattice M
    QuotientFmTau, // torus with character lattice dual to M
};

std::string torus_tag_name(TorusTag tag);

/// Multiset of integer characters of a fixed torus; order-free and
/// multiplicity-aware (stored sorted).
struct CharacterSum {
    TorusTag tag = TorusTag::Source;
    std::size_t ambient = 0;
    std::vector<IntVector> characters;

    static CharacterSum from_columns(const IntMatrix& m, TorusTag tag);
    static CharacterSum from_rows(const IntMatrix& m, TorusTag tag);

    friend bool operator==(const CharacterSum& a, const CharacterSum& b) = default;
};

/// The factorization of P through the characters of the quotient torus:
/// A is the canonical basis matrix of the invariant character lattice M,
/// btau = A^{-1} P is integral, and A * btau = P exactly.
struct Factorization {
    IntMatrix a;
    IntMatrix btau;
};

/// True iff every monomial column of p pairs integrally with every basis
/// vector of the exponent lattice of g (the descent criterion).
bool is_invariant(const IntMatrix& p, const DiagonalGroup& g);

/// Factorize p through the quotient by g. Requires is_invariant(p, g).
Factorization factorize(const IntMatrix& p, const DiagonalGroup& g);

/// Monomials of the descended superpotential: the columns of btau, living
/// on the quotient torus.
CharacterSum quotient_superpotential(const Factorization& f);

/// A superpotential together with a finite diagonal group it descends
/// through. Construction enforces the descent criterion.
class QuotientLGModel {
public:
    QuotientLGModel(ExponentMatrix w, DiagonalGroup g);

    const ExponentMatrix& exponents() const { return w_; }
    const IntMatrix& matrix() const { return w_.matrix(); }
    const DiagonalGroup& group() const { return g_; }

    Factorization factorize() const { return bhk::factorize(w_.matrix(), g_); }

    friend bool operator==(const QuotientLGModel& a, const QuotientLGModel& b) = default;

private:
    ExponentMatrix w_;
    DiagonalGroup g_;
};

} // namespace bhk
