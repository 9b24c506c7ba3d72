#include "bhk/model.hpp"

#include "bhk/errors.hpp"

#include <algorithm>

namespace bhk {

std::string torus_tag_name(TorusTag tag) {
    switch (tag) {
    case TorusTag::Source: return "source";
    case TorusTag::Dual: return "dual";
    case TorusTag::QuotientFm: return "quotient-fm";
    case TorusTag::QuotientFmTau: return "quotient-fm-tau";
    }
    return "?";
}

CharacterSum CharacterSum::from_columns(const IntMatrix& m, TorusTag tag) {
    CharacterSum s;
    s.tag = tag;
    s.ambient = m.rows();
    s.characters.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) s.characters.push_back(m.col(j));
    std::sort(s.characters.begin(), s.characters.end());
    return s;
}

CharacterSum CharacterSum::from_rows(const IntMatrix& m, TorusTag tag) {
    return from_columns(m.transpose(), tag);
}

bool is_invariant(const IntMatrix& p, const DiagonalGroup& g) {
    if (p.rows() != g.ambient_rank())
        throw dimension_error("exponent matrix rows != group ambient rank");
    const RatMatrix& basis = g.lattice_basis();
    for (std::size_t b = 0; b < basis.cols(); ++b) {
        const RatVector v = basis.col(b);
        for (std::size_t j = 0; j < p.cols(); ++j) {
            Rat pairing = 0;
            for (std::size_t i = 0; i < p.rows(); ++i) pairing += v[i] * Rat(p(i, j));
            if (!is_integral(pairing)) return false;
        }
    }
    return true;
}

Factorization factorize(const IntMatrix& p, const DiagonalGroup& g) {
    if (p.rows() != g.ambient_rank())
        throw dimension_error("exponent matrix rows != group ambient rank");
    const RatMatrix m = dual_lattice(g.lattice_basis());
    if (!m.is_integral())
        throw invariant_error("invariant character lattice escapes Z^N");
    const IntMatrix a = m.to_int();
    const RatMatrix a_inv = rat_inverse(m);
    const RatMatrix btau_rat = a_inv * RatMatrix::from_int(p);
    if (!btau_rat.is_integral())
        throw invariant_error("superpotential does not descend through the given group");
    Factorization f{a, btau_rat.to_int()};
    if (!(f.a * f.btau == p))
        throw invariant_error("factorization check A * Btau == P failed");
    return f;
}

CharacterSum quotient_superpotential(const Factorization& f) {
    return CharacterSum::from_columns(f.btau, TorusTag::QuotientFm);
}

QuotientLGModel::QuotientLGModel(ExponentMatrix w, DiagonalGroup g)
    : w_(std::move(w)), g_(std::move(g)) {
    if (w_.variable_count() != g_.ambient_rank())
        throw dimension_error("variable count != group ambient rank");
    if (!is_invariant(w_.matrix(), g_))
        throw precondition_error("superpotential is not invariant under the group");
}

} // namespace bhk
