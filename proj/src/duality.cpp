#include "bhk/duality.hpp"

#include "bhk/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bhk {

DualModel dualize(const IntMatrix& p, const DiagonalGroup& g) {
    const Factorization f = factorize(p, g);
    const std::size_t monomials = p.cols();

    const SnfDecomposition s = snf(f.btau);
    const std::size_t rank = s.rank();

    KernelGroup gt;
    gt.ambient_rank = monomials;
    gt.torus_rank = monomials - rank;
    for (const Int& d : s.diagonal())
        if (d > 1) gt.finite_divisors.push_back(d);

    if (gt.torus_rank == 0) {
        // Finite kernel: its exponent lattice is the dual of the lattice
        // spanned by the rows of btau.
        std::vector<RatVector> rows;
        rows.reserve(f.btau.rows());
        for (std::size_t i = 0; i < f.btau.rows(); ++i) {
            const IntVector row = f.btau.row(i);
            RatVector r(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) r[j] = Rat(row[j]);
            rows.push_back(std::move(r));
        }
        const RatMatrix row_lattice = hnf_basis(rows, monomials);
        DiagonalGroup group = DiagonalGroup::from_lattice(monomials, dual_lattice(row_lattice));
        if (group.order() != gt.finite_order())
            throw invariant_error("kernel order disagrees with Smith divisors");
        gt.torsion_generators = group.generators_mod1();
        gt.finite_group = std::move(group);
    }

    return DualModel{p.transpose(), std::move(gt), f.btau.transpose(), f.a.transpose()};
}

DualModel dualize(const QuotientLGModel& model) {
    return dualize(model.matrix(), model.group());
}

DiagonalGroup krawitz_dual(const IntMatrix& p, const DiagonalGroup& g) {
    if (!p.is_square())
        throw precondition_error("transpose-side dual group needs a square exponent matrix");
    if (det(p) == 0)
        throw precondition_error("exponent matrix is singular");
    if (!is_invariant(p, g))
        throw precondition_error("group does not leave the superpotential invariant");
    const RatMatrix m = dual_lattice(g.lattice_basis());
    const RatMatrix p_inv = rat_inverse(RatMatrix::from_int(p));
    return DiagonalGroup::from_lattice(p.rows(), p_inv * m);
}

WeightLattice weight_lattice(const CharacterSum& monomials) {
    if (monomials.characters.empty())
        throw precondition_error("weight lattice of an empty character sum");
    const std::size_t n = monomials.ambient;
    const std::size_t m = monomials.characters.size();
    if (m == 1) {
        // no constraints: the full lattice of functionals
        return WeightLattice{IntMatrix::identity(n)};
    }
    IntMatrix diffs(m - 1, n);
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
            diffs(j - 1, i) = monomials.characters[j][i] - monomials.characters[0][i];
    const IntMatrix kernel = integer_kernel(diffs);
    return WeightLattice{kernel.transpose()};
}

IntVector normalize_weight_generator(const WeightLattice& w, const CharacterSum& monomials) {
    if (w.rank() != 1)
        throw precondition_error("weight lattice has rank " + std::to_string(w.rank()) +
                                 ", generator needs rank 1");
    IntVector q = w.basis_rows.row(0);
    Int g = 0;
    for (const Int& e : q) g = boost::multiprecision::gcd(g, e);
    if (g > 1)
        for (Int& e : q) e /= g;

    bool all_pos = true;
    bool all_neg = true;
    for (const IntVector& c : monomials.characters) {
        const Int pairing = dot(q, c);
        if (pairing <= 0) all_pos = false;
        if (pairing >= 0) all_neg = false;
    }
    if (all_neg) {
        for (Int& e : q) e = -e;
        return q;
    }
    if (all_pos) return q;
    // mixed signs: fall back to lexicographic positivity
    for (const Int& e : q) {
        if (e == 0) continue;
        if (e < 0)
            for (Int& x : q) x = -x;
        break;
    }
    return q;
}

CyReport is_calabi_yau(const IntMatrix& p) {
    CyReport report;
    report.square = p.is_square();
    if (!report.square) return report;

    report.determinant = det(p);
    report.invertible = report.determinant != 0;

    const IntMatrix adj = adjugate(p);
    const std::size_t n = p.rows();
    report.weights_row.assign(n, Int(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) report.weights_row[j] += adj(i, j);

    const bool all_pos = std::all_of(report.weights_row.begin(), report.weights_row.end(),
                                     [](const Int& w) { return w > 0; });
    const bool all_neg = std::all_of(report.weights_row.begin(), report.weights_row.end(),
                                     [](const Int& w) { return w < 0; });
    report.sign_uniform = all_pos || all_neg;

    const Int sum = std::accumulate(report.weights_row.begin(), report.weights_row.end(), Int(0));
    report.sum_matches_det = sum == report.determinant;
    return report;
}

} // namespace bhk
