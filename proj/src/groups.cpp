#include "bhk/groups.hpp"

#include "bhk/errors.hpp"

#include <algorithm>
#include <set>

namespace bhk {

RatMatrix dual_lattice(const RatMatrix& basis) {
    if (basis.rows() != basis.cols()) throw rank_error("dual lattice needs a full-rank square basis");
    const RatMatrix dual = rat_inverse(basis).transpose();
    std::vector<RatVector> cols;
    cols.reserve(dual.cols());
    for (std::size_t j = 0; j < dual.cols(); ++j) cols.push_back(dual.col(j));
    return hnf_basis(cols, dual.rows());
}

bool lattice_contains(const RatMatrix& basis, const RatVector& v) {
    if (v.size() != basis.rows()) throw dimension_error("vector length != ambient dimension");
    const RatVector coords = rat_inverse(basis).apply(v);
    return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return is_integral(c); });
}

bool lattice_subset(const RatMatrix& sub, const RatMatrix& basis) {
    for (std::size_t j = 0; j < sub.cols(); ++j)
        if (!lattice_contains(basis, sub.col(j))) return false;
    return true;
}

DiagonalGroup::DiagonalGroup(std::size_t ambient_rank, RatMatrix basis, Int order)
    : ambient_rank_(ambient_rank), basis_(std::move(basis)), order_(std::move(order)) {}

DiagonalGroup DiagonalGroup::from_generators(std::size_t ambient_rank,
                                             const std::vector<RatVector>& gens) {
    if (ambient_rank == 0) throw dimension_error("ambient rank must be positive");
    std::vector<RatVector> all;
    all.reserve(gens.size() + ambient_rank);
    for (std::size_t i = 0; i < ambient_rank; ++i) {
        RatVector e(ambient_rank);
        e[i] = 1;
        all.push_back(std::move(e));
    }
    for (const RatVector& g : gens) {
        if (g.size() != ambient_rank)
            throw dimension_error("generator length != ambient rank");
        all.push_back(g);
    }
    return from_lattice(ambient_rank, hnf_basis(all, ambient_rank));
}

DiagonalGroup DiagonalGroup::from_lattice(std::size_t ambient_rank, const RatMatrix& basis) {
    std::vector<RatVector> cols;
    cols.reserve(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) cols.push_back(basis.col(j));
    RatMatrix canonical = hnf_basis(cols, ambient_rank);
    for (std::size_t i = 0; i < ambient_rank; ++i) {
        RatVector e(ambient_rank);
        e[i] = 1;
        if (!lattice_contains(canonical, e))
            throw invariant_error("exponent lattice does not contain Z^N");
    }
    const Rat d = rat_det(canonical);
    const Rat order = Rat(1) / (d < 0 ? Rat(-d) : d);
    if (!is_integral(order)) throw invariant_error("lattice index over Z^N is not an integer");
    return DiagonalGroup(ambient_rank, std::move(canonical), num(order));
}

bool DiagonalGroup::contains(const RatVector& element) const {
    return lattice_contains(basis_, element);
}

std::vector<Int> DiagonalGroup::elementary_divisors() const {
    // Z^N expressed in the lattice basis is an integer relation matrix whose
    // Smith form classifies Lambda_G / Z^N.
    const IntMatrix relation = rat_inverse(basis_).to_int();
    const SnfDecomposition s = snf(relation);
    std::vector<Int> divisors;
    for (const Int& d : s.diagonal())
        if (d > 1) divisors.push_back(d);
    return divisors;
}

std::vector<RatVector> DiagonalGroup::generators_mod1() const {
    std::vector<RatVector> gens;
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
        RatVector g = basis_.col(j);
        bool zero = true;
        for (Rat& e : g) {
            e = frac_mod1(e);
            if (e != 0) zero = false;
        }
        if (!zero) gens.push_back(std::move(g));
    }
    return gens;
}

std::vector<RatVector> DiagonalGroup::elements(const Int& cap) const {
    if (order_ > cap)
        throw cap_error("group of order " + order_.str() + " exceeds enumeration cap " + cap.str());
    std::set<RatVector> seen;
    seen.insert(RatVector(ambient_rank_));
    const std::vector<RatVector> gens = generators_mod1();
    std::vector<RatVector> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<RatVector> next;
        for (const RatVector& e : frontier)
            for (const RatVector& g : gens) {
                RatVector s(ambient_rank_);
                for (std::size_t i = 0; i < ambient_rank_; ++i) s[i] = frac_mod1(e[i] + g[i]);
                if (seen.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    if (Int(seen.size()) != order_)
        throw invariant_error("element closure disagrees with group order");
    return {seen.begin(), seen.end()};
}

bool group_equal(const DiagonalGroup& a, const DiagonalGroup& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw dimension_error("group comparison across different ambient ranks");
    return a.lattice_basis() == b.lattice_basis();
}

bool group_subset(const DiagonalGroup& a, const DiagonalGroup& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw dimension_error("group comparison across different ambient ranks");
    return lattice_subset(a.lattice_basis(), b.lattice_basis());
}

Int KernelGroup::finite_order() const {
    Int o = 1;
    for (const Int& d : finite_divisors) o *= d;
    return o;
}

const DiagonalGroup& KernelGroup::as_group() const {
    if (!finite_group)
        throw precondition_error("kernel has a torus factor of dimension " +
                                 std::to_string(torus_rank) + "; finite group required");
    return *finite_group;
}

} // namespace bhk
