#pragma once

#include "bhk/linalg.hpp"
#include "bhk/matrix.hpp"

#include <optional>
#include <vector>

namespace bhk {

/// Canonical basis of the dual lattice {u : u.v in Z for all v in L}, where L
/// is given by a full-rank basis matrix (columns are basis vectors).
RatMatrix dual_lattice(const RatMatrix& basis);

/// Membership test against a full-rank basis matrix (columns).
bool lattice_contains(const RatMatrix& basis, const RatVector& v);

/// True when every column of `sub` lies in the lattice spanned by `basis`.
bool lattice_subset(const RatMatrix& sub, const RatMatrix& basis);

/// A finite diagonal subgroup G of the rank-N torus, stored as the lattice
/// of exponents Lambda_G with Z^N <= Lambda_G <= Q^N in canonical HNF basis.
/// Group elements are rational vectors modulo 1 (entries in [0,1)); the
/// element for v is the diagonal torus point with phases exp(2*pi*i*v_k).
class DiagonalGroup {
public:
    /// Group generated by `gens` (rational vectors mod 1) together with Z^N.
    static DiagonalGroup from_generators(std::size_t ambient_rank,
                                         const std::vector<RatVector>& gens);

    /// Wraps a lattice already known to contain Z^N (canonicalized here).
    static DiagonalGroup from_lattice(std::size_t ambient_rank, const RatMatrix& basis);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const RatMatrix& lattice_basis() const { return basis_; }
    const Int& order() const { return order_; }

    bool contains(const RatVector& element) const;

    /// Nontrivial elementary divisors d1 | d2 | ..., product = order.
    std::vector<Int> elementary_divisors() const;

    /// All elements as canonical representatives in [0,1)^N, sorted.
    /// Throws cap_error when order > cap.
    std::vector<RatVector> elements(const Int& cap) const;

    /// Basis columns reduced mod 1 with zero vectors dropped: a generating
    /// set of the group.
    std::vector<RatVector> generators_mod1() const;

    friend bool operator==(const DiagonalGroup& a, const DiagonalGroup& b) = default;

private:
    DiagonalGroup(std::size_t ambient_rank, RatMatrix basis, Int order);

    std::size_t ambient_rank_ = 0;
    RatMatrix basis_;
    Int order_ = 1;
};

/// Equality as subgroups; throws dimension_error on ambient rank mismatch.
bool group_equal(const DiagonalGroup& a, const DiagonalGroup& b);

/// True when a is a subgroup of b (same ambient rank required).
bool group_subset(const DiagonalGroup& a, const DiagonalGroup& b);

/// Structured description of the kernel of a monomial map between tori:
/// a torus factor of dimension torus_rank times a finite group with the
/// given elementary divisors. When the kernel is finite (torus_rank == 0)
/// it is also carried as a DiagonalGroup with canonical torsion generators.
struct KernelGroup {
    std::size_t ambient_rank = 0;
    std::size_t torus_rank = 0;
    std::vector<Int> finite_divisors;            // each >= 2, divisibility chain
    std::vector<RatVector> torsion_generators;   // only when torus_rank == 0
    std::optional<DiagonalGroup> finite_group;   // only when torus_rank == 0

    Int finite_order() const;
    bool is_finite() const { return torus_rank == 0; }

    /// The finite kernel as a DiagonalGroup; throws precondition_error when
    /// the kernel has a positive-dimensional torus factor.
    const DiagonalGroup& as_group() const;
};

} // namespace bhk
