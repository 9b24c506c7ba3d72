#pragma once

#include "bhk/duality.hpp"
#include "bhk/serialize.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace bhk {

struct VerifyOptions {
    std::uint64_t seed = 0;
    Int cap = 1000000; // enumeration guard
};

/// Machine-checkable verdict for one theorem instance. The witnesses are the
/// finite data the proof reduces to (shared factor matrix, character sums,
/// weight lattices, group descriptions); serialization is deterministic.
struct Certificate {
    std::string theorem_id;
    bool pass = false;
    std::vector<std::string> diagnostics;
    Json inputs;
    Json witnesses;
    std::uint64_t seed = 0;

    Json to_json() const;
};

/// Same group on both sides forces the same canonical factor matrix A, hence
/// equal dual superpotentials restricted to the common torus. Group mismatch
/// yields a fail certificate, not an exception.
Certificate verify_equal_sups(const QuotientLGModel& a, const QuotientLGModel& b,
                              const VerifyOptions& opts = {});

/// verify_equal_sups plus equality of the dual weight lattices computed from
/// each side's factor matrix. Monomial counts may differ.
Certificate verify_main(const QuotientLGModel& a, const QuotientLGModel& b,
                        const VerifyOptions& opts = {});

/// verify_main restricted to Calabi-Yau inputs; additionally certifies that
/// the dual weight lattice is cyclic (rank 1) and records its normalized
/// generator.
Certificate verify_cy_corollary(const QuotientLGModel& a, const QuotientLGModel& b,
                                const VerifyOptions& opts = {});

/// Certifies that three routes to the transpose-side group agree: the kernel
/// description from dualize, the closed-form lattice p^{-1} * M, and a brute
/// force sweep of all candidate classes against the integrality condition.
Certificate verify_krawitz_equivalence(const QuotientLGModel& model,
                                       const VerifyOptions& opts = {});

/// Certifies that dualizing twice restores the exponent matrix and group,
/// and that order(G) * order(G^T) = |det P|.
Certificate verify_involution(const QuotientLGModel& model, const VerifyOptions& opts = {});

/// All classes v in (1/denom) Z^m mod 1 with btau * v integral, sorted.
/// Refuses (cap_error) when denom^m exceeds the cap.
std::vector<RatVector> oracle_kernel_bruteforce(const IntMatrix& btau, const Int& denom,
                                                const Int& cap = Int(1000000));

/// Floating evaluation of a character sum at a point with nonzero entries.
std::complex<double> oracle_numeric_superpotential(const CharacterSum& sum,
                                                   const std::vector<std::complex<double>>& point);

/// Numeric evaluation of the superpotential with exponent matrix p.
std::complex<double> numeric_superpotential(const IntMatrix& p,
                                            const std::vector<std::complex<double>>& point);

/// Deterministic unit-modulus points for the numeric sanity layer.
std::vector<std::vector<std::complex<double>>> random_torus_points(std::size_t count,
                                                                   std::size_t dim,
                                                                   std::uint64_t seed);

/// Full diagonal symmetry group of a square invertible exponent matrix.
DiagonalGroup symmetry_group(const IntMatrix& p);

/// Every subgroup with order <= order_cap, canonical and sorted by
/// (order, basis). element_cap guards the element enumerations.
std::vector<DiagonalGroup> all_subgroups(const DiagonalGroup& g, const Int& order_cap,
                                         const Int& element_cap = Int(1000000));

/// A bundled square invertible model (sums of one-variable, chain and cycle
/// blocks) used by the self test and the acceptance suite.
struct CorpusEntry {
    std::string name;
    std::vector<std::string> variables;
    std::string polynomial;
};

const std::vector<CorpusEntry>& corpus();

/// Largest elementary divisor (Smith exponent); 0 for the zero matrix.
Int snf_exponent(const IntMatrix& m);

struct SelftestReport {
    std::uint64_t seed = 0;
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty() && checks == passed; }
    Json to_json() const;
};

/// Runs the full invariant suite over the bundled corpus: three-route dual
/// group agreement on every invariant subgroup of order <= 81, kernel
/// brute-force oracles, boundary groups, involution and order product,
/// cyclic weight lattices for Calabi-Yau pairs, randomized certified pairs,
/// and byte-determinism of certificates.
SelftestReport selftest(std::uint64_t seed, const Int& cap = Int(1000000));

} // namespace bhk
