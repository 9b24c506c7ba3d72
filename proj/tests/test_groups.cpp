#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhk/errors.hpp"
#include "bhk/groups.hpp"
#include "bhk/verify.hpp"

#include <algorithm>
#include <set>

using namespace bhk;

namespace {

const Int kCap = 1000000;

RatVector rv(std::initializer_list<Rat> entries) { return RatVector(entries); }

DiagonalGroup cyclic_third(std::size_t n) {
    RatVector g(n, Rat(1, 3));
    return DiagonalGroup::from_generators(n, {g});
}

} // namespace

TEST_CASE("group construction on pinned generators") {
    const DiagonalGroup trivial = DiagonalGroup::from_generators(3, {});
    CHECK(trivial.order() == 1);
    CHECK(trivial.lattice_basis() == RatMatrix::identity(3));

    CHECK(cyclic_third(3).order() == 3);

    const DiagonalGroup full = DiagonalGroup::from_generators(
        3, {rv({Rat(1, 3), Rat(0), Rat(0)}), rv({Rat(0), Rat(1, 3), Rat(0)}),
            rv({Rat(0), Rat(0), Rat(1, 3)})});
    CHECK(full.order() == 27);

    CHECK_THROWS_AS(DiagonalGroup::from_generators(3, {rv({Rat(1, 2)})}), dimension_error);
}

TEST_CASE("dual lattice on pinned lattices") {
    SUBCASE("Z^3 is self-dual") {
        CHECK(dual_lattice(RatMatrix::identity(3)) == RatMatrix::identity(3));
    }
    SUBCASE("dual of the cyclic-third lattice, brute-force pairing oracle") {
        const DiagonalGroup j = cyclic_third(3);
        const RatMatrix dual = dual_lattice(j.lattice_basis());
        // index 3 in Z^3
        CHECK(rat_det(dual) * rat_det(j.lattice_basis()) == 1);
        for (long long x = -3; x <= 3; ++x)
            for (long long y = -3; y <= 3; ++y)
                for (long long z = -3; z <= 3; ++z) {
                    const RatVector u{Rat(x), Rat(y), Rat(z)};
                    bool pairs_integrally = true;
                    for (std::size_t col = 0; col < 3 && pairs_integrally; ++col)
                        pairs_integrally = is_integral(dot(u, j.lattice_basis().col(col)));
                    const bool expected = (x + y + z) % 3 == 0;
                    CHECK(pairs_integrally == expected);
                    CHECK(lattice_contains(dual, u) == expected);
                }
    }
    SUBCASE("scaling rule") {
        RatMatrix third = RatMatrix::identity(3);
        for (std::size_t i = 0; i < 3; ++i) third(i, i) = Rat(1, 3);
        RatMatrix triple = RatMatrix::identity(3);
        for (std::size_t i = 0; i < 3; ++i) triple(i, i) = 3;
        CHECK(dual_lattice(third) == triple);
    }
}

TEST_CASE("group equality") {
    const DiagonalGroup j = cyclic_third(3);
    CHECK(group_equal(j, j));

    const DiagonalGroup j_inverse = DiagonalGroup::from_generators(
        3, {rv({Rat(2, 3), Rat(2, 3), Rat(2, 3)})});
    CHECK(group_equal(j, j_inverse));

    const DiagonalGroup other = DiagonalGroup::from_generators(
        3, {rv({Rat(1, 3), Rat(2, 3), Rat(0)})});
    CHECK_FALSE(group_equal(j, other));
    // element-set oracle agrees
    CHECK(j.elements(kCap) == j_inverse.elements(kCap));
    CHECK(j.elements(kCap) != other.elements(kCap));

    CHECK_THROWS_AS(group_equal(j, cyclic_third(2)), dimension_error);
}

TEST_CASE("elementary divisors") {
    CHECK(DiagonalGroup::from_generators(3, {}).elementary_divisors().empty());
    CHECK(cyclic_third(3).elementary_divisors() == std::vector<Int>{3});

    // kernel lattice of the descended cubic: generated by (1/3,0,2/3), (0,1/3,2/3)
    const DiagonalGroup gt = DiagonalGroup::from_generators(
        3, {rv({Rat(1, 3), Rat(0), Rat(2, 3)}), rv({Rat(0), Rat(1, 3), Rat(2, 3)})});
    CHECK(gt.order() == 9);
    CHECK(gt.elementary_divisors() == std::vector<Int>{3, 3});
}

TEST_CASE("element enumeration") {
    CHECK(DiagonalGroup::from_generators(3, {}).elements(kCap) ==
          std::vector<RatVector>{RatVector(3)});

    const auto j_elements = cyclic_third(3).elements(kCap);
    CHECK(j_elements == std::vector<RatVector>{
                            rv({Rat(0), Rat(0), Rat(0)}),
                            rv({Rat(1, 3), Rat(1, 3), Rat(1, 3)}),
                            rv({Rat(2, 3), Rat(2, 3), Rat(2, 3)}),
                        });

    const DiagonalGroup gt = DiagonalGroup::from_generators(
        3, {rv({Rat(1, 3), Rat(0), Rat(2, 3)}), rv({Rat(0), Rat(1, 3), Rat(2, 3)})});
    const auto gt_elements = gt.elements(kCap);
    CHECK(gt_elements.size() == 9);
    for (const RatVector& e : gt_elements)
        for (const Rat& entry : e) CHECK(3 % den(entry) == 0);

    CHECK_THROWS_AS(gt.elements(Int(4)), cap_error);
}

TEST_CASE("element sets close under addition and negation, size = order") {
    std::vector<DiagonalGroup> groups{
        cyclic_third(3),
        DiagonalGroup::from_generators(3, {rv({Rat(1, 2), Rat(1, 2), Rat(0)}),
                                           rv({Rat(0), Rat(1, 3), Rat(1, 3)})}),
        DiagonalGroup::from_generators(2, {rv({Rat(1, 4), Rat(1, 2)})}),
    };
    for (const DiagonalGroup& g : groups) {
        const auto elements = g.elements(kCap);
        CHECK(Int(elements.size()) == g.order());
        std::set<RatVector> universe(elements.begin(), elements.end());
        for (const RatVector& a : elements) {
            RatVector neg(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) neg[i] = frac_mod1(-a[i]);
            CHECK(universe.count(neg) == 1);
            for (const RatVector& b : elements) {
                RatVector sum(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) sum[i] = frac_mod1(a[i] + b[i]);
                CHECK(universe.count(sum) == 1);
            }
        }
    }
}

TEST_CASE("biduality and determinant-order relation") {
    std::vector<DiagonalGroup> groups{
        DiagonalGroup::from_generators(3, {}),
        cyclic_third(3),
        DiagonalGroup::from_generators(3, {rv({Rat(1, 3), Rat(0), Rat(0)}),
                                           rv({Rat(0), Rat(1, 3), Rat(0)}),
                                           rv({Rat(0), Rat(0), Rat(1, 3)})}),
        DiagonalGroup::from_generators(2, {rv({Rat(1, 6), Rat(5, 6)})}),
        DiagonalGroup::from_generators(4, {rv({Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)}),
                                           rv({Rat(0), Rat(1, 4), Rat(3, 4), Rat(0)})}),
    };
    for (const DiagonalGroup& g : groups) {
        const RatMatrix& basis = g.lattice_basis();
        CHECK(dual_lattice(dual_lattice(basis)) == basis);
        Rat d = rat_det(basis);
        if (d < 0) d = -d;
        CHECK(Rat(g.order()) * d == 1);
    }
}

TEST_CASE("generator list order and duplicates do not matter") {
    const auto gens = std::vector<RatVector>{rv({Rat(1, 2), Rat(0), Rat(1, 2)}),
                                             rv({Rat(1, 3), Rat(1, 3), Rat(0)})};
    const DiagonalGroup a = DiagonalGroup::from_generators(3, gens);
    const DiagonalGroup b = DiagonalGroup::from_generators(
        3, {gens[1], gens[0], gens[1], gens[0], gens[0]});
    CHECK(group_equal(a, b));
}

TEST_CASE("kernel group with a torus factor refuses group conversion") {
    KernelGroup k;
    k.ambient_rank = 3;
    k.torus_rank = 1;
    k.finite_divisors = {2};
    CHECK(k.finite_order() == 2);
    CHECK_FALSE(k.is_finite());
    CHECK_THROWS_AS(k.as_group(), precondition_error);
}

TEST_CASE("subgroup enumeration covers the classical counts") {
    // (Z/3)^2 has 1 + 4 + 1 = 6 subgroups
    const DiagonalGroup g33 = DiagonalGroup::from_generators(
        2, {rv({Rat(1, 3), Rat(0)}), rv({Rat(0), Rat(1, 3)})});
    CHECK(all_subgroups(g33, Int(81)).size() == 6);

    // Z/4 x Z/2 has 8 subgroups
    const DiagonalGroup g42 = DiagonalGroup::from_generators(
        2, {rv({Rat(1, 4), Rat(0)}), rv({Rat(0), Rat(1, 2)})});
    CHECK(all_subgroups(g42, Int(81)).size() == 8);

    // order cap filters: subgroups of (Z/3)^2 of order <= 3
    CHECK(all_subgroups(g33, Int(3)).size() == 5);
}
