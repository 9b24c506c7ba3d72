#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhk/duality.hpp"
#include "bhk/errors.hpp"
#include "bhk/verify.hpp"

using namespace bhk;

namespace {

const Int kCap = 1000000;

RatVector rv(std::initializer_list<Rat> entries) { return RatVector(entries); }

DiagonalGroup group3(std::initializer_list<RatVector> gens) {
    return DiagonalGroup::from_generators(3, std::vector<RatVector>(gens));
}

const std::vector<std::string> xyz{"x", "y", "z"};

ExponentMatrix fermat_cubic() { return ExponentMatrix::parse("x^3+y^3+z^3", xyz); }

DiagonalGroup j_group() { return group3({rv({Rat(1, 3), Rat(1, 3), Rat(1, 3)})}); }

DiagonalGroup maximal_third() {
    return group3({rv({Rat(1, 3), Rat(0), Rat(0)}), rv({Rat(0), Rat(1, 3), Rat(0)}),
                   rv({Rat(0), Rat(0), Rat(1, 3)})});
}

} // namespace

TEST_CASE("dual of the cubic under its boundary groups") {
    const IntMatrix p = fermat_cubic().matrix();
    SUBCASE("trivial group") {
        const DualModel d = dualize(p, group3({}));
        CHECK(d.ptau == p.transpose());
        REQUIRE(d.gt.is_finite());
        CHECK(d.gt.as_group().order() == 27);
        CHECK(d.gt.finite_divisors == std::vector<Int>{3, 3, 3});
    }
    SUBCASE("maximal group") {
        const DualModel d = dualize(p, maximal_third());
        REQUIRE(d.gt.is_finite());
        CHECK(d.gt.as_group().order() == 1);
        CHECK(d.gt.finite_divisors.empty());
    }
}

TEST_CASE("dual of the cubic under the diagonal third-roots group") {
    const IntMatrix p = fermat_cubic().matrix();
    const DualModel d = dualize(p, j_group());
    REQUIRE(d.gt.is_finite());
    CHECK(d.gt.as_group().order() == 9);
    CHECK(d.gt.finite_divisors == std::vector<Int>{3, 3});
    CHECK(d.gt.torsion_generators ==
          std::vector<RatVector>{rv({Rat(1, 3), Rat(0), Rat(2, 3)}),
                                 rv({Rat(0), Rat(1, 3), Rat(2, 3)})});

    // brute-force kernel oracle over all 27 candidate classes
    const IntMatrix btau = d.b.transpose();
    CHECK(btau == IntMatrix::from_rows({{3, 0, 0}, {0, 3, 0}, {-2, -2, 1}}));
    const auto brute = oracle_kernel_bruteforce(btau, Int(3), kCap);
    CHECK(brute.size() == 9);
    CHECK(brute == d.gt.as_group().elements(kCap));
}

TEST_CASE("rank-deficient descended matrix yields a torus factor") {
    // three monomials in two variables with a 1-dimensional relation torus
    const ExponentMatrix w = ExponentMatrix::parse("x^2 + x*y + y^2", {"x", "y"});
    const DualModel d = dualize(w.matrix(), DiagonalGroup::from_generators(2, {}));
    CHECK(d.gt.ambient_rank == 3);
    CHECK(d.gt.torus_rank == 1);
    CHECK(d.gt.finite_divisors == std::vector<Int>{2});
    CHECK_FALSE(d.gt.is_finite());
    CHECK_THROWS_AS(d.gt.as_group(), precondition_error);
}

TEST_CASE("closed-form transpose-side group on pinned models") {
    const IntMatrix p = fermat_cubic().matrix();
    SUBCASE("trivial group gives the full third-roots lattice") {
        const DiagonalGroup dual = krawitz_dual(p, group3({}));
        CHECK(dual.order() == 27);
        CHECK(group_equal(dual, maximal_third()));
    }
    SUBCASE("diagonal third-roots group gives the order-9 kernel") {
        const DiagonalGroup dual = krawitz_dual(p, j_group());
        CHECK(dual.order() == 9);
        const DiagonalGroup expected = group3(
            {rv({Rat(1, 3), Rat(0), Rat(2, 3)}), rv({Rat(0), Rat(1, 3), Rat(2, 3)})});
        CHECK(group_equal(dual, expected));
    }
    SUBCASE("maximal group gives the trivial group") {
        const DiagonalGroup dual = krawitz_dual(p, maximal_third());
        CHECK(dual.order() == 1);
    }
    SUBCASE("preconditions") {
        const ExponentMatrix tall = ExponentMatrix::parse("x^2 + x*y + y^2", {"x", "y"});
        CHECK_THROWS_AS(krawitz_dual(tall.matrix(), DiagonalGroup::from_generators(2, {})),
                        precondition_error);
        CHECK_THROWS_AS(krawitz_dual(p, group3({rv({Rat(1, 2), Rat(0), Rat(0)})})),
                        precondition_error);
    }
}

TEST_CASE("weight lattices on pinned character sums") {
    SUBCASE("a single monomial leaves every functional") {
        CharacterSum one;
        one.tag = TorusTag::QuotientFmTau;
        one.ambient = 3;
        one.characters = {{1, 2, 3}};
        const WeightLattice w = weight_lattice(one);
        CHECK(w.rank() == 3);
        CHECK(w.basis_rows == IntMatrix::identity(3));
    }
    SUBCASE("rows of the shared factor matrix") {
        const Factorization f = factorize(fermat_cubic().matrix(), j_group());
        const CharacterSum monomials = CharacterSum::from_rows(f.a, TorusTag::QuotientFmTau);
        const WeightLattice w = weight_lattice(monomials);
        REQUIRE(w.rank() == 1);
        CHECK(w.basis_rows.row(0) == IntVector{1, 1, -1});
        CHECK(normalize_weight_generator(w, monomials) == IntVector{1, 1, -1});
        // every basis row annihilates all pairwise differences exactly
        for (std::size_t i = 0; i < monomials.characters.size(); ++i)
            for (std::size_t j = 0; j < monomials.characters.size(); ++j) {
                Int pairing = 0;
                for (std::size_t k = 0; k < 3; ++k)
                    pairing += w.basis_rows(0, k) *
                               (monomials.characters[i][k] - monomials.characters[j][k]);
                CHECK(pairing == 0);
            }
    }
    SUBCASE("rows of the identity") {
        const CharacterSum monomials =
            CharacterSum::from_rows(IntMatrix::identity(3), TorusTag::QuotientFmTau);
        const WeightLattice w = weight_lattice(monomials);
        REQUIRE(w.rank() == 1);
        CHECK(normalize_weight_generator(w, monomials) == IntVector{1, 1, 1});
    }
    SUBCASE("empty character sum is rejected") {
        CharacterSum empty;
        empty.ambient = 3;
        CHECK_THROWS_AS(weight_lattice(empty), precondition_error);
    }
}

TEST_CASE("weight generator normalization") {
    const Factorization f = factorize(fermat_cubic().matrix(), j_group());
    const CharacterSum monomials = CharacterSum::from_rows(f.a, TorusTag::QuotientFmTau);

    SUBCASE("sign flips to pair positively") {
        WeightLattice w{IntMatrix::from_rows({{-1, -1, 1}})};
        CHECK(normalize_weight_generator(w, monomials) == IntVector{1, 1, -1});
        // pairing value is +1 on every monomial
        for (const IntVector& c : monomials.characters)
            CHECK(dot(IntVector{1, 1, -1}, c) == 1);
    }
    SUBCASE("gcd is divided out") {
        CharacterSum diag;
        diag.ambient = 3;
        diag.characters = {{1, 1, 1}};
        WeightLattice w{IntMatrix::from_rows({{2, 2, 2}})};
        CHECK(normalize_weight_generator(w, diag) == IntVector{1, 1, 1});
    }
    SUBCASE("rank-2 input is rejected") {
        WeightLattice w{IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}})};
        CHECK_THROWS_AS(normalize_weight_generator(w, monomials), precondition_error);
    }
}

TEST_CASE("Calabi-Yau test on pinned matrices") {
    SUBCASE("cubic sum of powers") {
        const CyReport r = is_calabi_yau(IntMatrix::diagonal({3, 3, 3}));
        CHECK(r.calabi_yau());
        CHECK(r.weights_row == IntVector{9, 9, 9});
        CHECK(r.determinant == 27);
    }
    SUBCASE("cyclic length-3 exponent matrix") {
        const CyReport r =
            is_calabi_yau(IntMatrix::from_rows({{2, 0, 1}, {1, 2, 0}, {0, 1, 2}}));
        CHECK(r.calabi_yau());
        CHECK(r.weights_row == IntVector{3, 3, 3});
        CHECK(r.determinant == 9);
    }
    SUBCASE("diag(2,3) fails the sum condition") {
        const CyReport r = is_calabi_yau(IntMatrix::diagonal({2, 3}));
        CHECK_FALSE(r.calabi_yau());
        CHECK(r.square);
        CHECK(r.invertible);
        CHECK(r.sign_uniform);
        CHECK_FALSE(r.sum_matches_det);
        CHECK(r.weights_row == IntVector{3, 2});
        CHECK(r.determinant == 6);
    }
    SUBCASE("non-square matrix fails immediately") {
        const CyReport r = is_calabi_yau(IntMatrix(2, 3));
        CHECK_FALSE(r.square);
        CHECK_FALSE(r.calabi_yau());
    }
    SUBCASE("zero entry in the weights row fails the strict sign test") {
        // adjugate column sums hit zero for this singular-ish profile
        const CyReport r = is_calabi_yau(IntMatrix::from_rows({{1, 1}, {1, 1}}));
        CHECK_FALSE(r.invertible);
        CHECK_FALSE(r.sign_uniform);
        CHECK_FALSE(r.calabi_yau());
    }
}

TEST_CASE("dualizing twice restores the model, orders multiply to |det|") {
    const IntMatrix p = fermat_cubic().matrix();
    for (const DiagonalGroup& g : {group3({}), j_group(), maximal_third()}) {
        const DualModel first = dualize(p, g);
        REQUIRE(first.gt.is_finite());
        const DualModel second = dualize(first.ptau, first.gt.as_group());
        CHECK(second.ptau == p);
        REQUIRE(second.gt.is_finite());
        CHECK(group_equal(second.gt.as_group(), g));
        CHECK(g.order() * first.gt.as_group().order() == 27);
    }
}

TEST_CASE("transpose-side groups coincide across routes on a mixed model") {
    // x^2 y + y^2 z + z^2 under its full symmetry sweep
    const ExponentMatrix w = ExponentMatrix::parse("x^2*y + y^2*z + z^2", xyz);
    const DiagonalGroup gmax = symmetry_group(w.matrix());
    CHECK(gmax.order() == 8);
    for (const DiagonalGroup& g : all_subgroups(gmax, Int(81))) {
        const DualModel d = dualize(w.matrix(), g);
        const DiagonalGroup closed = krawitz_dual(w.matrix(), g);
        CHECK(group_equal(closed, d.gt.as_group()));
    }
}
