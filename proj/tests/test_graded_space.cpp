#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lexpp/graded_space.hpp"
#include "lexpp/hilbert.hpp"

using namespace lexpp;

namespace {
const RingContext R2(2);
}

TEST_CASE("reconstruction of principal slices") {
    const MonomialIdeal I(R2, {Monomial({2, 0})});
    CHECK(min_gens_from_space(GradedMonomialSpace::from_ideal(I, 5)) == I);
}

TEST_CASE("reconstruction with generators in two degrees") {
    const MonomialIdeal I(R2, {Monomial({1, 1}), Monomial({0, 3})});
    CHECK(min_gens_from_space(GradedMonomialSpace::from_ideal(I, 6)) == I);
}

TEST_CASE("closure failures are loud") {
    // x1 * (x1x2) is missing from degree 3.
    std::vector<std::vector<Monomial>> slices(4);
    slices[2] = {Monomial({1, 1})};
    CHECK_THROWS_AS(min_gens_from_space(GradedMonomialSpace(R2, std::move(slices))),
                    ClosureError);
}

TEST_CASE("top-degree generators trip the truncation guard") {
    const MonomialIdeal I(R2, {Monomial({1, 1}), Monomial({0, 3})});
    CHECK_THROWS_AS(min_gens_from_space(GradedMonomialSpace::from_ideal(I, 3)),
                    TruncationError);
    CHECK_THROWS_AS(min_gens_from_space(GradedMonomialSpace::from_ideal(I, 4)),
                    TruncationError);
}

TEST_CASE("degenerate spaces") {
    std::vector<std::vector<Monomial>> empty(5);
    CHECK(min_gens_from_space(GradedMonomialSpace(R2, std::move(empty))).is_zero());
    CHECK(min_gens_from_space(
              GradedMonomialSpace::from_ideal(MonomialIdeal::unit(R2), 4)) ==
          MonomialIdeal::unit(R2));
}

TEST_CASE("slices reject misfiled monomials and foreign rings") {
    std::vector<std::vector<Monomial>> slices(2);
    slices[0] = {Monomial({1, 0})};
    CHECK_THROWS_AS(GradedMonomialSpace(R2, std::move(slices)), PreconditionError);
    std::vector<std::vector<Monomial>> foreign(1);
    foreign[0] = {Monomial({0, 0, 0})};
    CHECK_THROWS_AS(GradedMonomialSpace(R2, std::move(foreign)), RingMismatchError);
}

TEST_CASE("round trip through slices on random ideals") {
    std::mt19937_64 rng(97);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i) {
            std::vector<int> e(2);
            for (auto& x : e) x = static_cast<int>(rng() % 4);
            gens.emplace_back(std::move(e));
        }
        const MonomialIdeal I(R2, gens);
        const int D = I.max_gen_degree() + 3;
        CHECK(min_gens_from_space(GradedMonomialSpace::from_ideal(I, D)) == I);
    }
}
