#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "lexpp/compress.hpp"
#include "lexpp/stability.hpp"

using namespace lexpp;

namespace {
const RingContext R2(2);
const RingContext R3(3);

MonomialIdeal ideal(const RingContext& R, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.emplace_back(std::move(g));
    return MonomialIdeal(R, std::move(ms));
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int max_exp, int max_gens) {
    std::vector<Monomial> gens;
    const int count = 1 + static_cast<int>(rng() % max_gens);
    for (int i = 0; i < count; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(RingContext(n), std::move(gens));
}
}  // namespace

TEST_CASE("compression worked examples") {
    // Degree-2 stratum of size two becomes the top segment {x1^2, x1x2}.
    CHECK(compress(ideal(R2, {{0, 2}, {1, 1}}), 0, 1, 8) == ideal(R2, {{2, 0}, {1, 1}}));
    // Single stratum in K[x2,x3]; the x1^k strata inherit.
    CHECK(compress(ideal(R3, {{0, 1, 1}, {0, 0, 2}}), 1, 2, 8) ==
          ideal(R3, {{0, 2, 0}, {0, 1, 1}}));
}

TEST_CASE("strongly stable ideals are compression-fixed") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Monomial> seed;
        std::vector<int> e(3);
        for (auto& x : e) x = static_cast<int>(rng() % 3);
        seed.emplace_back(std::move(e));
        const MonomialIdeal I = borel_closure(R3, seed);
        const int D = I.max_gen_degree() + 4;
        for (int a = 0; a < 2; ++a)
            for (int b = a + 1; b < 3; ++b)
                CHECK(compress(I, a, b, D) == I);
    }
}

TEST_CASE("compression preserves the hilbert function and stratum counts") {
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const MonomialIdeal I = random_ideal(rng, n, 3, 4);
        const int a = 0;
        const int b = 1 + static_cast<int>(rng() % (n - 1));
        const int D = I.max_gen_degree() + n + 2;
        const MonomialIdeal C = with_truncation_retry(
            D, n, [&](int d) { return compress(I, a, b, d); });
        CHECK(hf_ideal(C, D) == hf_ideal(I, D));
        // Stratum-wise dimensions are preserved, not just totals.
        for (int d = 0; d <= D; ++d) {
            std::map<Monomial, int> before, after;
            for (const Monomial& m : I.slice(d)) ++before[decompose_ab(m, a, b).f];
            for (const Monomial& m : C.slice(d)) ++after[decompose_ab(m, a, b).f];
            CHECK(before == after);
        }
    }
}

TEST_CASE("t-step worked examples") {
    const PurePowers P22({2, 2});
    // I = P: drop x2^2, compress (x1^2) (already lex), re-add P.
    CHECK(t_step(ideal(R2, {{2, 0}, {0, 2}}), 0, 1, P22, 8) ==
          ideal(R2, {{2, 0}, {0, 2}}));
    // The square of the maximal ideal is fixed.
    const MonomialIdeal M2 = ideal(R2, {{2, 0}, {1, 1}, {0, 2}});
    CHECK(t_step(M2, 0, 1, P22, 8) == M2);
}

TEST_CASE("t-step guards") {
    // x3 carries no pure power.
    CHECK_THROWS_AS(t_step(ideal(R3, {{2, 0, 0}, {0, 2, 0}, {0, 1, 1}}), 1, 2,
                           PurePowers({2, 2}), 8),
                    PreconditionError);
    // P must sit inside I.
    CHECK_THROWS_AS(t_step(ideal(R2, {{0, 2}}), 0, 1, PurePowers({2, 2}), 8),
                    PreconditionError);
}

TEST_CASE("t-step reports hypothesis failures through the hilbert gate") {
    // The x3-stratum of I' = (x1^3, x2^2x3) contains x2^3 but not
    // x1^2x2; its lexification plus P then overfills total degree 4.
    const MonomialIdeal I = ideal(R3, {{3, 0, 0}, {0, 3, 0}, {0, 2, 1}});
    const PurePowers P33({3, 3});
    CHECK_THROWS_AS(t_step(I, 0, 1, P33, 10), HypothesisError);
}

TEST_CASE("t-step falls back to plain compression plus P when the power is absent") {
    // x2^2 is not a minimal generator here: I' = I by the first case.
    const MonomialIdeal I = ideal(R2, {{1, 1}, {0, 3}, {2, 0}});
    // Give x2 the exponent 3 so that x2^3 is the generator to drop.
    const PurePowers P23({2, 3});
    const MonomialIdeal T = t_step(I, 0, 1, P23, 9);
    CHECK(hf_ideal(T, 9) == hf_ideal(I, 9));
    CHECK(T.contains(pure_powers_ideal(P23, R2)));
}
