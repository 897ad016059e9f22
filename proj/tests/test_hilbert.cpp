#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lexpp/hilbert.hpp"
#include "lexpp/stability.hpp"

using namespace lexpp;

namespace {
const RingContext R1(1);
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

TEST_CASE("hf_ideal worked examples") {
    CHECK(hf_ideal(MonomialIdeal::zero(R2), 3).dims == std::vector<long long>{0, 0, 0, 0});
    CHECK(hf_ideal(ideal(R2, {{2, 0}, {1, 1}}), 3).dims ==
          std::vector<long long>{0, 0, 2, 3});
    CHECK(hf_ideal(ideal(R1, {{1}}), 2).dims == std::vector<long long>{0, 1, 1});
}

TEST_CASE("hf_inclusion_exclusion worked examples") {
    CHECK(hf_inclusion_exclusion(ideal(R2, {{2, 0}, {1, 1}}), 3).dims ==
          std::vector<long long>{0, 0, 2, 3});
    CHECK(hf_inclusion_exclusion(MonomialIdeal::zero(R3), 4).dims ==
          std::vector<long long>{0, 0, 0, 0, 0});
    CHECK(hf_inclusion_exclusion(ideal(R2, {{1, 1}}), 4).dims ==
          std::vector<long long>{0, 0, 1, 2, 3});
}

TEST_CASE("generator bound on the inclusion-exclusion route") {
    std::vector<Monomial> gens;
    for (int k = 0; k <= 4; ++k) gens.push_back(Monomial({4 - k, k}));
    const MonomialIdeal I(R2, gens);
    CHECK_THROWS_AS(hf_inclusion_exclusion(I, 5, 3), PreconditionError);
}

TEST_CASE("the two hilbert routes agree on random ideals") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const MonomialIdeal I = random_ideal(rng, n, 4, 5);
        const int D = I.max_gen_degree() + n + 2;
        CHECK(hf_ideal(I, D) == hf_inclusion_exclusion(I, D));
    }
}

TEST_CASE("hilbert dimensions respect the ambient bound and the shadow bound") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const MonomialIdeal I = random_ideal(rng, n, 3, 4);
        const int D = I.max_gen_degree() + 3;
        const HilbertFunction hf = hf_ideal(I, D);
        for (int d = 0; d <= D; ++d) CHECK(hf.at(d) <= monomial_count(n, d));
        // dims[d+1] is at least the size of the shadow of slice d.
        for (int d = 0; d < D; ++d) {
            std::set<Monomial> shadow;
            for (const Monomial& m : I.slice(d))
                for (int v = 0; v < n; ++v) shadow.insert(m.times_var(v));
            CHECK(hf.at(d + 1) >= static_cast<long long>(shadow.size()));
        }
    }
}

TEST_CASE("lexify_hf worked examples") {
    CHECK(lexify_hf(ideal(R2, {{1, 1}}), 6) == ideal(R2, {{2, 0}}));
    // Lex input is a fixed point.
    const MonomialIdeal L = ideal(R2, {{2, 0}, {1, 1}});
    CHECK(lexify_hf(L, 7) == L);
    const MonomialIdeal M2 = ideal(R2, {{2, 0}, {1, 1}, {0, 2}});
    CHECK(lexify_hf(M2, 7) == M2);
}

TEST_CASE("lexify_hf needs room past the generators") {
    CHECK_THROWS_AS(lexify_hf(ideal(R2, {{2, 0}}), 2), TruncationError);
    // A lex generator in the top two degrees is reported, not guessed away.
    CHECK_THROWS_AS(lexify_hf(ideal(R2, {{1, 1}}), 3), TruncationError);
}

TEST_CASE("macaulay realizability and hilbert preservation on random ideals") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 80; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const MonomialIdeal I = random_ideal(rng, n, 3, 4);
        const MonomialIdeal L = with_truncation_retry(
            default_truncation(I), n, [&](int D) { return lexify_hf(I, D); });
        const int D = default_truncation(I);
        CHECK(is_lex(L, std::max(D, L.max_gen_degree() + 1)));
        CHECK(hf_ideal(L, D) == hf_ideal(I, D));
    }
}

TEST_CASE("default truncation policy") {
    const MonomialIdeal I = ideal(R2, {{3, 0}});
    CHECK(default_truncation(I) == 3 + 2 + 2);
    CHECK(default_truncation(I, PurePowers({4, 4})) == 4 + 2 + 2);
    CHECK(default_truncation(MonomialIdeal::zero(R3)) == 0 + 3 + 2);
}
