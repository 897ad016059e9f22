#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/betti.hpp"
#include "lexpp/compress.hpp"
#include "lexpp/hilbert.hpp"
#include "lexpp/ideal.hpp"
#include "lexpp/shift.hpp"
#include "lexpp/special_ideals.hpp"
#include "lexpp/stability.hpp"

namespace lexpp {

/// A problem instance: a ring, pure powers P, a piecewise lex ideal
/// description, and a monomial ideal I containing both.
struct Instance {
    RingContext ring;
    PurePowers P;
    PiecewiseLexSpec Ltilde;
    MonomialIdeal I;
    std::uint64_t seed = 0;

    MonomialIdeal base_ideal() const {
        return pure_powers_ideal(P, ring).plus(plex_ideal(Ltilde));
    }

    bool invariant_holds() const { return I.contains(base_ideal()); }
};

/// Containment of a strongly stable J in the (a,b,t)-shift of I,
/// checked slice by slice up to D.
inline bool check_shifting_prop(const MonomialIdeal& I, const MonomialIdeal& J, int a,
                                int b, int t, int D) {
    if (!is_strongly_stable(J))
        throw PreconditionError("check_shifting_prop: J is not strongly stable");
    if (!I.contains(J))
        throw PreconditionError("check_shifting_prop: J is not contained in I");
    const GradedMonomialSpace S = shift(I, a, b, t, D);
    for (int d = 0; d <= D; ++d)
        for (const Monomial& m : J.slice(d))
            if (!S.slice_contains(d, m)) return false;
    return true;
}

/// Containment of a strongly stable J in T = T' + P, where T' is the
/// {a,b}-compression of I minus the generator x_b^{e_b}.  T is built
/// without a Hilbert-function gate: the containment statement needs
/// none.
inline bool check_compression_prop(const MonomialIdeal& I, const MonomialIdeal& J, int a,
                                   int b, const PurePowers& P, int D) {
    if (!is_strongly_stable(J))
        throw PreconditionError("check_compression_prop: J is not strongly stable");
    if (!I.contains(J))
        throw PreconditionError("check_compression_prop: J is not contained in I");
    const MonomialIdeal T = detail::t_step_core(I, a, b, P, D);
    for (int d = 0; d <= D; ++d)
        for (const Monomial& m : J.slice(d))
            if (!T.contains(m)) return false;
    return true;
}

/// Construct the lex ideal L with hf(P + Ltilde + L) = hf(I) up to D.
/// Degree by degree, the smallest lex segment is chosen whose union
/// with the base ideal's piece reaches the target dimension, never
/// shrinking below the shadow of the previous segment.  Lexness, ideal
/// closure and the Hilbert match are verified; failure to verify is an
/// error, not a silent repair.
inline MonomialIdeal lexify_theorem(const Instance& inst, int D) {
    const int n = inst.ring.var_count();
    if (!inst.invariant_holds())
        throw PreconditionError("lexify_theorem: P + Ltilde is not contained in I");
    const MonomialIdeal base = inst.base_ideal();
    const HilbertFunction target = hf_ideal(inst.I, D);

    std::vector<std::vector<Monomial>> slices;
    slices.reserve(static_cast<std::size_t>(D) + 1);
    long long prev_size = 0;
    for (int d = 0; d <= D; ++d) {
        const std::vector<Monomial> all = monomials_of_degree(n, d);
        // The segment cannot shrink below the shadow of the previous one;
        // for initial segments the shadow is itself an initial segment.
        long long k = 0;
        if (d > 0 && prev_size > 0) {
            const auto& below = slices[static_cast<std::size_t>(d - 1)];
            std::vector<Monomial> shadow;
            for (const Monomial& m : below)
                for (int v = 0; v < n; ++v) shadow.push_back(m.times_var(v));
            std::sort(shadow.begin(), shadow.end(), LexGreater{});
            shadow.erase(std::unique(shadow.begin(), shadow.end()), shadow.end());
            k = static_cast<long long>(shadow.size());
            for (long long i = 0; i < k; ++i)
                if (!(shadow[static_cast<std::size_t>(i)] == all[static_cast<std::size_t>(i)]))
                    throw Error("lexify_theorem: segment shadow is not an initial segment");
        }
        auto union_size = [&](long long count) {
            long long size = 0;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (static_cast<long long>(i) < count || base.contains(all[i])) ++size;
            return size;
        };
        if (union_size(k) > target.at(d))
            throw Error("lexify_theorem: forced segment at degree " + std::to_string(d) +
                        " already exceeds the target dimension");
        while (union_size(k) < target.at(d)) ++k;
        slices.push_back(detail::lex_segment(n, d, k));
        prev_size = k;
    }

    MonomialIdeal L = detail::initial_segment_ideal(inst.ring, slices);
    if (!is_lex(L, std::max(D, L.max_gen_degree() + 1)))
        throw Error("lexify_theorem: constructed ideal failed the lex check");
    if (hf_ideal(base.plus(L), D) != target)
        throw Error("lexify_theorem: P + Ltilde + L does not match the Hilbert function of I");
    return L;
}

/// Outcome of one verification run of the main statement.
struct TheoremReport {
    Instance instance;
    int D;
    MonomialIdeal L;
    MonomialIdeal combined;  // P + Ltilde + L
    bool hf_match;
    std::vector<std::pair<FieldSpec, bool>> betti_ok;

    bool all_ok() const {
        if (!hf_match) return false;
        for (const auto& [field, ok] : betti_ok)
            if (!ok) return false;
        return true;
    }
};

/// Run the lexification, then compare Betti tables of I and of
/// P + Ltilde + L over every requested characteristic.
inline TheoremReport verify_theorem(const Instance& inst, int D,
                                    const std::vector<FieldSpec>& chars) {
    const MonomialIdeal L = lexify_theorem(inst, D);
    const MonomialIdeal combined = inst.base_ideal().plus(L);
    TheoremReport report{inst, D, L, combined,
                         hf_ideal(combined, D) == hf_ideal(inst.I, D), {}};
    for (const FieldSpec& f : chars) {
        const BettiTable t_input = betti_table(inst.I, f);
        const BettiTable t_combined = betti_table(combined, f);
        report.betti_ok.emplace_back(f, betti_leq(t_input, t_combined));
    }
    return report;
}

namespace detail {

/// Deterministic bounded draw; the tiny modulo bias is irrelevant here.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, int degree) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(draw(rng, n))];
    return Monomial(std::move(e));
}

}  // namespace detail

/// Seed-deterministic instance generator: random ascending pure powers
/// in [2, max_e], piecewise lex components made of random lex segments,
/// and extra random generators of degree at most max_deg.  The instance
/// invariant holds by construction.
inline Instance random_instance(std::uint64_t seed, int n, int r, int max_e, int max_deg,
                                int gen_budget) {
    if (n < 1 || r < 1 || r > n)
        throw PreconditionError("random_instance: need 1 <= r <= n");
    if (max_e < 2) throw PreconditionError("random_instance: need max_e >= 2");
    if (max_deg < 1) throw PreconditionError("random_instance: need max_deg >= 1");
    std::mt19937_64 rng(seed);
    const RingContext ring(n);

    std::vector<int> exps;
    for (int i = 0; i < r; ++i)
        exps.push_back(2 + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(max_e - 1))));
    std::sort(exps.begin(), exps.end());
    const PurePowers P(std::move(exps));

    std::vector<std::vector<Monomial>> components(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (detail::draw(rng, 3) != 0) continue;  // include roughly a third of the components
        const int d = 1 + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(max_deg)));
        const long long total = monomial_count(i, d);
        const long long k = static_cast<long long>(detail::draw(rng, static_cast<std::uint64_t>(total + 1)));
        if (k == 0) continue;
        for (const Monomial& sub : detail::lex_segment(i, d, k)) {
            std::vector<int> e = sub.exponents();
            e.resize(static_cast<std::size_t>(n), 0);
            components[static_cast<std::size_t>(i - 1)].emplace_back(std::move(e));
        }
    }
    PiecewiseLexSpec Ltilde(ring, std::move(components));

    std::vector<Monomial> gens = pure_powers_ideal(P, ring).min_gens();
    for (const Monomial& g : Ltilde.all_generators()) gens.push_back(g);
    for (int i = 0; i < gen_budget; ++i) {
        const int d = 1 + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(max_deg)));
        gens.push_back(detail::random_monomial(rng, n, d));
    }
    MonomialIdeal I(ring, std::move(gens));
    return Instance{ring, P, Ltilde, std::move(I), seed};
}

}  // namespace lexpp
