#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexpp/graded_space.hpp"
#include "lexpp/hilbert.hpp"
#include "lexpp/ideal.hpp"
#include "lexpp/special_ideals.hpp"

namespace lexpp {

namespace detail {

inline Monomial with_ab(const Monomial& f, int a, int b, int pa, int pb) {
    std::vector<int> e = f.exponents();
    e[static_cast<std::size_t>(a)] = pa;
    e[static_cast<std::size_t>(b)] = pb;
    return Monomial(std::move(e));
}

/// Degree-local membership test for the (a,b,t)-shift.  Writing
/// u = f a^p b^q with f coprime to both variables:
///   q <  t          : keep u iff u is in I;
///   q-t == p        : keep u iff u is in I (the diagonal);
///   q-t <  p        : u = f a^l b^{s+t} is kept iff u or its mirror
///                     f a^s b^{l+t} is in I;
///   q-t >  p        : u = f a^s b^{l+t} is kept iff both u and the
///                     mirror f a^l b^{s+t} are in I.
/// The mirror of u is f a^{q-t} b^{p+t} in all cases.
inline bool shift_member(const MonomialIdeal& I, const Monomial& u, int a, int b, int t) {
    const AbDecomposition d = decompose_ab(u, a, b);
    const int p = d.alpha;
    const int q = d.beta;
    if (q < t) return I.contains(u);
    const int s = q - t;
    if (p == s) return I.contains(u);
    const Monomial mirror = with_ab(d.f, a, b, s, p + t);
    if (p > s) return I.contains(u) || I.contains(mirror);
    return I.contains(u) && I.contains(mirror);
}

}  // namespace detail

/// The (a,b,t)-shift of I as a graded monomial space up to degree D.
/// Requires a < b (so x_a is lex-larger).  For t > 0 the output need
/// not be an ideal; dimensions match I degree by degree.
inline GradedMonomialSpace shift(const MonomialIdeal& I, int a, int b, int t, int D) {
    const int n = I.ring().var_count();
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw PreconditionError("shift: variable index out of range");
    if (a >= b) throw PreconditionError("shift: need index a < index b");
    if (t < 0) throw PreconditionError("shift: t must be non-negative");
    std::vector<std::vector<Monomial>> slices;
    slices.reserve(static_cast<std::size_t>(D) + 1);
    for (int d = 0; d <= D; ++d) {
        std::vector<Monomial> s;
        for (const Monomial& u : monomials_of_degree(n, d))
            if (detail::shift_member(I, u, a, b, t)) s.push_back(u);
        slices.push_back(std::move(s));
    }
    return GradedMonomialSpace(I.ring(), std::move(slices));
}

/// Shift_{a,b,t}(I) + P, reconstructed as an ideal.  Verifies closure
/// up to D and that the Hilbert function of I survived; a mismatch
/// means the operation's hypotheses fail for these arguments.
inline MonomialIdeal shift_plus_p(const MonomialIdeal& I, int a, int b, int t,
                                  const PurePowers& P, int D) {
    const MonomialIdeal P_ideal = pure_powers_ideal(P, I.ring());
    if (!I.contains(P_ideal))
        throw PreconditionError("shift_plus_p: P is not contained in I");
    const GradedMonomialSpace shifted = shift(I, a, b, t, D);
    const GradedMonomialSpace combined =
        space_union(shifted, GradedMonomialSpace::from_ideal(P_ideal, D));
    MonomialIdeal result = min_gens_from_space(combined);
    const HilbertFunction before = hf_ideal(I, D);
    if (hf_ideal(result, D) != before)
        throw HypothesisError("shift_plus_p: Shift_{" + std::to_string(a + 1) + "," +
                              std::to_string(b + 1) + "," + std::to_string(t) +
                              "}(I) + P changed the Hilbert function of " + I.str());
    return result;
}

}  // namespace lexpp
