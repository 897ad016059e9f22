#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/graded_space.hpp"
#include "lexpp/hilbert.hpp"
#include "lexpp/ideal.hpp"
#include "lexpp/shift.hpp"
#include "lexpp/special_ideals.hpp"

namespace lexpp {

/// The {a,b}-compression of I up to degree D: within every stratum
/// f * K[x_a, x_b] (f coprime to both variables), each graded piece is
/// replaced by the lex segment of the same size, x_a-power first.
/// Compression of an ideal is again an ideal; closure is verified by
/// the reconstruction.
inline MonomialIdeal compress(const MonomialIdeal& I, int a, int b, int D) {
    const int n = I.ring().var_count();
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw PreconditionError("compress: variable index out of range");
    if (a >= b) throw PreconditionError("compress: need index a < index b");
    std::vector<std::vector<Monomial>> slices;
    slices.reserve(static_cast<std::size_t>(D) + 1);
    for (int d = 0; d <= D; ++d) {
        std::map<Monomial, int> stratum_count;
        for (const Monomial& u : monomials_of_degree(n, d))
            if (I.contains(u)) ++stratum_count[decompose_ab(u, a, b).f];
        std::vector<Monomial> s;
        for (const auto& [f, count] : stratum_count) {
            const int m = d - f.degree();
            for (int k = 0; k < count; ++k)
                s.push_back(detail::with_ab(f, a, b, m - k, k));
        }
        slices.push_back(std::move(s));
    }
    return min_gens_from_space(GradedMonomialSpace(I.ring(), std::move(slices)));
}

namespace detail {

/// T = T' + P where T' is the {a,b}-compression of I', and I' drops the
/// minimal generator x_b^{e_b} when present.  No Hilbert check here:
/// the containment statement about T holds regardless, while Hilbert
/// preservation needs extra hypotheses and is asserted by t_step.
inline MonomialIdeal t_step_core(const MonomialIdeal& I, int a, int b,
                                 const PurePowers& P, int D) {
    const int n = I.ring().var_count();
    const MonomialIdeal P_ideal = pure_powers_ideal(P, I.ring());
    if (!I.contains(P_ideal))
        throw PreconditionError("t-step: P is not contained in I");
    if (!P.has_power(b))
        throw PreconditionError("t-step: variable x" + std::to_string(b + 1) +
                                " carries no pure power");
    const Monomial bpow = Monomial::variable(n, b, P.exponent(b));
    std::vector<Monomial> kept;
    for (const Monomial& g : I.min_gens())
        if (g != bpow) kept.push_back(g);
    const MonomialIdeal I_prime(I.ring(), std::move(kept));
    return compress(I_prime, a, b, D).plus(P_ideal);
}

}  // namespace detail

/// The compress-and-restore step: remove x_b^{e_b} from the generators,
/// compress with respect to {a,b}, add P back.  The Hilbert function of
/// I must survive; a mismatch signals that the hypotheses behind this
/// rewriting step do not hold for these arguments.
inline MonomialIdeal t_step(const MonomialIdeal& I, int a, int b, const PurePowers& P,
                            int D) {
    MonomialIdeal T = detail::t_step_core(I, a, b, P, D);
    if (hf_ideal(T, D) != hf_ideal(I, D))
        throw HypothesisError("t-step: pair (x" + std::to_string(a + 1) + ",x" +
                              std::to_string(b + 1) + ") changed the Hilbert function of " +
                              I.str());
    return T;
}

}  // namespace lexpp
