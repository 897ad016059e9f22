#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lexpp/ideal.hpp"
#include "lexpp/special_ideals.hpp"

namespace lexpp {

/// Dimensions of an ideal's graded pieces for degrees 0..D.  Quotient
/// dimensions are monomial_count(n,d) - dims[d], derived on demand.
struct HilbertFunction {
    std::vector<long long> dims;

    int truncation() const { return static_cast<int>(dims.size()) - 1; }

    long long at(int d) const { return dims.at(static_cast<std::size_t>(d)); }

    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Hilbert function by direct slice counting.
inline HilbertFunction hf_ideal(const MonomialIdeal& I, int D) {
    if (D < 0) throw PreconditionError("hf_ideal: negative truncation degree");
    HilbertFunction hf;
    hf.dims.reserve(static_cast<std::size_t>(D) + 1);
    for (int d = 0; d <= D; ++d)
        hf.dims.push_back(static_cast<long long>(I.slice(d).size()));
    return hf;
}

/// Independent route: inclusion-exclusion over the lcms of generator
/// subsets, counting multiples degree by degree.  Exponential in the
/// generator count, so gated.
inline HilbertFunction hf_inclusion_exclusion(const MonomialIdeal& I, int D,
                                              int max_gens = 20) {
    const auto& gens = I.min_gens();
    const int g = static_cast<int>(gens.size());
    if (g > max_gens || g > 30)
        throw PreconditionError("hf_inclusion_exclusion: " + std::to_string(g) +
                                " generators exceed the 2^g bound of " +
                                std::to_string(std::min(max_gens, 30)));
    const int n = I.ring().var_count();
    HilbertFunction hf;
    hf.dims.assign(static_cast<std::size_t>(D) + 1, 0);
    for (std::uint32_t mask = 1; mask < (1u << g); ++mask) {
        Monomial m = Monomial::one(n);
        for (int i = 0; i < g; ++i)
            if (mask & (1u << i)) m = lcm(m, gens[static_cast<std::size_t>(i)]);
        const int sign = (std::popcount(mask) % 2 == 1) ? 1 : -1;
        const int deg = m.degree();
        for (int d = deg; d <= D; ++d)
            hf.dims[static_cast<std::size_t>(d)] += sign * monomial_count(n, d - deg);
    }
    return hf;
}

/// Default truncation degree for transform drivers: far enough past the
/// generators and the pure powers that generator extraction is safe in
/// the common case; callers retry with D + n on TruncationError.
inline int default_truncation(const MonomialIdeal& I, const PurePowers& P = PurePowers::none()) {
    int base = I.max_gen_degree();
    if (P.count() > 0) base = std::max(base, P.exponent(P.count() - 1));
    return base + I.ring().var_count() + 2;
}

/// Ceiling for truncation retries.  Loud failure past this point.
inline constexpr int kTruncationCap = 64;

namespace detail {

/// First k monomials of degree d in lex order.
inline std::vector<Monomial> lex_segment(int n, int d, long long k) {
    std::vector<Monomial> all = monomials_of_degree(n, d);
    if (k > static_cast<long long>(all.size()))
        throw PreconditionError("lex segment larger than the degree piece");
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
    return all;
}

/// Build the ideal whose graded pieces are the given lex-descending
/// slices (expected to be initial segments).  Shadow containment is
/// verified degree by degree, minimal generators are extracted with a
/// top-two-degrees guard, and the extracted ideal must reproduce the
/// slices.  Once no generator appears in two consecutive degrees the
/// segment sizes grow minimally, and by persistence of minimal growth
/// they stay minimal, so the extracted ideal is the full untruncated
/// one.
inline MonomialIdeal initial_segment_ideal(RingContext ring,
                                           const std::vector<std::vector<Monomial>>& slices) {
    const int n = ring.var_count();
    const int D = static_cast<int>(slices.size()) - 1;
    std::vector<Monomial> gens;
    int top_gen_degree = -1;
    for (int d = 0; d <= D; ++d) {
        for (const Monomial& m : slices[static_cast<std::size_t>(d)]) {
            bool generator = true;
            for (int v = 0; v < n && generator; ++v) {
                if (m.exponent(v) == 0) continue;
                const auto& below = slices[static_cast<std::size_t>(d - 1)];
                if (std::binary_search(below.begin(), below.end(), m.div_var(v), LexGreater{}))
                    generator = false;
            }
            if (generator) {
                gens.push_back(m);
                top_gen_degree = std::max(top_gen_degree, d);
            }
        }
        if (d < D) {
            const auto& above = slices[static_cast<std::size_t>(d + 1)];
            for (const Monomial& m : slices[static_cast<std::size_t>(d)])
                for (int v = 0; v < n; ++v)
                    if (!std::binary_search(above.begin(), above.end(), m.times_var(v),
                                            LexGreater{}))
                        throw Error("lex segments do not form an ideal: shadow of degree " +
                                    std::to_string(d) + " leaves the next segment");
        }
    }
    if (top_gen_degree >= D - 1)
        throw TruncationError("lex generator detected at degree " +
                              std::to_string(top_gen_degree) + " with truncation D=" +
                              std::to_string(D) + "; retry with a larger D");

    MonomialIdeal L(ring, std::move(gens));
    for (int d = 0; d <= D; ++d)
        if (L.slice(d) != slices[static_cast<std::size_t>(d)])
            throw Error("segment ideal reconstruction does not reproduce the slices");
    return L;
}

}  // namespace detail

/// The lex ideal with the same Hilbert function as I, certified up to
/// degree D: every graded piece is replaced by the lex segment of the
/// measured size and the segments are re-assembled into an ideal.
inline MonomialIdeal lexify_hf(const MonomialIdeal& I, int D) {
    const int n = I.ring().var_count();
    if (D < I.max_gen_degree() + 1)
        throw TruncationError("lexify_hf: D must look past the generators of I");
    const HilbertFunction hf = hf_ideal(I, D);
    std::vector<std::vector<Monomial>> slices;
    slices.reserve(static_cast<std::size_t>(D) + 1);
    for (int d = 0; d <= D; ++d)
        slices.push_back(detail::lex_segment(n, d, hf.at(d)));
    return detail::initial_segment_ideal(I.ring(), slices);
}

/// Run op with increasing truncation until it stops demanding more room.
template <typename Op>
auto with_truncation_retry(int D0, int step, Op&& op) {
    int D = D0;
    while (true) {
        try {
            return op(D);
        } catch (const TruncationError&) {
            if (D > kTruncationCap) throw;
            D += step;
        }
    }
}

}  // namespace lexpp
