#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/ideal.hpp"

namespace lexpp {

/// Degree-indexed monomial sets up to a truncation degree: the carrier
/// for shift and compression outputs before ideal reconstruction.
/// Slices are kept lex-descending.
class GradedMonomialSpace {
public:
    GradedMonomialSpace(RingContext ring, std::vector<std::vector<Monomial>> slices)
        : ring_(ring), slices_(std::move(slices)) {
        for (std::size_t d = 0; d < slices_.size(); ++d) {
            for (const Monomial& m : slices_[d]) {
                if (m.var_count() != ring_.var_count())
                    throw RingMismatchError("slice monomial from a different ring");
                if (m.degree() != static_cast<int>(d))
                    throw PreconditionError("monomial " + m.str() + " misfiled in degree " +
                                            std::to_string(d));
            }
            std::sort(slices_[d].begin(), slices_[d].end(), LexGreater{});
            slices_[d].erase(std::unique(slices_[d].begin(), slices_[d].end()),
                             slices_[d].end());
        }
    }

    static GradedMonomialSpace from_ideal(const MonomialIdeal& I, int D) {
        std::vector<std::vector<Monomial>> slices;
        slices.reserve(static_cast<std::size_t>(D) + 1);
        for (int d = 0; d <= D; ++d) slices.push_back(I.slice(d));
        return GradedMonomialSpace(I.ring(), std::move(slices));
    }

    const RingContext& ring() const { return ring_; }

    int truncation() const { return static_cast<int>(slices_.size()) - 1; }

    const std::vector<Monomial>& slice(int d) const {
        return slices_.at(static_cast<std::size_t>(d));
    }

    bool slice_contains(int d, const Monomial& m) const {
        if (d < 0 || d > truncation()) return false;
        const auto& s = slices_[static_cast<std::size_t>(d)];
        return std::binary_search(s.begin(), s.end(), m, LexGreater{});
    }

    std::vector<long long> dims() const {
        std::vector<long long> out;
        out.reserve(slices_.size());
        for (const auto& s : slices_) out.push_back(static_cast<long long>(s.size()));
        return out;
    }

    friend bool operator==(const GradedMonomialSpace&, const GradedMonomialSpace&) = default;

private:
    RingContext ring_;
    std::vector<std::vector<Monomial>> slices_;
};

/// Union of two spaces of equal truncation, degree-wise.
inline GradedMonomialSpace space_union(const GradedMonomialSpace& A,
                                       const GradedMonomialSpace& B) {
    if (!(A.ring() == B.ring()) || A.truncation() != B.truncation())
        throw PreconditionError("space_union: incompatible spaces");
    std::vector<std::vector<Monomial>> slices;
    for (int d = 0; d <= A.truncation(); ++d) {
        std::vector<Monomial> s = A.slice(d);
        const auto& t = B.slice(d);
        s.insert(s.end(), t.begin(), t.end());
        slices.push_back(std::move(s));
    }
    return GradedMonomialSpace(A.ring(), std::move(slices));
}

/// Reconstruct a monomial ideal from a truncated space.  The space must
/// be closed under multiplication by every variable; minimal generators
/// are the slice members none of whose variable quotients lie one
/// degree down.  A generator in the top two degrees means the space is
/// cut too early to certify completeness.
inline MonomialIdeal min_gens_from_space(const GradedMonomialSpace& S) {
    const int D = S.truncation();
    const int n = S.ring().var_count();
    for (int d = 0; d < D; ++d)
        for (const Monomial& m : S.slice(d))
            for (int v = 0; v < n; ++v)
                if (!S.slice_contains(d + 1, m.times_var(v)))
                    throw ClosureError("space is not an ideal: " + m.str() + " * x" +
                                       std::to_string(v + 1) + " missing from degree " +
                                       std::to_string(d + 1));

    std::vector<Monomial> gens;
    int top_gen_degree = -1;
    for (int d = 0; d <= D; ++d) {
        for (const Monomial& m : S.slice(d)) {
            bool generator = true;
            for (int v = 0; v < n && generator; ++v)
                if (m.exponent(v) > 0 && S.slice_contains(d - 1, m.div_var(v)))
                    generator = false;
            if (generator) {
                gens.push_back(m);
                top_gen_degree = std::max(top_gen_degree, d);
            }
        }
    }
    if (D >= 1 && top_gen_degree >= D - 1)
        throw TruncationError("generator at degree " + std::to_string(top_gen_degree) +
                              " with truncation D=" + std::to_string(D) +
                              "; retry with a larger D");

    MonomialIdeal I(S.ring(), std::move(gens));
    if (GradedMonomialSpace::from_ideal(I, D) != S)
        throw Error("min_gens_from_space: reconstruction does not reproduce the slices");
    return I;
}

}  // namespace lexpp
