#pragma once

#include <set>
#include <vector>

#include "lexpp/ideal.hpp"

namespace lexpp {

/// Strong stability: whenever x_i divides a monomial of the ideal, the
/// exchange toward any lex-larger variable x_j (j < i) stays inside.
/// Checking the minimal generators suffices: any m in I is g*w for a
/// generator g, and the exchange of m either keeps the factor g or is a
/// multiple of the corresponding exchange of g.
inline bool is_strongly_stable(const MonomialIdeal& I) {
    for (const Monomial& g : I.min_gens()) {
        for (int i = 1; i < g.var_count(); ++i) {
            if (g.exponent(i) == 0) continue;
            for (int j = 0; j < i; ++j)
                if (!I.contains(g.exchange(i, j))) return false;
        }
    }
    return true;
}

/// Stability: only exchanges of the largest variable of each generator
/// are required to stay inside.
inline bool is_stable(const MonomialIdeal& I) {
    for (const Monomial& g : I.min_gens()) {
        int mx = g.max_var();
        if (mx <= 0) continue;
        for (int j = 0; j < mx; ++j)
            if (!I.contains(g.exchange(mx, j))) return false;
    }
    return true;
}

/// Lex (segment) ideal test: every graded piece up to D must be an
/// initial segment of the lex order.  D must look past the generators.
inline bool is_lex(const MonomialIdeal& I, int D) {
    if (D < I.max_gen_degree() + 1)
        throw TruncationError("is_lex: need D >= max generator degree + 1, got D=" +
                              std::to_string(D));
    const int n = I.ring().var_count();
    for (int d = 0; d <= D; ++d) {
        const std::vector<Monomial> all = monomials_of_degree(n, d);
        bool expect_member = true;
        for (const Monomial& m : all) {
            const bool member = I.contains(m);
            if (member && !expect_member) return false;
            if (!member) expect_member = false;
        }
    }
    return true;
}

/// Smallest strongly stable ideal containing the given monomials:
/// close the generator set under all single exchanges x_i -> x_j with
/// j < i, then minimalize.
inline MonomialIdeal borel_closure(RingContext ring, std::vector<Monomial> gens) {
    std::set<Monomial> closed(gens.begin(), gens.end());
    std::vector<Monomial> work(gens.begin(), gens.end());
    while (!work.empty()) {
        const Monomial m = work.back();
        work.pop_back();
        for (int i = 1; i < m.var_count(); ++i) {
            if (m.exponent(i) == 0) continue;
            for (int j = 0; j < i; ++j) {
                Monomial ex = m.exchange(i, j);
                if (closed.insert(ex).second) work.push_back(std::move(ex));
            }
        }
    }
    return MonomialIdeal(ring, std::vector<Monomial>(closed.begin(), closed.end()));
}

}  // namespace lexpp
