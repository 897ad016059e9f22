#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/monomial.hpp"

namespace lexpp {

namespace detail {

/// Drop duplicates and every monomial divisible by another one.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& g : gens) {
            if (&g == &m || g == m) continue;
            // Ties broken by exact equality above; strict divisors only.
            if (g.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), LexGreater{});
    return kept;
}

}  // namespace detail

/// A monomial ideal given by its minimal generators, kept lex-descending
/// so equal ideals compare and render identically.  The zero ideal has
/// no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal(RingContext ring, std::vector<Monomial> gens)
        : ring_(ring), gens_(detail::minimalize(std::move(gens))) {
        for (const Monomial& g : gens_)
            if (g.var_count() != ring_.var_count())
                throw RingMismatchError("generator has " + std::to_string(g.var_count()) +
                                        " exponents in a ring with " +
                                        std::to_string(ring_.var_count()) + " variables");
    }

    static MonomialIdeal zero(RingContext ring) { return MonomialIdeal(ring, {}); }

    static MonomialIdeal unit(RingContext ring) {
        return MonomialIdeal(ring, {Monomial::one(ring.var_count())});
    }

    const RingContext& ring() const { return ring_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

    /// Membership: some minimal generator divides m.
    bool contains(const Monomial& m) const {
        if (m.var_count() != ring_.var_count())
            throw RingMismatchError("membership: monomial from a different ring");
        for (const Monomial& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    /// Ideal containment, decided on the other ideal's generators.
    bool contains(const MonomialIdeal& other) const {
        for (const Monomial& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    /// The degree-d graded piece, lex-descending.
    std::vector<Monomial> slice(int d) const {
        std::vector<Monomial> out;
        for (const Monomial& m : monomials_of_degree(ring_.var_count(), d))
            if (contains(m)) out.push_back(m);
        return out;
    }

    /// Largest degree among the minimal generators; 0 if there are none.
    int max_gen_degree() const {
        int best = 0;
        for (const Monomial& g : gens_) best = std::max(best, g.degree());
        return best;
    }

    MonomialIdeal plus(const MonomialIdeal& other) const {
        if (!(ring_ == other.ring_))
            throw RingMismatchError("ideal sum across different rings");
        std::vector<Monomial> all = gens_;
        all.insert(all.end(), other.gens_.begin(), other.gens_.end());
        return MonomialIdeal(ring_, std::move(all));
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::string str() const {
        if (is_zero()) return "(0)";
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ", ";
            s += gens_[i].str();
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
        return os << I.str();
    }

private:
    RingContext ring_;
    std::vector<Monomial> gens_;
};

}  // namespace lexpp
