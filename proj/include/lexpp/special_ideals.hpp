#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexpp/ideal.hpp"
#include "lexpp/stability.hpp"

namespace lexpp {

/// The regular sequence of pure powers x_1^{e_1}, ..., x_r^{e_r} with
/// 2 <= e_1 <= ... <= e_r.  r may be zero (no powers).
class PurePowers {
public:
    explicit PurePowers(std::vector<int> exponents) : exps_(std::move(exponents)) {
        int prev = 2;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] < prev)
                throw PreconditionError(
                    "pure powers must be ascending and at least 2; offending entry e_" +
                    std::to_string(i + 1) + " = " + std::to_string(exps_[i]));
            prev = exps_[i];
        }
    }

    static PurePowers none() { return PurePowers(std::vector<int>{}); }

    int count() const { return static_cast<int>(exps_.size()); }

    const std::vector<int>& exponents() const { return exps_; }

    /// True if variable var (0-based) carries a pure power.
    bool has_power(int var) const { return var >= 0 && var < count(); }

    /// The exponent e attached to variable var; requires has_power(var).
    int exponent(int var) const {
        if (!has_power(var))
            throw PreconditionError("variable x" + std::to_string(var + 1) +
                                    " carries no pure power");
        return exps_[static_cast<std::size_t>(var)];
    }

    friend bool operator==(const PurePowers&, const PurePowers&) = default;

private:
    std::vector<int> exps_;
};

/// The ideal (x_1^{e_1}, ..., x_r^{e_r}) inside the given ring.
inline MonomialIdeal pure_powers_ideal(const PurePowers& P, RingContext ring) {
    if (P.count() > ring.var_count())
        throw PreconditionError("more pure powers than variables");
    std::vector<Monomial> gens;
    for (int i = 0; i < P.count(); ++i)
        gens.push_back(Monomial::variable(ring.var_count(), i, P.exponent(i)));
    return MonomialIdeal(ring, std::move(gens));
}

/// A piecewise lex specification: for each i, a generator list of a lex
/// ideal L_(i) in the subring on x_1..x_i.  Generators are stored as
/// full-ring monomials whose exponents vanish beyond position i.
class PiecewiseLexSpec {
public:
    /// components[i] holds the generators of L_(i+1).  Validation is
    /// strict: wrong support or a non-lex component is an error.
    PiecewiseLexSpec(RingContext ring, std::vector<std::vector<Monomial>> components)
        : ring_(ring), components_(std::move(components)) {
        components_.resize(static_cast<std::size_t>(ring.var_count()));
        for (auto& comp : components_) {
            std::sort(comp.begin(), comp.end(), LexGreater{});
            comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
        }
        for (int i = 0; i < ring.var_count(); ++i) validate_component(i);
    }

    static PiecewiseLexSpec none(RingContext ring) { return PiecewiseLexSpec(ring, {}); }

    const RingContext& ring() const { return ring_; }

    const std::vector<Monomial>& component(int i) const {
        return components_.at(static_cast<std::size_t>(i));
    }

    bool empty() const {
        for (const auto& c : components_)
            if (!c.empty()) return false;
        return true;
    }

    /// All component generators, as full-ring monomials.
    std::vector<Monomial> all_generators() const {
        std::vector<Monomial> out;
        for (const auto& c : components_) out.insert(out.end(), c.begin(), c.end());
        return out;
    }

    friend bool operator==(const PiecewiseLexSpec&, const PiecewiseLexSpec&) = default;

private:
    void validate_component(int i) {
        const auto& comp = components_[static_cast<std::size_t>(i)];
        if (comp.empty()) return;
        std::vector<Monomial> sub_gens;
        for (const Monomial& g : comp) {
            if (g.var_count() != ring_.var_count())
                throw RingMismatchError("piecewise lex generator has wrong exponent count");
            for (int v = i + 1; v < ring_.var_count(); ++v)
                if (g.exponent(v) != 0)
                    throw PreconditionError("generator " + g.str() + " of L_(" +
                                            std::to_string(i + 1) +
                                            ") uses a variable outside x1..x" +
                                            std::to_string(i + 1));
            std::vector<int> e(g.exponents().begin(), g.exponents().begin() + i + 1);
            sub_gens.emplace_back(std::move(e));
        }
        MonomialIdeal sub(RingContext(i + 1), std::move(sub_gens));
        if (!is_lex(sub, sub.max_gen_degree() + 1))
            throw PreconditionError("component L_(" + std::to_string(i + 1) +
                                    ") is not a lex ideal in its subring");
    }

    RingContext ring_;
    std::vector<std::vector<Monomial>> components_;
};

/// The piecewise lex ideal L_(1)A + ... + L_(n)A, minimalized.  The
/// result is strongly stable: each extended component is, and sums of
/// strongly stable ideals are.
inline MonomialIdeal plex_ideal(const PiecewiseLexSpec& spec) {
    return MonomialIdeal(spec.ring(), spec.all_generators());
}

}  // namespace lexpp
