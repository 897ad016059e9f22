#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/field.hpp"
#include "lexpp/hilbert.hpp"
#include "lexpp/homology.hpp"
#include "lexpp/ideal.hpp"
#include "lexpp/stability.hpp"

namespace lexpp {

/// Graded Betti numbers of a monomial ideal viewed as a module (so
/// b_{0,j} counts degree-j minimal generators and the homological index
/// stays below the variable count).  Tables carry the field they were
/// computed over; comparing tables of different conventions is not
/// meaningful, and the convention here is fixed to ideal-as-module.
class BettiTable {
public:
    explicit BettiTable(FieldSpec field) : field_(field) {}

    const FieldSpec& field() const { return field_; }

    void add(int i, int j, long long value) {
        if (value == 0) return;
        entries_[{i, j}] += value;
        if (entries_[{i, j}] == 0) entries_.erase({i, j});
    }

    long long at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    int max_degree() const {
        int best = 0;
        for (const auto& [key, value] : entries_) best = std::max(best, key.second);
        return best;
    }

    int max_index() const {
        int best = 0;
        for (const auto& [key, value] : entries_) best = std::max(best, key.first);
        return best;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    FieldSpec field_;
    std::map<std::pair<int, int>, long long> entries_;
};

/// Entry-for-entry equality regardless of the field tags.
inline bool same_entries(const BettiTable& A, const BettiTable& B) {
    return A.entries() == B.entries();
}

/// True iff every entry of A is at most the matching entry of B
/// (missing entries count as zero).
inline bool betti_leq(const BettiTable& A, const BettiTable& B) {
    for (const auto& [key, value] : A.entries())
        if (value > B.at(key.first, key.second)) return false;
    return true;
}

/// Join closure of the generator multidegrees: every multidegree
/// carrying a nonzero Betti number of I lies in this lattice.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& I,
                                         std::size_t max_points = 200000) {
    std::set<Monomial> lattice(I.min_gens().begin(), I.min_gens().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Monomial> snapshot(lattice.begin(), lattice.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                Monomial join = lcm(snapshot[i], snapshot[j]);
                if (lattice.insert(std::move(join)).second) {
                    grew = true;
                    if (lattice.size() > max_points)
                        throw PreconditionError("lcm lattice exceeded the configured cap");
                }
            }
        }
    }
    return {lattice.begin(), lattice.end()};
}

/// Graded Betti numbers over the given field: for every lattice
/// multidegree m, the reduced homology of the upper Koszul complex at m
/// contributes dim H~_{i-1} to b_{i, deg m}.
inline BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field,
                              std::size_t max_gens = 256) {
    if (I.min_gens().size() > max_gens)
        throw PreconditionError("betti_table: generator count " +
                                std::to_string(I.min_gens().size()) +
                                " exceeds the configured bound " + std::to_string(max_gens));
    BettiTable table(field);
    const int n = I.ring().var_count();
    for (const Monomial& m : lcm_lattice(I)) {
        const std::vector<long long> h = homology_ranks(upper_koszul(I, m), field);
        for (std::size_t idx = 0; idx < h.size(); ++idx) {
            if (h[idx] == 0) continue;
            const int i = static_cast<int>(idx);
            if (i > n - 1)
                throw Error("betti_table: homological index " + std::to_string(i) +
                            " above the projective dimension bound");
            table.add(i, m.degree(), h[idx]);
        }
    }
    // The bottom row must reproduce the generator degree census.
    std::map<int, long long> census;
    for (const Monomial& g : I.min_gens()) ++census[g.degree()];
    for (const auto& [j, count] : census)
        if (table.at(0, j) != count)
            throw Error("betti_table: bottom row disagrees with the generator census");
    for (const auto& [key, value] : table.entries())
        if (key.first == 0 && census[key.second] != value)
            throw Error("betti_table: spurious bottom-row entry");
    return table;
}

/// Eliahou-Kervaire closed form for stable ideals: each minimal
/// generator u of degree d contributes binomial(max(u)-1, i) to
/// b_{i, i+d}, where max(u) is the largest variable index (1-based)
/// dividing u.  Characteristic-free; tagged with characteristic 0.
inline BettiTable ek_betti(const MonomialIdeal& I) {
    if (!is_stable(I)) throw PreconditionError("ek_betti: input ideal is not stable");
    BettiTable table(FieldSpec(0));
    for (const Monomial& u : I.min_gens()) {
        const int max_one_based = u.max_var() + 1;
        const int d = u.degree();
        if (max_one_based == 0) {
            table.add(0, 0, 1);  // unit ideal: free module
            continue;
        }
        for (int i = 0; i < max_one_based; ++i)
            table.add(i, i + d, binomial(max_one_based - 1, i));
    }
    return table;
}

/// Per-characteristic tables plus the verdict that they all agree.
struct CharIndependence {
    bool independent;
    std::vector<std::pair<FieldSpec, BettiTable>> tables;
};

inline CharIndependence char_independent(const MonomialIdeal& I,
                                         const std::vector<FieldSpec>& chars) {
    CharIndependence result{true, {}};
    for (const FieldSpec& f : chars) result.tables.emplace_back(f, betti_table(I, f));
    for (std::size_t i = 1; i < result.tables.size(); ++i)
        if (!same_entries(result.tables[i].second, result.tables[0].second))
            result.independent = false;
    return result;
}

/// Alternating column sums of the table must match the coefficients of
/// HS_I(t) * (1-t)^n degree by degree; checks all j up to the largest
/// Betti degree.  The Hilbert function must extend at least that far.
inline bool euler_hilbert_consistent(const MonomialIdeal& I, const BettiTable& table,
                                     const HilbertFunction& hf) {
    const int n = I.ring().var_count();
    const int jmax = table.max_degree();
    if (hf.truncation() < jmax)
        throw PreconditionError("euler_hilbert_consistent: Hilbert function truncated below "
                                "the largest Betti degree");
    for (int j = 0; j <= jmax; ++j) {
        long long convolution = 0;
        for (int k = 0; k <= std::min(j, n); ++k) {
            const long long sign = (k % 2 == 0) ? 1 : -1;
            convolution += sign * binomial(n, k) * hf.at(j - k);
        }
        long long alternating = 0;
        for (int i = 0; i <= n - 1; ++i) {
            const long long sign = (i % 2 == 0) ? 1 : -1;
            alternating += sign * table.at(i, j);
        }
        if (alternating != convolution) return false;
    }
    return true;
}

}  // namespace lexpp
