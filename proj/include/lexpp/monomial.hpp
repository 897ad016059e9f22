#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexpp/errors.hpp"

namespace lexpp {

/// The ambient polynomial ring K[x_1,...,x_n].  Only the number of
/// variables matters; the coefficient field enters elsewhere as a
/// characteristic tag.
class RingContext {
public:
    explicit RingContext(int var_count) : n_(var_count) {
        if (var_count < 1)
            throw PreconditionError("ring needs at least one variable, got " +
                                    std::to_string(var_count));
    }

    int var_count() const { return n_; }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    int n_;
};

/// Exact binomial coefficient C(n, k) for the small arguments used
/// here; intermediate products stay far below 2^63.
inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

/// Number of monomials of total degree d in n variables.
inline long long monomial_count(int n, int d) {
    if (d < 0) return 0;
    return binomial(n - 1 + d, n - 1);
}

/// A monomial as its exponent vector.  Variables are indexed 0..n-1
/// where index 0 is x_1, the lex-largest variable.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0)
                throw PreconditionError("negative exponent in monomial");
    }

    static Monomial one(int var_count) {
        return Monomial(std::vector<int>(static_cast<std::size_t>(var_count), 0));
    }

    static Monomial variable(int var_count, int var, int power = 1) {
        std::vector<int> e(static_cast<std::size_t>(var_count), 0);
        e.at(static_cast<std::size_t>(var)) = power;
        return Monomial(std::move(e));
    }

    int var_count() const { return static_cast<int>(exps_.size()); }

    int exponent(int var) const { return exps_.at(static_cast<std::size_t>(var)); }

    const std::vector<int>& exponents() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    /// True if this monomial divides m.
    bool divides(const Monomial& m) const {
        check_same_ring(m);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial times_var(int var) const {
        std::vector<int> e = exps_;
        ++e.at(static_cast<std::size_t>(var));
        return Monomial(std::move(e));
    }

    /// Divide by x_var; requires a positive exponent there.
    Monomial div_var(int var) const {
        std::vector<int> e = exps_;
        if (e.at(static_cast<std::size_t>(var)) <= 0)
            throw PreconditionError("div_var: variable does not divide monomial");
        --e[static_cast<std::size_t>(var)];
        return Monomial(std::move(e));
    }

    /// The exchange m * x_to / x_from; requires x_from | m.
    Monomial exchange(int from, int to) const { return div_var(from).times_var(to); }

    /// Largest variable index with a positive exponent; -1 for 1.
    int max_var() const {
        for (int i = var_count() - 1; i >= 0; --i)
            if (exps_[static_cast<std::size_t>(i)] > 0) return i;
        return -1;
    }

    friend Monomial operator*(const Monomial& u, const Monomial& v) {
        u.check_same_ring(v);
        std::vector<int> e(u.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = u.exps_[i] + v.exps_[i];
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& u, const Monomial& v) {
        u.check_same_ring(v);
        std::vector<int> e(u.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u.exps_[i], v.exps_[i]);
        return Monomial(std::move(e));
    }

    /// Comparing exponent vectors componentwise from x_1 down gives the
    /// lexicographic order with x_1 > x_2 > ... > x_n; both operands are
    /// assumed to live in the same ring.
    friend std::strong_ordering operator<=>(const Monomial& u, const Monomial& v) {
        return u.exps_ <=> v.exps_;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Human rendering like "x1^2*x3"; "1" for the unit monomial.
    std::string str() const {
        if (is_one()) return "1";
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < var_count(); ++i) {
            int e = exps_[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!first) os << '*';
            os << 'x' << (i + 1);
            if (e > 1) os << '^' << e;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
        return os << m.str();
    }

private:
    void check_same_ring(const Monomial& m) const {
        if (exps_.size() != m.exps_.size())
            throw RingMismatchError("monomials live in different rings (" +
                                    std::to_string(exps_.size()) + " vs " +
                                    std::to_string(m.exps_.size()) + " variables)");
    }

    std::vector<int> exps_;
};

/// Lexicographic comparison with explicit ring validation, convention
/// x_1 > x_2 > ... > x_n.
inline std::strong_ordering lex_cmp(const Monomial& u, const Monomial& v) {
    if (u.var_count() != v.var_count())
        throw RingMismatchError("lex_cmp: monomials live in different rings");
    return u <=> v;
}

/// Comparator for lex-descending containers: largest first.
struct LexGreater {
    bool operator()(const Monomial& u, const Monomial& v) const { return u > v; }
};

/// Split m as f * a^alpha * b^beta with f coprime to x_a and x_b.
struct AbDecomposition {
    Monomial f;
    int alpha;
    int beta;
};

inline AbDecomposition decompose_ab(const Monomial& m, int a, int b) {
    if (a == b) throw PreconditionError("decompose_ab: variables must differ");
    std::vector<int> e = m.exponents();
    AbDecomposition d{Monomial::one(m.var_count()),
                      e.at(static_cast<std::size_t>(a)),
                      e.at(static_cast<std::size_t>(b))};
    e[static_cast<std::size_t>(a)] = 0;
    e[static_cast<std::size_t>(b)] = 0;
    d.f = Monomial(std::move(e));
    return d;
}

namespace detail {
inline void monomials_of_degree_rec(int n, int d, std::vector<int>& prefix,
                                    std::vector<Monomial>& out) {
    if (static_cast<int>(prefix.size()) == n - 1) {
        prefix.push_back(d);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        prefix.push_back(e);
        monomials_of_degree_rec(n, d - e, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace detail

/// All monomials of total degree d in n variables, lex-descending.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    out.reserve(static_cast<std::size_t>(monomial_count(n, d)));
    std::vector<int> prefix;
    detail::monomials_of_degree_rec(n, d, prefix, out);
    return out;
}

}  // namespace lexpp
