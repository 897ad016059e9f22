#pragma once

#include <string>

#include "lexpp/errors.hpp"

namespace lexpp {

/// The coefficient field enters only through its characteristic:
/// 0 (rationals) or a prime p (GF(p)).
class FieldSpec {
public:
    explicit FieldSpec(long long characteristic) : p_(characteristic) {
        if (p_ < 0 || p_ == 1 || (p_ > 1 && !is_prime(p_)))
            throw PreconditionError("field characteristic must be 0 or a prime, got " +
                                    std::to_string(p_));
    }

    long long characteristic() const { return p_; }

    bool is_rational() const { return p_ == 0; }

    std::string str() const { return std::to_string(p_); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
    friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

private:
    static bool is_prime(long long p) {
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) return false;
        return p >= 2;
    }

    long long p_;
};

}  // namespace lexpp
