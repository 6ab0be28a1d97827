#pragma once

#include <map>
#include <optional>
#include <utility>

#include "digitsum/natural.hpp"

namespace digitsum::valuations {

inline constexpr unsigned long kDefaultFactorLimit = 1'000'000;

// Prime -> exponent map; product of p^e reproduces the factored value.
struct Factorization {
    std::map<unsigned long, unsigned long> factors;

    Natural value() const;
    unsigned long exponent_of(unsigned long p) const;
};

// value = base^exponent * cofactor with base not dividing the cofactor.
struct PowerDecomposition {
    Natural base;
    unsigned long exponent = 0;
    Natural cofactor;
};

// Primes p | a and q | b with nu_p(a)*nu_q(b) - nu_q(a)*nu_p(b) > 0;
// c1 is that determinant divided by nu_q(b). Whenever a^n = b^m * t,
// nu_p(t) >= c1 * n.
struct PrimePairConstant {
    unsigned long p = 0;
    unsigned long q = 0;
    Rational c1;
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(unsigned long p);

// nu_p(n): exponent of the prime p in n. Errors: n = 0 (undefined), p not a
// prime below 2^64 (invalid-prime).
unsigned long nu(const Natural& n, const Natural& p);

// Trial division; every prime factor must be <= limit or an
// incomplete-factorization error names the remaining cofactor.
Factorization factorize(const Natural& n, unsigned long limit = kDefaultFactorLimit);

class IncompleteFactorizationError : public Error {
public:
    IncompleteFactorizationError(const Natural& cofactor, unsigned long limit)
        : Error(errc::incomplete_factorization,
                "cofactor " + cofactor.get_str() + " has no prime factor <= " +
                    std::to_string(limit)),
          cofactor_(cofactor) {}

    const Natural& cofactor() const { return cofactor_; }

private:
    Natural cofactor_;
};

// Minimal (u, v) with a^v = b^u when log a / log b is rational, empty
// otherwise. Exact integer test on the factorization exponent vectors,
// confirmed by a big-integer power comparison.
std::optional<std::pair<unsigned long, unsigned long>> multiplicative_dependence(
    const Natural& a, const Natural& b, unsigned long limit = kDefaultFactorLimit);

// Requires multiplicative independence. Among all pairs with a positive
// determinant, maximizes c1, then takes the smallest p, then the smallest q.
PrimePairConstant select_prime_pair(const Natural& a, const Natural& b,
                                    unsigned long limit = kDefaultFactorLimit);

// Smallest factor d of a with gcd(a/d, b) = 1: the part of a supported on
// primes shared with b.
Natural reduced_divisor(const Natural& a, const Natural& b,
                        unsigned long limit = kDefaultFactorLimit);

// n = base^m * cofactor with base not dividing cofactor; m equals the number
// of trailing zero digits of n in that base.
PowerDecomposition strip_base_power(const Natural& n, const Natural& base);

}  // namespace digitsum::valuations
