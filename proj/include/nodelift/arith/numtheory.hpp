#pragma once

#include "nodelift/arith/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nodelift {

/// Deterministic trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

/// All r in [0, p) with r^2 = a mod p, ascending. Requires p an odd prime.
/// Brute force below 10^4, Tonelli-Shanks above.
std::vector<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

struct FactorList {
    std::vector<std::pair<BigInt, unsigned>> factors;
    /// Part of |n| left after trial division; 1 when factorization is complete.
    BigInt cofactor = 1;

    bool complete() const { return cofactor == 1; }
    BigInt product() const;
};

/// Trial division by d <= trial_bound. Primes above the bound stay in the cofactor.
FactorList factor_integer(const BigInt& n, std::uint64_t trial_bound);

} // namespace nodelift
