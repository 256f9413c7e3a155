#pragma once

#include "nodelift/arith/bigint.hpp"
#include "nodelift/arith/scalar.hpp"
#include "nodelift/poly/multipoly.hpp"
#include "nodelift/singscan/scan.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nodelift::lifting {

inline constexpr std::uint64_t kRootGuard = 10'000'000;

/// c0 + c1 x + ... + cn x^n
using IntPoly = std::vector<BigInt>;

/// Coefficients of a univariate polynomial over Q with integer coefficients.
IntPoly int_poly(const MultiPoly& f);

enum class RootStatus { SimpleLift, NonReducedFiber, Obstructed };
std::string to_string(RootStatus s);
RootStatus root_status_from_string(const std::string& s);

/// A root mod p (the constant coefficient, for dual numbers) and its fate up to level k.
struct BaseRoot {
    std::uint64_t residue = 0;
    RootStatus status = RootStatus::SimpleLift;
    unsigned obstructed_at = 0; ///< first level with no root above it; 0 unless obstructed
    std::size_t lifts = 0;      ///< roots at level k above this residue
};

struct LiftReport {
    Ring ring;
    std::vector<Scalar> roots;               ///< ascending
    std::vector<BaseRoot> base_roots;        ///< ascending by residue
    std::vector<std::size_t> roots_per_level; ///< index j-1 holds the count at level j
    bool hensel_checked = false;             ///< the Newton fast path ran and agreed

    const BaseRoot& base_of(const Scalar& root) const;
};

/// All r in Z/p^k with f(r) = 0, found exhaustively at every level 1..k. Simple
/// roots are also lifted by Newton iteration and must match. SizeGuard when p^k > guard.
LiftReport roots_mod_prime_power(const IntPoly& f, std::uint64_t p, unsigned k, std::uint64_t guard = kRootGuard);

/// All x in F_p[e]/e^k with f(x) = 0, by exhaustive search over coefficient tuples.
LiftReport roots_dual_numbers(const IntPoly& f, std::uint64_t p, unsigned k, std::uint64_t guard = kRootGuard);

/// Newton lift of a simple root r mod p to Z/p^k; InvalidArgument if f'(r) = 0 mod p.
std::uint64_t hensel_lift(const IntPoly& f, std::uint64_t p, unsigned k, std::uint64_t r);

/// Points of (Z/p^k)^n where f and all its partial derivatives vanish. f has
/// p-integral rational coefficients or already lives over Z/p^k.
std::vector<std::vector<std::uint64_t>> singular_section_detect(const MultiPoly& f, std::uint64_t p, unsigned k,
                                                                const singscan::ScanOptions& opts = {});

} // namespace nodelift::lifting
