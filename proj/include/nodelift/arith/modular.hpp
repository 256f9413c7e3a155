#pragma once

#include "nodelift/arith/rational.hpp"

#include <cstdint>
#include <string>

namespace nodelift {

/// Describes Z/p^k. The prime is verified on construction.
struct Modulus {
    std::uint64_t p = 2;
    unsigned k = 1;
    std::uint64_t value = 2; // p^k

    Modulus() = default;
    Modulus(std::uint64_t prime, unsigned exponent);

    friend bool operator==(const Modulus& a, const Modulus& b) {
        return a.p == b.p && a.k == b.k;
    }
};

/// Element of Z/p^k, stored as a residue in [0, p^k).
class ModularScalar {
public:
    ModularScalar() = default;
    ModularScalar(std::uint64_t residue, const Modulus& m);
    static ModularScalar from_int(const BigInt& v, const Modulus& m);

    std::uint64_t residue() const noexcept { return r_; }
    const Modulus& modulus() const noexcept { return m_; }
    bool is_zero() const noexcept { return r_ == 0; }
    bool is_unit() const noexcept { return r_ % m_.p != 0; }

    ModularScalar operator-() const;
    ModularScalar& operator+=(const ModularScalar& o);
    ModularScalar& operator-=(const ModularScalar& o);
    ModularScalar& operator*=(const ModularScalar& o);
    friend ModularScalar operator+(ModularScalar a, const ModularScalar& b) { return a += b; }
    friend ModularScalar operator-(ModularScalar a, const ModularScalar& b) { return a -= b; }
    friend ModularScalar operator*(ModularScalar a, const ModularScalar& b) { return a *= b; }
    friend bool operator==(const ModularScalar& a, const ModularScalar& b) {
        return a.r_ == b.r_ && a.m_ == b.m_;
    }

    /// Throws NotInvertible when p divides the residue.
    ModularScalar inverse() const;
    ModularScalar pow(std::uint64_t e) const;

    std::string to_string() const { return std::to_string(r_); }

private:
    std::uint64_t r_ = 0;
    Modulus m_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse of a modulo m; throws NotInvertible when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// numerator * denominator^-1 in Z/p^k. Throws DenominatorNotInvertible when p | denominator.
ModularScalar reduce_rational(const Rational& q, const Modulus& m);

} // namespace nodelift
