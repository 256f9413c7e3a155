#pragma once

#include "nodelift/arith/modular.hpp"

#include <cstdint>
#include <string>

namespace nodelift {

enum class RingKind { Rational, Modular, Dual, Quadratic };

/// Run-time coefficient ring descriptor: Q, Z/p^k, F_p[e]/e^k or Q(sqrt d).
class Ring {
public:
    static Ring rationals();
    static Ring modular(std::uint64_t p, unsigned k = 1);
    static Ring prime_field(std::uint64_t p) { return modular(p, 1); }
    static Ring dual(std::uint64_t p, unsigned k);
    static Ring quadratic(std::int64_t d);

    RingKind kind() const noexcept { return kind_; }
    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::int64_t d() const noexcept { return d_; }
    /// Z/p^k descriptor; valid for Modular and Dual rings.
    Modulus modulus() const;

    bool is_field() const noexcept;
    bool is_prime_field() const noexcept { return kind_ == RingKind::Modular && k_ == 1; }
    /// 0 for characteristic zero, p^k for Z/p^k, p for dual numbers.
    std::uint64_t characteristic() const noexcept;

    /// "QQ", "Z/9", "F_5[e]/e^3", "Q(sqrt5)".
    std::string describe() const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_ && a.d_ == b.d_;
    }

private:
    RingKind kind_ = RingKind::Rational;
    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::int64_t d_ = 0;
};

} // namespace nodelift
