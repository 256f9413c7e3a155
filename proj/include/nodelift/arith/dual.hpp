#pragma once

#include "nodelift/arith/modular.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nodelift {

/// c0 + c1 e + ... + c_{k-1} e^{k-1} in F_p[e]/e^k.
class DualScalar {
public:
    DualScalar() = default;
    /// Coefficients are reduced mod p and padded or truncated to length k.
    DualScalar(std::vector<std::uint64_t> coeffs, std::uint64_t p, unsigned k);
    static DualScalar from_int(const BigInt& v, std::uint64_t p, unsigned k);

    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return static_cast<unsigned>(c_.size()); }

    bool is_zero() const noexcept;
    bool is_unit() const noexcept { return !c_.empty() && c_[0] != 0; }

    DualScalar operator-() const;
    DualScalar& operator+=(const DualScalar& o);
    DualScalar& operator-=(const DualScalar& o);
    DualScalar& operator*=(const DualScalar& o);
    friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
    friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
    friend DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
    friend bool operator==(const DualScalar& a, const DualScalar& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    DualScalar inverse() const;
    /// Drops coefficients of e^j for j >= new_k.
    DualScalar truncate(unsigned new_k) const;

    /// "2+3e+e^2" style, "0" for zero.
    std::string to_string() const;

private:
    void check_compatible(const DualScalar& o) const;

    std::vector<std::uint64_t> c_{0};
    std::uint64_t p_ = 2;
};

} // namespace nodelift
