#pragma once

#include "nodelift/arith/dual.hpp"
#include "nodelift/arith/modular.hpp"
#include "nodelift/arith/quadsurd.hpp"
#include "nodelift/arith/rational.hpp"
#include "nodelift/arith/ring.hpp"

#include <string>
#include <variant>

namespace nodelift {

/// A coefficient tagged with its ring. Arithmetic between different rings
/// raises RingMismatch; conversions are explicit via convert().
class Scalar {
public:
    using Value = std::variant<Rational, ModularScalar, DualScalar, QuadSurd>;

    Scalar() : v_(Rational{}) {}
    Scalar(Rational v) : v_(std::move(v)) {}
    Scalar(ModularScalar v) : v_(std::move(v)) {}
    Scalar(DualScalar v) : v_(std::move(v)) {}
    Scalar(QuadSurd v) : v_(std::move(v)) {}

    static Scalar zero(const Ring& r) { return from_int(r, 0); }
    static Scalar one(const Ring& r) { return from_int(r, 1); }
    static Scalar from_int(const Ring& r, const BigInt& v);
    /// Embeds a rational into r: reduction for Z/p^k and F_p[e], identity for Q, Q(sqrt d).
    static Scalar from_rational(const Ring& r, const Rational& q);

    Ring ring() const;
    const Value& value() const noexcept { return v_; }

    template <class T> const T& as() const { return std::get<T>(v_); }
    template <class T> bool holds() const noexcept { return std::holds_alternative<T>(v_); }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    std::string to_string() const;

    /// Total order used for deterministic sorting (not compatible with field structure).
    static bool canonical_less(const Scalar& a, const Scalar& b);

private:
    void require_same_ring(const Scalar& o) const;

    Value v_;
};

/// Explicit ring change. Supported: Q -> anything (reduction/embedding),
/// Z/p^k -> Z/p^j (j <= k), Z/p -> F_p[e]/e^k, F_p[e]/e^k -> F_p[e]/e^j (j <= k),
/// identity. Anything else raises RingMismatch.
Scalar convert(const Scalar& s, const Ring& target);

} // namespace nodelift
