#include "nodelift/arith/modular.hpp"
#include "nodelift/arith/numtheory.hpp"
#include "nodelift/error.hpp"

#include <limits>

namespace nodelift {

Modulus::Modulus(std::uint64_t prime, unsigned exponent) : p(prime), k(exponent)
{
    if (k == 0)
        throw Error(ErrorCode::InvalidArgument, "modulus exponent must be >= 1");
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    value = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (value > (std::uint64_t{1} << 62) / p)
            throw Error(ErrorCode::InvalidArgument, "modulus p^k exceeds 2^62");
        value *= p;
    }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m)
{
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw Error(ErrorCode::NotInvertible,
                    std::to_string(a) + " is not invertible mod " + std::to_string(m));
    __int128 v = old_s % static_cast<__int128>(m);
    if (v < 0)
        v += m;
    return static_cast<std::uint64_t>(v);
}

ModularScalar::ModularScalar(std::uint64_t residue, const Modulus& m) : r_(residue % m.value), m_(m) {}

ModularScalar ModularScalar::from_int(const BigInt& v, const Modulus& m)
{
    return ModularScalar(mod_u64(v, m.value), m);
}

ModularScalar ModularScalar::operator-() const
{
    return ModularScalar(r_ == 0 ? 0 : m_.value - r_, m_);
}

ModularScalar& ModularScalar::operator+=(const ModularScalar& o)
{
    if (!(m_ == o.m_))
        throw Error(ErrorCode::RingMismatch, "Z/p^k moduli differ");
    r_ += o.r_;
    if (r_ >= m_.value)
        r_ -= m_.value;
    return *this;
}

ModularScalar& ModularScalar::operator-=(const ModularScalar& o) { return *this += -o; }

ModularScalar& ModularScalar::operator*=(const ModularScalar& o)
{
    if (!(m_ == o.m_))
        throw Error(ErrorCode::RingMismatch, "Z/p^k moduli differ");
    r_ = mul_mod(r_, o.r_, m_.value);
    return *this;
}

ModularScalar ModularScalar::inverse() const { return ModularScalar(inv_mod(r_, m_.value), m_); }

ModularScalar ModularScalar::pow(std::uint64_t e) const { return ModularScalar(pow_mod(r_, e, m_.value), m_); }

ModularScalar reduce_rational(const Rational& q, const Modulus& m)
{
    if (q.den() % m.p == 0)
        throw Error(ErrorCode::DenominatorNotInvertible,
                    std::to_string(m.p) + " divides the denominator of " + q.to_string());
    std::uint64_t n = mod_u64(q.num(), m.value);
    std::uint64_t d = mod_u64(q.den(), m.value);
    return ModularScalar(mul_mod(n, inv_mod(d, m.value), m.value), m);
}

} // namespace nodelift
