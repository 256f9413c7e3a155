#include "nodelift/arith/numtheory.hpp"
#include "nodelift/arith/modular.hpp"
#include "nodelift/error.hpp"

#include <algorithm>

namespace nodelift {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + 1 < m - i; ++j)
            b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

} // namespace

std::vector<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p)
{
    if (p == 2 || !is_prime(p))
        throw Error(ErrorCode::InvalidArgument, "square roots need an odd prime, got " + std::to_string(p));
    a %= p;
    std::vector<std::uint64_t> out;
    if (a == 0)
        return {0};
    if (p < 10000) {
        for (std::uint64_t r = 1; r < p; ++r)
            if (mul_mod(r, r, p) == a)
                out.push_back(r);
        return out;
    }
    if (pow_mod(a, (p - 1) / 2, p) != 1)
        return out;
    std::uint64_t r = tonelli_shanks(a, p);
    out = {r, p - r};
    std::sort(out.begin(), out.end());
    return out;
}

BigInt FactorList::product() const
{
    BigInt v = cofactor;
    for (const auto& [prime, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            v *= prime;
    return v;
}

FactorList factor_integer(const BigInt& n, std::uint64_t trial_bound)
{
    if (n == 0)
        throw Error(ErrorCode::ZeroInput, "cannot factor 0");
    if (trial_bound < 2)
        throw Error(ErrorCode::InvalidArgument, "trial bound must be >= 2");
    FactorList out;
    BigInt rest = big_abs(n);
    auto take = [&](std::uint64_t d) {
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e)
            out.factors.emplace_back(BigInt(d), e);
    };
    take(2);
    for (std::uint64_t d = 3; d <= trial_bound; d += 2) {
        if (BigInt(d) * d > rest)
            break;
        take(d);
    }
    // A survivor <= trial_bound has no factor below its square root, so it is prime.
    if (rest > 1 && rest <= trial_bound) {
        out.factors.emplace_back(rest, 1);
        rest = 1;
    }
    out.cofactor = rest;
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

} // namespace nodelift
