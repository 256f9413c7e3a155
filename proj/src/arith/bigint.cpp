#include "nodelift/arith/bigint.hpp"
#include "nodelift/error.hpp"


namespace nodelift {

BigInt big_gcd(BigInt a, BigInt b)
{
    a = big_abs(a);
    b = big_abs(b);
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt big_lcm(const BigInt& a, const BigInt& b)
{
    if (a == 0 || b == 0)
        return 0;
    return big_abs(a / big_gcd(a, b) * b);
}

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m)
{
    BigInt r = v % m;
    if (r < 0)
        r += m;
    return r.convert_to<std::uint64_t>();
}

std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(const std::string& text)
{
    if (text.empty())
        throw Error(ErrorCode::BadInput, "empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size())
        throw Error(ErrorCode::BadInput, "bad integer literal '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw Error(ErrorCode::BadInput, "bad integer literal '" + text + "'");
    BigInt v(text.substr(i));
    return text[0] == '-' ? BigInt(-v) : v;
}

} // namespace nodelift
