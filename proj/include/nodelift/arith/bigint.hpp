#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nodelift {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt big_gcd(BigInt a, BigInt b);
BigInt big_lcm(const BigInt& a, const BigInt& b);

/// Non-negative residue of v modulo m (m > 0).
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

std::string to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

} // namespace nodelift
