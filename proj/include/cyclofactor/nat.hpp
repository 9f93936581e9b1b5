#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclofactor {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Error types map onto CLI exit codes: invalid_input -> 2, bound_exceeded -> 3.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};
struct bound_exceeded : std::runtime_error {
    explicit bound_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& msg) : std::runtime_error(msg) {}
};

std::string dec_string(u128 v);
u128 parse_u128(const std::string& s);

// Checked arithmetic: throws overflow_error instead of wrapping.
u128 checked_add(u128 a, u128 b);
u128 checked_mul(u128 a, u128 b);
u128 checked_pow(u128 base, u64 exp);

u128 gcd_u128(u128 a, u128 b);

// base^exp mod m; requires m >= 1 and m < 2^64 so products fit in u128.
u128 powmod(u128 base, u128 exp, u128 m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(u64 n);

} // namespace cyclofactor
