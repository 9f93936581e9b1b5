#pragma once

#include "cyclofactor/nat.hpp"

#include <utility>
#include <vector>

namespace cyclofactor {

struct FactoredNat {
    u128 value = 1;
    std::vector<std::pair<u128, u32>> factors; // primes ascending, exponents >= 1
};

// Deterministic factorization: trial division up to 10^6, then Brent-Pollard rho
// with a fixed parameter sequence. Supports n < 2^64.
FactoredNat factorize(u128 n);

u128 radical(const FactoredNat& n);
u32 valuation(u128 p, u128 n); // largest e with p^e | n; p must be prime, n >= 1
u128 euler_phi(const FactoredNat& n);
std::vector<u128> divisors(const FactoredNat& n); // ascending

// Multiplicative order of q modulo m, m >= 2, gcd(q, m) = 1.
// Computed by reducing the factored group order, never by iteration.
u128 mult_order(u128 q, u128 m);

// n = w^w_exponent * n1 * n2 where rad(n1) | q-1 and rad(n2) | (q^w-1)/(q-1).
// For odd prime w the prime w itself (the only prime that can divide both
// sides) goes entirely into the w slot and gcd(w, n1*n2) = 1.
// For w = 2 the full 2-part goes into the w slot and n1, n2 are odd.
// For w = 1 the split degenerates to (0, n, 1).
struct RadicalSplit {
    u32 w_exponent = 0;
    u128 n1 = 1;
    u128 n2 = 1;
};

RadicalSplit radical_split(u128 n, u128 q, u64 w);

} // namespace cyclofactor
