#pragma once

#include "cyclofactor/intarith.hpp"

namespace cyclofactor {

enum class CaseTag { BaseSimple, BaseTrinomial, WOddSimple, WOdd8n, WTwo, Unsupported };

const char* case_name(CaseTag tag);

struct CaseInfo {
    CaseTag tag = CaseTag::Unsupported;
    u64 w = 0; // ord of q modulo rad(n); 1 when rad(n) | q-1
};

// q = p^s; q as a plain value, p prime, s >= 1.
struct PrimePower {
    u64 p = 0;
    u32 s = 0;
};

PrimePower prime_power_split(u128 q);

// Requires gcd(n, q) = 1, n >= 1, q a prime power >= 2.
CaseInfo classify_case(u64 n, u128 q);

struct CaseParams {
    u64 n = 0;
    u128 q = 0;
    u64 p = 0;
    u32 s = 0;
    u64 w = 1;
    CaseTag tag = CaseTag::Unsupported;
    RadicalSplit split;

    // g_s = gcd(n, q^s - 1), m_s = n / g_s, l_s = (q^s - 1) / g_s
    u128 g1 = 0, g2 = 0, gw = 0, g2w = 0;
    u64 m1 = 0, m2 = 0, mw = 0, m2w = 0;
    u128 l1 = 0, l2 = 0, lw = 0, l2w = 0; // 0 when q^s - 1 overflows 128 bits
    u64 mw1 = 0;                          // n1 / gcd(n1, q - 1)
    u32 r = 0;                            // min{v2(n/2), v2(q+1)} for even n, else 0
};

CaseParams derive_params(u64 n, u128 q, CaseInfo info);

} // namespace cyclofactor
