#include "cyclofactor/cases.hpp"

namespace cyclofactor {

const char* case_name(CaseTag tag) {
    switch (tag) {
    case CaseTag::BaseSimple: return "BaseSimple";
    case CaseTag::BaseTrinomial: return "BaseTrinomial";
    case CaseTag::WOddSimple: return "WOddSimple";
    case CaseTag::WOdd8n: return "WOdd8n";
    case CaseTag::WTwo: return "WTwo";
    case CaseTag::Unsupported: return "Unsupported";
    }
    return "?";
}

PrimePower prime_power_split(u128 q) {
    if (q < 2) throw invalid_input("q must be at least 2");
    FactoredNat f = factorize(q);
    if (f.factors.size() != 1) throw invalid_input("q must be a prime power");
    return PrimePower{static_cast<u64>(f.factors[0].first), f.factors[0].second};
}

CaseInfo classify_case(u64 n, u128 q) {
    if (n == 0) throw invalid_input("n must be positive");
    if (gcd_u128(n, q) != 1) throw invalid_input("classify_case requires gcd(n, q) = 1");
    prime_power_split(q);
    u128 rad = radical(factorize(n));
    u64 w = rad == 1 ? 1 : static_cast<u64>(mult_order(q, rad));
    const bool three_mod_four = (q % 4) == 3;
    const bool eight_div_n = (n % 8) == 0;
    if (w == 1) return {three_mod_four && eight_div_n ? CaseTag::BaseTrinomial : CaseTag::BaseSimple, 1};
    if (w == 2) return {CaseTag::WTwo, 2};
    if ((w & 1) && is_prime_u64(w))
        return {three_mod_four && eight_div_n ? CaseTag::WOdd8n : CaseTag::WOddSimple, w};
    return {CaseTag::Unsupported, w};
}

namespace {

// gcd(n, q^s - 1) without forming q^s
u128 gcd_qs_minus_1(u64 n, u128 q, u64 s) {
    if (n == 1) return 1;
    u128 t = powmod(q % n, s, n);
    u128 rem = (t + n - 1) % n;
    return gcd_u128(n, rem);
}

u128 try_l(u128 q, u64 s, u128 g) {
    try {
        return (checked_pow(q, s) - 1) / g;
    } catch (const overflow_error&) {
        return 0;
    }
}

} // namespace

CaseParams derive_params(u64 n, u128 q, CaseInfo info) {
    if (info.tag == CaseTag::Unsupported)
        throw invalid_input("derive_params: unsupported case");
    CaseParams P;
    P.n = n;
    P.q = q;
    PrimePower pp = prime_power_split(q);
    P.p = pp.p;
    P.s = pp.s;
    P.w = info.w;
    P.tag = info.tag;
    P.split = radical_split(n, q, info.w);

    P.g1 = gcd_qs_minus_1(n, q, 1);
    P.g2 = gcd_qs_minus_1(n, q, 2);
    P.gw = gcd_qs_minus_1(n, q, P.w);
    P.g2w = gcd_qs_minus_1(n, q, 2 * P.w);
    P.m1 = n / static_cast<u64>(P.g1);
    P.m2 = n / static_cast<u64>(P.g2);
    P.mw = n / static_cast<u64>(P.gw);
    P.m2w = n / static_cast<u64>(P.g2w);
    P.l1 = try_l(q, 1, P.g1);
    P.l2 = try_l(q, 2, P.g2);
    P.lw = try_l(q, P.w, P.gw);
    P.l2w = try_l(q, 2 * P.w, P.g2w);
    P.mw1 = P.split.n1 / static_cast<u64>(gcd_u128(P.split.n1, P.g1));
    if (n % 2 == 0) {
        u32 a = valuation(2, n / 2);
        u32 b = valuation(2, q + 1);
        P.r = std::min(a, b);
    }
    return P;
}

} // namespace cyclofactor
