#include "cyclofactor/factorizer.hpp"

namespace cyclofactor {

namespace {

// All per-degree counts are exact rationals that the theory guarantees to be
// integers; a failed division here means a formula was transcribed wrong.
u64 exact_div(u128 num, u128 den) {
    if (den == 0 || num % den != 0) throw overflow_error("count formula produced a non-integer");
    return static_cast<u64>(num / den);
}

void add(std::map<u64, u64>& m, u64 degree, u128 num, u128 den) {
    u64 c = exact_div(num, den);
    if (c) m[degree] += c;
}

bool divides(u64 a, u64 b) { return a != 0 && b % a == 0; }

std::vector<u64> small_divisors(u64 m) {
    std::vector<u64> out;
    for (u128 d : divisors(factorize(m))) out.push_back(static_cast<u64>(d));
    return out;
}

u64 phi(u64 t) { return static_cast<u64>(euler_phi(factorize(t))); }

} // namespace

CountResult count_factors(u64 n, u128 q) {
    if (n == 0) throw invalid_input("n must be positive");
    CaseInfo info = classify_case(n, q);
    if (info.tag == CaseTag::Unsupported)
        throw invalid_input("no closed-form count: multiplicative order w = " +
                            dec_string(info.w) + " is composite");
    CaseParams P = derive_params(n, q, info);
    const u128 two_r = u128(1) << P.r;

    CountResult res;
    switch (P.tag) {
    case CaseTag::BaseSimple:
        for (u64 t : small_divisors(P.m1)) add(res.by_degree, t, u128(phi(t)) * P.g1, t);
        break;
    case CaseTag::BaseTrinomial:
        for (u64 t : small_divisors(P.m2)) {
            if (t % 2 == 1) {
                add(res.by_degree, t, u128(phi(t)) * P.g1, t);
                add(res.by_degree, 2 * t, u128(phi(t)) * (two_r - 1) * P.g1, 2 * u128(t));
            } else {
                add(res.by_degree, 2 * t, u128(phi(t)) * two_r * P.g1, 2 * u128(t));
            }
        }
        break;
    case CaseTag::WOddSimple:
        for (u64 t : small_divisors(P.mw1)) add(res.by_degree, t, u128(phi(t)) * P.g1, t);
        for (u64 t : small_divisors(P.mw)) {
            u128 g = divides(t, P.mw1) ? u128(P.gw) - P.g1 : u128(P.gw);
            add(res.by_degree, P.w * t, u128(phi(t)) * g, u128(P.w) * t);
        }
        break;
    case CaseTag::WOdd8n:
        for (u64 t : small_divisors(P.m2w)) {
            bool in_mw1 = divides(t, P.mw1);
            if (t % 2 == 1) {
                if (in_mw1) {
                    add(res.by_degree, t, u128(phi(t)) * P.g1, t);
                    add(res.by_degree, 2 * t, u128(phi(t)) * (two_r - 1) * P.g1, 2 * u128(t));
                    add(res.by_degree, P.w * t, u128(phi(t)) * (u128(P.gw) - P.g1), u128(P.w) * t);
                    add(res.by_degree, 2 * P.w * t,
                        u128(phi(t)) * (two_r - 1) * (u128(P.gw) - P.g1), 2 * u128(P.w) * t);
                } else {
                    add(res.by_degree, P.w * t, u128(phi(t)) * P.gw, u128(P.w) * t);
                    add(res.by_degree, 2 * P.w * t, u128(phi(t)) * (two_r - 1) * P.gw,
                        2 * u128(P.w) * t);
                }
            } else {
                if (in_mw1) {
                    add(res.by_degree, 2 * t, u128(phi(t)) * two_r * P.g1, 2 * u128(t));
                    add(res.by_degree, 2 * P.w * t, u128(phi(t)) * two_r * (u128(P.gw) - P.g1),
                        2 * u128(P.w) * t);
                } else {
                    add(res.by_degree, 2 * P.w * t, u128(phi(t)) * two_r * P.gw,
                        2 * u128(P.w) * t);
                }
            }
        }
        break;
    case CaseTag::WTwo:
        for (u64 t : small_divisors(P.mw1)) add(res.by_degree, t, u128(phi(t)) * P.g1, t);
        for (u64 t : small_divisors(P.m2)) {
            u128 g = divides(t, P.mw1) ? u128(P.g2) - P.g1 : u128(P.g2);
            add(res.by_degree, 2 * t, u128(phi(t)) * g, 2 * u128(t));
        }
        break;
    case CaseTag::Unsupported:
        break; // unreachable
    }

    u128 total = 0;
    u128 degree_sum = 0;
    for (auto& [d, c] : res.by_degree) {
        total += c;
        degree_sum += u128(d) * c;
    }
    if (degree_sum != n) throw overflow_error("count formulas do not sum degrees to n");
    res.total = static_cast<u64>(total);
    return res;
}

} // namespace cyclofactor
