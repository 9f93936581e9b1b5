#include "cyclofactor/intarith.hpp"

#include <algorithm>
#include <map>

namespace cyclofactor {

namespace {

u64 pollard_rho(u64 n) {
    // Brent's cycle finding; deterministic c = 1, 2, 3, ...
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        auto step = [&](u64 v) { return static_cast<u64>(((static_cast<u128>(v) * v) + c) % n); };
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = static_cast<u64>(gcd_u128(diff, n));
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(u64 n, std::map<u128, u32>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n] += 1;
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

FactoredNat factorize(u128 n) {
    if (n == 0) throw invalid_input("factorize: n must be >= 1");
    if (n >> 64) throw bound_exceeded("factorize: input exceeds 64 bits");
    FactoredNat out;
    out.value = n;
    u64 m = static_cast<u64>(n);
    std::map<u128, u32> acc;
    for (u64 p = 2; p <= 1000000 && static_cast<u128>(p) * p <= m; p == 2 ? p = 3 : p += 2) {
        while (m % p == 0) {
            acc[p] += 1;
            m /= p;
        }
    }
    if (m > 1) {
        if (static_cast<u128>(1000001) * 1000001 > m) {
            acc[m] += 1; // below the trial bound squared, hence prime
        } else {
            factor_into(m, acc);
        }
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

u128 radical(const FactoredNat& n) {
    u128 r = 1;
    for (const auto& [p, e] : n.factors) r = checked_mul(r, p);
    return r;
}

u32 valuation(u128 p, u128 n) {
    if (n == 0) throw invalid_input("valuation: n must be >= 1");
    if (p < 2 || (p < (u128(1) << 64) && !is_prime_u64(static_cast<u64>(p))))
        throw invalid_input("valuation: p must be prime");
    u32 e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

u128 euler_phi(const FactoredNat& n) {
    u128 r = 1;
    for (const auto& [p, e] : n.factors) {
        r = checked_mul(r, p - 1);
        for (u32 i = 1; i < e; ++i) r = checked_mul(r, p);
    }
    return r;
}

std::vector<u128> divisors(const FactoredNat& n) {
    std::vector<u128> out{1};
    for (const auto& [p, e] : n.factors) {
        size_t base = out.size();
        u128 pe = 1;
        for (u32 i = 1; i <= e; ++i) {
            pe = checked_mul(pe, p);
            for (size_t j = 0; j < base; ++j) out.push_back(checked_mul(out[j], pe));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u128 mult_order(u128 q, u128 m) {
    if (m < 2) throw invalid_input("mult_order: modulus must be >= 2");
    if (gcd_u128(q % m, m) != 1) throw invalid_input("mult_order: arguments not coprime");
    u128 group = euler_phi(factorize(m));
    u128 e = group;
    for (const auto& [r, exp] : factorize(group).factors) {
        for (u32 i = 0; i < exp; ++i) {
            if (e % r == 0 && powmod(q, e / r, m) == 1)
                e /= r;
            else
                break;
        }
    }
    return e;
}

RadicalSplit radical_split(u128 n, u128 q, u64 w) {
    if (n == 0 || q < 2 || w == 0) throw invalid_input("radical_split: bad arguments");
    FactoredNat fn = factorize(n);
    for (const auto& [p, e] : fn.factors) {
        // q^w = 1 (mod p), computed without forming q^w
        if (p == 2 ? (q % 2 == 0) : (powmod(q % p, w, p) != 1))
            throw invalid_input("radical_split: rad(n) does not divide q^w - 1");
    }
    RadicalSplit out;
    if (w == 1) {
        out.n1 = n;
        return out;
    }
    for (const auto& [p, e] : fn.factors) {
        bool to_w_slot = (w == 2) ? (p == 2) : (p == w);
        if (to_w_slot) {
            out.w_exponent = e;
        } else if ((q - 1) % p == 0) {
            out.n1 = checked_mul(out.n1, checked_pow(p, e));
        } else {
            out.n2 = checked_mul(out.n2, checked_pow(p, e));
        }
    }
    return out;
}

} // namespace cyclofactor
