#include "cyclofactor/nat.hpp"

#include <algorithm>

namespace cyclofactor {

std::string dec_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_u128(const std::string& s) {
    if (s.empty()) throw invalid_input("empty integer literal");
    u128 v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw invalid_input("bad integer literal: " + s);
        u128 d = static_cast<u128>(ch - '0');
        v = checked_add(checked_mul(v, 10), d);
    }
    return v;
}

u128 checked_add(u128 a, u128 b) {
    u128 r = a + b;
    if (r < a) throw overflow_error("integer overflow in addition");
    return r;
}

u128 checked_mul(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    u128 r = a * b;
    if (r / a != b) throw overflow_error("integer overflow in multiplication");
    return r;
}

u128 checked_pow(u128 base, u64 exp) {
    u128 r = 1;
    u128 b = base;
    while (exp > 0) {
        if (exp & 1) r = checked_mul(r, b);
        exp >>= 1;
        if (exp > 0) b = checked_mul(b, b);
    }
    return r;
}

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 powmod(u128 base, u128 exp, u128 m) {
    if (m == 0) throw invalid_input("powmod: zero modulus");
    if (m >> 64) throw bound_exceeded("powmod: modulus exceeds 64 bits");
    u128 b = base % m;
    u128 r = 1 % m;
    while (exp > 0) {
        if (exp & 1) r = (r * b) % m;
        b = (b * b) % m;
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u128 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace cyclofactor
