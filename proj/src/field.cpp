#include "cyclofactor/field.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

namespace cyclofactor {

namespace {

constexpr u32 kMaxDegree = 64;

// --- dense polynomials over F_p, constant-first, used for the modulus search ---

using FpPoly = std::vector<u64>;

void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
    // f monic of degree d; operands have degree < d
    const size_t d = f.size() - 1;
    std::vector<u128> buf(2 * d, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) buf[i + j] += static_cast<u128>(a[i]) * b[j];
    }
    for (size_t k = 2 * d - 1; k >= d && k < buf.size(); --k) {
        u64 c = static_cast<u64>(buf[k] % p);
        if (c == 0) continue;
        for (size_t j = 0; j < d; ++j) buf[k - d + j] += static_cast<u128>(c) * (p - f[j] % p);
    }
    FpPoly out(d, 0);
    for (size_t j = 0; j < d; ++j) out[j] = static_cast<u64>(buf[j] % p);
    fp_normalize(out);
    return out;
}

FpPoly fp_powmod(FpPoly base, u128 e, const FpPoly& f, u64 p) {
    FpPoly r{1};
    while (e > 0) {
        if (e & 1) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        u64 av = i < a.size() ? a[i] : 0;
        u64 bv = i < b.size() ? b[i] : 0;
        out[i] = (av + p - bv) % p;
    }
    fp_normalize(out);
    return out;
}

u64 fp_inv_scalar(u64 a, u64 p) {
    // extended Euclid on (a, p)
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long qq = r / newr;
        long long tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

FpPoly fp_make_monic(FpPoly a, u64 p) {
    fp_normalize(a);
    if (a.empty() || a.back() == 1) return a;
    u64 s = fp_inv_scalar(a.back(), p);
    for (u64& c : a) c = static_cast<u64>((static_cast<u128>(c) * s) % p);
    return a;
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, u64 p) {
    // f monic
    const size_t d = f.size() - 1;
    fp_normalize(a);
    while (a.size() > d) {
        u64 c = a.back();
        size_t k = a.size() - 1;
        a.pop_back();
        if (c == 0) {
            fp_normalize(a);
            continue;
        }
        for (size_t j = 0; j < d; ++j) {
            u128 v = a[k - d + j] + static_cast<u128>(c) * (p - f[j] % p);
            a[k - d + j] = static_cast<u64>(v % p);
        }
        fp_normalize(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    a = fp_make_monic(std::move(a), p);
    b = fp_make_monic(std::move(b), p);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = b;
        b = fp_make_monic(std::move(r), p);
    }
    return a;
}

// Rabin test: x^(p^d) == x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for primes r | d.
bool fp_is_irreducible(const FpPoly& f, u64 p) {
    const size_t d = f.size() - 1;
    if (d == 1) return true;
    if (f[0] == 0) return false;
    std::vector<size_t> checkpoints;
    for (const auto& [r, e] : factorize(d).factors) checkpoints.push_back(d / static_cast<size_t>(r));
    FpPoly h{0, 1}; // x
    const FpPoly x = h;
    for (size_t k = 1; k <= d; ++k) {
        h = fp_powmod(h, p, f, p);
        bool is_checkpoint = false;
        for (size_t cp : checkpoints)
            if (cp == k) is_checkpoint = true;
        if (is_checkpoint && k < d) {
            FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
            if (g.size() != 1) return false;
        }
    }
    return h == x;
}

struct CtxCacheKey {
    u64 p;
    u32 d;
    bool operator<(const CtxCacheKey& o) const { return p < o.p || (p == o.p && d < o.d); }
};

std::mutex g_ctx_mutex;
std::map<CtxCacheKey, FieldCtxPtr> g_ctx_cache;

} // namespace

FieldContext::FieldContext(u64 p, std::vector<u64> modulus, bool generator_check)
    : p_(p), mod_(std::move(modulus)), generator_check_(generator_check) {
    if (!is_prime_u64(p_)) throw invalid_input("field characteristic must be prime");
    if (mod_.size() < 2 || mod_.back() != 1)
        throw invalid_input("field modulus must be monic of degree >= 1");
    deg_ = static_cast<u32>(mod_.size() - 1);
    if (deg_ > kMaxDegree) throw bound_exceeded("field degree exceeds supported maximum");
    for (u64 c : mod_)
        if (c >= p_) throw invalid_input("field modulus coefficient out of range");
    order_ = checked_pow(p_, deg_);
    group_factors_ = factorize(order_ - 1);
    if (generator_check_) {
        // opt-in validation: modulus irreducible and its root of full order p^d - 1
        if (!fp_is_irreducible(mod_, p_)) throw invalid_input("field modulus is not irreducible");
        if (element_order(gen()) != group_order())
            throw invalid_input("field modulus root does not generate the multiplicative group");
    }
}

FieldElement FieldContext::zero() const { return FieldElement{std::vector<u64>(deg_, 0)}; }

FieldElement FieldContext::one() const { return from_scalar(1); }

FieldElement FieldContext::from_scalar(u64 v) const {
    FieldElement e = zero();
    e.c[0] = v % p_;
    return e;
}

FieldElement FieldContext::gen() const {
    FieldElement e = zero();
    if (deg_ == 1) {
        // residue of x is the root of the linear modulus: -c0
        e.c[0] = (p_ - mod_[0] % p_) % p_;
    } else {
        e.c[1] = 1;
    }
    return e;
}

bool FieldContext::is_zero(const FieldElement& a) const {
    for (u64 v : a.c)
        if (v != 0) return false;
    return true;
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (u32 i = 0; i < deg_; ++i) out.c[i] = (out.c[i] + b.c[i]) % p_;
    return out;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (u32 i = 0; i < deg_; ++i) out.c[i] = (out.c[i] + p_ - b.c[i]) % p_;
    return out;
}

FieldElement FieldContext::neg(const FieldElement& a) const {
    FieldElement out = a;
    for (u32 i = 0; i < deg_; ++i) out.c[i] = (p_ - a.c[i]) % p_;
    return out;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    const u32 d = deg_;
    if (d == 1) {
        FieldElement out = zero();
        out.c[0] = static_cast<u64>((static_cast<u128>(a.c[0]) * b.c[0]) % p_);
        return out;
    }
    u128 buf[2 * kMaxDegree] = {};
    for (u32 i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        const u128 ai = a.c[i];
        for (u32 j = 0; j < d; ++j) buf[i + j] += ai * b.c[j];
    }
    for (u32 k = 2 * d - 2; k >= d; --k) {
        u64 c = static_cast<u64>(buf[k] % p_);
        if (c == 0) continue;
        const u128 cc = c;
        for (u32 j = 0; j < d; ++j) buf[k - d + j] += cc * (p_ - mod_[j]);
    }
    FieldElement out = zero();
    for (u32 j = 0; j < d; ++j) out.c[j] = static_cast<u64>(buf[j] % p_);
    return out;
}

FieldElement FieldContext::pow(const FieldElement& a, u128 e) const {
    if (is_zero(a)) {
        if (e == 0) return one();
        return zero();
    }
    e %= group_order();
    FieldElement r = one();
    FieldElement b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    if (is_zero(a)) throw invalid_input("field inverse of zero");
    return pow(a, group_order() - 1);
}

u128 FieldContext::element_order(const FieldElement& a) const {
    if (is_zero(a)) throw invalid_input("element_order of zero");
    u128 e = group_order();
    for (const auto& [r, exp] : group_factors_.factors) {
        for (u32 i = 0; i < exp; ++i) {
            if (e % r == 0 && pow(a, e / r) == one())
                e /= r;
            else
                break;
        }
    }
    return e;
}

u64 FieldContext::encode(const FieldElement& a) const {
    u128 code = 0;
    for (u32 i = deg_; i-- > 0;) code = code * p_ + a.c[i];
    return static_cast<u64>(code);
}

FieldElement FieldContext::decode(u64 code) const {
    FieldElement e = zero();
    for (u32 i = 0; i < deg_; ++i) {
        e.c[i] = code % p_;
        code /= p_;
    }
    return e;
}

std::string FieldContext::to_string(const FieldElement& a) const {
    if (deg_ == 1) return dec_string(a.c[0]);
    std::string s = "(";
    for (u32 i = 0; i < deg_; ++i) {
        if (i) s += ",";
        s += dec_string(a.c[i]);
    }
    s += ")";
    return s;
}

std::string FieldContext::describe() const {
    std::string s = "GF(" + dec_string(p_);
    if (deg_ > 1) s += "^" + dec_string(deg_);
    s += "), modulus = ";
    bool first = true;
    for (u32 i = 0; i <= deg_; ++i) {
        u64 c = mod_[i];
        if (c == 0 && i < deg_) continue;
        if (!first) s += " + ";
        first = false;
        if (i == 0) {
            s += dec_string(c);
        } else {
            if (c != 1) s += dec_string(c) + "*";
            s += "x";
            if (i > 1) s += "^" + dec_string(i);
        }
    }
    return s;
}

FieldCtxPtr find_primitive_polynomial(u64 p, u32 d, u128 bound) {
    if (!is_prime_u64(p) || d == 0) throw invalid_input("find_primitive_polynomial: bad arguments");
    u128 size;
    try {
        size = checked_pow(p, d);
    } catch (const overflow_error&) {
        throw bound_exceeded("field size exceeds 128 bits");
    }
    if (size > bound) throw bound_exceeded("field size " + dec_string(size) + " exceeds bound " + dec_string(bound));
    if (d > kMaxDegree || size > (u128(1) << 63))
        throw bound_exceeded("field size exceeds supported maximum 2^63");

    {
        std::lock_guard<std::mutex> lock(g_ctx_mutex);
        auto it = g_ctx_cache.find({p, d});
        if (it != g_ctx_cache.end()) return it->second;
    }

    FactoredNat group = factorize(size - 1);
    FieldCtxPtr result;
    for (u128 k = 0; k < size; ++k) {
        FpPoly f(d + 1, 0);
        u128 kk = k;
        for (u32 i = 0; i < d; ++i) {
            f[i] = static_cast<u64>(kk % p);
            kk /= p;
        }
        f[d] = 1;
        if (f[0] == 0) continue; // divisible by x, or root 0 in the linear case
        if (!fp_is_irreducible(f, p)) continue;
        // primitivity: the residue of x must have order p^d - 1
        bool primitive = true;
        FpPoly x{0, 1};
        if (d == 1) x = FpPoly{(p - f[0] % p) % p};
        for (const auto& [r, e] : group.factors) {
            FpPoly t = fp_powmod(x, (size - 1) / r, f, p);
            if (t == FpPoly{1}) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        result = std::make_shared<FieldContext>(p, f, true);
        break;
    }
    if (!result) throw invalid_input("no primitive polynomial found"); // unreachable
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    g_ctx_cache.emplace(CtxCacheKey{p, d}, result);
    return result;
}

} // namespace cyclofactor
