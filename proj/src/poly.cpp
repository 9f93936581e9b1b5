#include "cyclofactor/poly.hpp"

namespace cyclofactor {

namespace {

constexpr size_t kKaratsubaCutoff = 64;

void check_same_ctx(const Polynomial& a, const Polynomial& b) {
    if (a.ctx.get() != b.ctx.get()) throw invalid_input("polynomial context mismatch");
}

void normalize(Polynomial& f) {
    while (!f.c.empty() && f.ctx->is_zero(f.c.back())) f.c.pop_back();
}

using Coeffs = std::vector<FieldElement>;

Coeffs school_mul(const FieldContext& K, const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = K.add(out[i + j], K.mul(a[i], b[j]));
    }
    return out;
}

Coeffs coeff_add(const FieldContext& K, const Coeffs& a, const Coeffs& b) {
    Coeffs out(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = K.add(out[i], b[i]);
    return out;
}

Coeffs kara_mul(const FieldContext& K, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kKaratsubaCutoff) return school_mul(K, a, b);
    const size_t h = std::max(a.size(), b.size()) / 2;
    Coeffs a0(a.begin(), a.begin() + std::min(h, a.size()));
    Coeffs a1(a.begin() + std::min(h, a.size()), a.end());
    Coeffs b0(b.begin(), b.begin() + std::min(h, b.size()));
    Coeffs b1(b.begin() + std::min(h, b.size()), b.end());
    Coeffs z0 = kara_mul(K, a0, b0);
    Coeffs z2 = (a1.empty() || b1.empty()) ? Coeffs{} : kara_mul(K, a1, b1);
    Coeffs sa = coeff_add(K, a0, a1);
    Coeffs sb = coeff_add(K, b0, b1);
    Coeffs z1 = kara_mul(K, sa, sb);
    // z1 -= z0 + z2
    for (size_t i = 0; i < z0.size(); ++i) z1[i] = K.sub(z1[i], z0[i]);
    for (size_t i = 0; i < z2.size(); ++i) z1[i] = K.sub(z1[i], z2[i]);
    Coeffs out(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < z0.size(); ++i) out[i] = K.add(out[i], z0[i]);
    for (size_t i = 0; i < z1.size(); ++i)
        if (i + h < out.size()) out[i + h] = K.add(out[i + h], z1[i]);
    for (size_t i = 0; i < z2.size(); ++i)
        if (i + 2 * h < out.size()) out[i + 2 * h] = K.add(out[i + 2 * h], z2[i]);
    return out;
}

} // namespace

Polynomial poly_zero(FieldCtxPtr ctx) { return Polynomial{std::move(ctx), {}}; }

Polynomial poly_one(FieldCtxPtr ctx) {
    Polynomial f{std::move(ctx), {}};
    f.c.push_back(f.ctx->one());
    return f;
}

Polynomial poly_x(FieldCtxPtr ctx) {
    Polynomial f{std::move(ctx), {}};
    f.c.push_back(f.ctx->zero());
    f.c.push_back(f.ctx->one());
    return f;
}

Polynomial poly_from_coeffs(FieldCtxPtr ctx, std::vector<FieldElement> coeffs) {
    Polynomial f{std::move(ctx), std::move(coeffs)};
    normalize(f);
    return f;
}

Polynomial poly_binomial(FieldCtxPtr ctx, u64 t, const FieldElement& eta) {
    if (t == 0) throw invalid_input("binomial degree must be positive");
    Polynomial f{std::move(ctx), {}};
    f.c.assign(t + 1, f.ctx->zero());
    f.c[0] = f.ctx->neg(eta);
    f.c[t] = f.ctx->one();
    return f;
}

Polynomial poly_trinomial(FieldCtxPtr ctx, u64 t, const FieldElement& a, const FieldElement& b) {
    if (t == 0) throw invalid_input("trinomial degree must be positive");
    Polynomial f{std::move(ctx), {}};
    f.c.assign(2 * t + 1, f.ctx->zero());
    f.c[0] = b;
    f.c[t] = f.ctx->neg(a);
    f.c[2 * t] = f.ctx->one();
    return f;
}

Polynomial poly_xn_minus_1(FieldCtxPtr ctx, u64 n) {
    if (n == 0) throw invalid_input("degree must be positive");
    FieldElement one = ctx->one();
    return poly_binomial(std::move(ctx), n, one);
}

int64_t poly_deg(const Polynomial& f) { return static_cast<int64_t>(f.c.size()) - 1; }

bool poly_is_zero(const Polynomial& f) { return f.c.empty(); }

bool poly_is_monic(const Polynomial& f) {
    return !f.c.empty() && f.c.back() == f.ctx->one();
}

bool poly_equal(const Polynomial& a, const Polynomial& b) {
    check_same_ctx(a, b);
    return a.c == b.c;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    check_same_ctx(a, b);
    Polynomial out{a.ctx, coeff_add(*a.ctx, a.c, b.c)};
    normalize(out);
    return out;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    check_same_ctx(a, b);
    Polynomial out{a.ctx, {}};
    out.c.assign(std::max(a.c.size(), b.c.size()), a.ctx->zero());
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = a.ctx->sub(out.c[i], b.c[i]);
    normalize(out);
    return out;
}

Polynomial poly_neg(const Polynomial& a) {
    Polynomial out = a;
    for (auto& e : out.c) e = a.ctx->neg(e);
    return out;
}

Polynomial poly_scale(const Polynomial& a, const FieldElement& s) {
    Polynomial out = a;
    for (auto& e : out.c) e = a.ctx->mul(e, s);
    normalize(out);
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    check_same_ctx(a, b);
    if (a.c.empty() || b.c.empty()) return poly_zero(a.ctx);
    Polynomial out{a.ctx, kara_mul(*a.ctx, a.c, b.c)};
    normalize(out);
    return out;
}

Polynomial poly_make_monic(const Polynomial& a) {
    if (a.c.empty() || a.c.back() == a.ctx->one()) return a;
    return poly_scale(a, a.ctx->inv(a.c.back()));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    check_same_ctx(a, b);
    if (b.c.empty()) throw invalid_input("polynomial division by zero");
    const FieldContext& K = *a.ctx;
    if (a.c.size() < b.c.size()) return {poly_zero(a.ctx), a};
    const size_t db = b.c.size() - 1;
    FieldElement lead_inv = K.inv(b.c.back());
    Polynomial rem = a;
    Polynomial quo{a.ctx, Coeffs(a.c.size() - db, K.zero())};
    for (size_t k = a.c.size(); k >= b.c.size(); --k) {
        size_t top = k - 1;
        if (K.is_zero(rem.c[top])) continue;
        FieldElement qc = K.mul(rem.c[top], lead_inv);
        size_t shift = top - db;
        quo.c[shift] = qc;
        for (size_t j = 0; j <= db; ++j)
            rem.c[shift + j] = K.sub(rem.c[shift + j], K.mul(qc, b.c[j]));
    }
    rem.c.resize(db);
    normalize(quo);
    normalize(rem);
    return {quo, rem};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).second; }

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    check_same_ctx(a, b);
    Polynomial x = a, y = b;
    while (!y.c.empty()) {
        Polynomial r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return poly_make_monic(x);
}

Polynomial poly_pow_mod(const Polynomial& base, u128 e, const Polynomial& m) {
    check_same_ctx(base, m);
    if (poly_deg(m) < 1) throw invalid_input("pow_mod modulus must be nonconstant");
    Polynomial r = poly_one(base.ctx);
    Polynomial b = poly_mod(base, m);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, b), m);
        b = poly_mod(poly_mul(b, b), m);
        e >>= 1;
    }
    return r;
}

Polynomial poly_pow(const Polynomial& base, u64 e) {
    Polynomial r = poly_one(base.ctx);
    Polynomial b = base;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, b);
        b = poly_mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElement poly_eval(const Polynomial& f, const FieldElement& x0) {
    const FieldContext& K = *f.ctx;
    FieldElement acc = K.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = K.add(K.mul(acc, x0), f.c[i]);
    return acc;
}

Polynomial frobenius_coeffs(const Polynomial& f, u128 q) {
    Polynomial out = f;
    for (auto& e : out.c) e = f.ctx->pow(e, q);
    normalize(out);
    return out;
}

CanonicalKey canonical_key(const Polynomial& f) {
    CanonicalKey k;
    k.degree = f.c.empty() ? 0 : f.c.size() - 1;
    k.codes.reserve(f.c.size());
    for (size_t i = f.c.size(); i-- > 0;) k.codes.push_back(f.ctx->encode(f.c[i]));
    return k;
}

std::string poly_to_text(const Polynomial& f) {
    if (f.c.empty()) return "0";
    const FieldContext& K = *f.ctx;
    std::string s;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (K.is_zero(f.c[i])) continue;
        if (!s.empty()) s += " + ";
        bool coeff_is_one = f.c[i] == K.one();
        if (i == 0) {
            s += K.to_string(f.c[i]);
        } else {
            if (!coeff_is_one) s += K.to_string(f.c[i]) + "*";
            s += "x";
            if (i > 1) s += "^" + dec_string(i);
        }
    }
    return s;
}

} // namespace cyclofactor
