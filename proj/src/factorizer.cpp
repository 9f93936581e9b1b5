#include "cyclofactor/factorizer.hpp"
#include "cyclofactor/oracle.hpp"

#include <algorithm>

namespace cyclofactor {

const char* source_name(Source s) {
    switch (s) {
    case Source::Binomial: return "Binomial";
    case Source::Trinomial: return "Trinomial";
    case Source::OrbitBinomialProduct: return "OrbitBinomialProduct";
    case Source::OrbitTrinomialProduct: return "OrbitTrinomialProduct";
    case Source::CharPower: return "CharPower";
    }
    return "?";
}

void finalize_factorization(Factorization& fz) {
    std::sort(fz.factors.begin(), fz.factors.end(),
              [](const LabeledFactor& a, const LabeledFactor& b) {
                  return canonical_key(a.poly) < canonical_key(b.poly);
              });
    fz.counts_by_degree.clear();
    for (const LabeledFactor& lf : fz.factors) ++fz.counts_by_degree[lf.degree];
    fz.total = fz.factors.size();
}

Polynomial frobenius_orbit_product(const Polynomial& f_big, const Tower& tower, u64 orbit_len) {
    if (orbit_len == 0) throw invalid_input("orbit length must be positive");
    Polynomial conj = f_big;
    Polynomial acc = f_big;
    for (u64 k = 1; k < orbit_len; ++k) {
        conj = frobenius_coeffs(conj, tower.q);
        acc = poly_mul(acc, conj);
    }
    std::vector<FieldElement> coeffs;
    coeffs.reserve(acc.c.size());
    for (const FieldElement& e : acc.c) coeffs.push_back(tower.fq_map.to_fq(e));
    return poly_from_coeffs(tower.fq_map.fq_ctx(), std::move(coeffs));
}

namespace {

Polynomial binomial_over_fq(const Tower& T, u64 t, const FieldElement& eta_big) {
    FieldElement eta = T.fq_map.to_fq(eta_big);
    return poly_binomial(T.fq_map.fq_ctx(), t, eta);
}

// x^{2t} - (alpha^e + alpha^{qe}) x^t + theta^e with e = u*l2
Polynomial trinomial_over_fq(const Tower& T, u64 t, u128 e) {
    const FieldCtxPtr& B = T.big;
    FieldElement ae = B->pow(T.alpha, e);
    FieldElement a_big = B->add(ae, B->pow(ae, T.q));
    FieldElement b_big = B->pow(T.theta, e);
    FieldElement a = T.fq_map.to_fq(a_big);
    FieldElement b = T.fq_map.to_fq(b_big);
    return poly_trinomial(T.fq_map.fq_ctx(), t, a, b);
}

void emit(Factorization& fz, Polynomial poly, u64 degree, Source src) {
    LabeledFactor lf;
    lf.poly = std::move(poly);
    lf.degree = degree;
    lf.source = src;
    fz.factors.push_back(std::move(lf));
}

Factorization start(const CaseParams& P) {
    Factorization fz;
    fz.n = P.n;
    fz.q = P.q;
    fz.info = CaseInfo{P.tag, P.w};
    return fz;
}

std::vector<u64> small_divisors(u64 m) {
    std::vector<u64> out;
    for (u128 d : divisors(factorize(m))) out.push_back(static_cast<u64>(d));
    return out;
}

bool divides(u64 a, u64 b) { return a != 0 && b % a == 0; }

} // namespace

Factorization factor_base_simple(const CaseParams& P, const Tower& T) {
    Factorization fz = start(P);
    for (u64 t : small_divisors(P.m1)) {
        for (u64 u = 1; u <= P.g1; ++u) {
            if (gcd_u128(u, t) != 1) continue;
            FieldElement eta = T.big->pow(T.theta, u * P.l1);
            emit(fz, binomial_over_fq(T, t, eta), t, Source::Binomial);
        }
    }
    finalize_factorization(fz);
    return fz;
}

Factorization factor_base_trinomial(const CaseParams& P, const Tower& T) {
    Factorization fz = start(P);
    for (u64 t : small_divisors(P.m2)) {
        if (t % 2 == 1) {
            for (u64 v = 1; v <= P.g1; ++v) {
                if (gcd_u128(v, t) != 1) continue;
                FieldElement eta = T.big->pow(T.theta, v * P.l1);
                emit(fz, binomial_over_fq(T, t, eta), t, Source::Binomial);
            }
        }
        for (u64 u : enum_R_t(t, P))
            emit(fz, trinomial_over_fq(T, t, u * P.l2), 2 * t, Source::Trinomial);
    }
    finalize_factorization(fz);
    return fz;
}

Factorization factor_w_odd_simple(const CaseParams& P, const Tower& T) {
    Factorization fz = start(P);
    for (u64 t : small_divisors(P.mw1)) {
        for (u64 u = 1; u <= P.g1; ++u) {
            if (gcd_u128(u, t) != 1) continue;
            FieldElement eta = T.big->pow(T.theta, u * P.l1);
            emit(fz, binomial_over_fq(T, t, eta), t, Source::Binomial);
        }
    }
    bool divergence_noted = false;
    for (u64 t : small_divisors(P.mw)) {
        std::vector<u64> S = enum_S_t(t, P);
        if (!divergence_noted && S != enum_S_t(t, P, true)) {
            fz.notes.push_back("orbit index condition: direct non-divisibility form used; "
                               "the gcd form differs here");
            divergence_noted = true;
        }
        for (u64 u : S) {
            Polynomial f = poly_binomial(T.big, t, T.big->pow(T.delta, u * P.lw));
            emit(fz, frobenius_orbit_product(f, T, P.w), P.w * t, Source::OrbitBinomialProduct);
        }
    }
    finalize_factorization(fz);
    return fz;
}

Factorization factor_w_odd_8n(const CaseParams& P, const Tower& T) {
    Factorization fz = start(P);
    // binomials: odd t dividing m_{w,1}
    for (u64 t : small_divisors(P.mw1)) {
        if (t % 2 == 0) continue;
        for (u64 v = 1; v <= P.g1; ++v) {
            if (gcd_u128(v, t) != 1) continue;
            FieldElement eta = T.big->pow(T.theta, v * P.l1);
            emit(fz, binomial_over_fq(T, t, eta), t, Source::Binomial);
        }
    }
    bool divergence_noted = false;
    for (u64 t : small_divisors(P.m2w)) {
        // w-orbit binomial products: odd t
        if (t % 2 == 1) {
            std::vector<u64> S = enum_S_t(t, P);
            if (!divergence_noted && S != enum_S_t(t, P, true)) {
                fz.notes.push_back("orbit index condition: direct non-divisibility form used; "
                                   "the gcd form differs here");
                divergence_noted = true;
            }
            for (u64 u : S) {
                Polynomial f = poly_binomial(T.big, t, T.big->pow(T.delta, u * P.lw));
                emit(fz, frobenius_orbit_product(f, T, P.w), P.w * t, Source::OrbitBinomialProduct);
            }
        }
        // trinomials: t dividing both m_{2w} and m_{w,1}
        if (divides(t, P.mw1)) {
            for (u64 u : enum_R1_t(t, P))
                emit(fz, trinomial_over_fq(T, t, u * P.l2), 2 * t, Source::Trinomial);
        }
        // 2w-orbit products
        for (u64 u : enum_R2_t(t, P)) {
            Polynomial f = poly_binomial(T.big, t, T.big->pow(T.pi, u * P.l2w));
            emit(fz, frobenius_orbit_product(f, T, 2 * P.w), 2 * P.w * t, Source::OrbitTrinomialProduct);
        }
    }
    fz.notes.push_back("trinomial middle coefficient uses the conjugate exponent pair");
    finalize_factorization(fz);
    return fz;
}

Factorization factor_w_two(const CaseParams& P, const Tower& T) {
    Factorization fz = start(P);
    for (u64 t : small_divisors(P.mw1)) {
        for (u64 u = 1; u <= P.g1; ++u) {
            if (gcd_u128(u, t) != 1) continue;
            FieldElement eta = T.big->pow(T.theta, u * P.l1);
            emit(fz, binomial_over_fq(T, t, eta), t, Source::Binomial);
        }
    }
    for (u64 t : small_divisors(P.m2)) {
        for (u64 u : enum_R_t_w2(t, P))
            emit(fz, trinomial_over_fq(T, t, u * P.l2), 2 * t, Source::Trinomial);
    }
    finalize_factorization(fz);
    return fz;
}

namespace {

struct Stripped {
    u64 n0 = 1;
    u64 char_power = 1;
};

Stripped strip_char(u64 n, u64 p) {
    Stripped s;
    s.n0 = n;
    while (s.n0 % p == 0) {
        s.n0 /= p;
        s.char_power *= p;
    }
    return s;
}

void apply_char_power(Factorization& fz, u64 n, u64 char_power) {
    fz.n = n;
    if (char_power > 1) {
        for (LabeledFactor& lf : fz.factors) {
            lf.multiplicity = char_power;
            lf.source = Source::CharPower;
        }
        fz.notes.push_back("characteristic power stripped: exponent " + dec_string(char_power));
    }
}

} // namespace

Factorization factor(u64 n, u128 q, u128 bound) {
    if (n == 0) throw invalid_input("n must be positive");
    PrimePower pp = prime_power_split(q);
    Stripped st = strip_char(n, pp.p);
    CaseInfo info = classify_case(st.n0, q);
    if (info.tag == CaseTag::Unsupported) {
        Factorization fz = oracle_factor(n, q, bound);
        fz.oracle_fallback = true;
        fz.notes.push_back("orbit order w = " + dec_string(info.w) +
                           " is composite; coset oracle used instead of a closed form");
        return fz;
    }
    CaseParams P = derive_params(st.n0, q, info);
    const u64 tower_w = (info.tag == CaseTag::WOddSimple || info.tag == CaseTag::WOdd8n) ? P.w : 1;
    TowerPtr T = build_tower(pp.p, pp.s, tower_w, bound);
    Factorization fz;
    switch (info.tag) {
    case CaseTag::BaseSimple: fz = factor_base_simple(P, *T); break;
    case CaseTag::BaseTrinomial: fz = factor_base_trinomial(P, *T); break;
    case CaseTag::WOddSimple: fz = factor_w_odd_simple(P, *T); break;
    case CaseTag::WOdd8n: fz = factor_w_odd_8n(P, *T); break;
    case CaseTag::WTwo: fz = factor_w_two(P, *T); break;
    case CaseTag::Unsupported: break; // handled above
    }
    apply_char_power(fz, n, st.char_power);
    finalize_factorization(fz);
    return fz;
}

} // namespace cyclofactor
