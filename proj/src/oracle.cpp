#include "cyclofactor/oracle.hpp"

#ifdef CYCLOFACTOR_HAVE_OPENMP
#include <omp.h>
#endif

namespace cyclofactor {

CosetPartition cyclotomic_cosets(u64 n, u128 q) {
    if (n == 0) throw invalid_input("n must be positive");
    if (gcd_u128(n, q) != 1) throw invalid_input("cyclotomic cosets need gcd(n, q) = 1");
    CosetPartition part{n, q, {}};
    std::vector<bool> seen(n, false);
    const u64 qm = static_cast<u64>(q % n);
    for (u64 j = 0; j < n; ++j) {
        if (seen[j]) continue;
        std::vector<u64> coset;
        u64 cur = j;
        do {
            seen[cur] = true;
            coset.push_back(cur);
            cur = static_cast<u64>((static_cast<u128>(cur) * qm) % n);
        } while (cur != j);
        std::sort(coset.begin(), coset.end());
        part.cosets.push_back(std::move(coset));
    }
    return part;
}

bool is_irreducible(const Polynomial& f) {
    const int64_t d = poly_deg(f);
    if (d < 1) return false;
    if (!poly_is_monic(f))
        return is_irreducible(poly_make_monic(f));
    if (d == 1) return true;
    if (f.ctx->is_zero(f.c[0])) return false; // divisible by x
    const u128 q = f.ctx->order();
    std::vector<u64> checkpoints;
    for (const auto& [r, e] : factorize(static_cast<u128>(d)).factors)
        checkpoints.push_back(static_cast<u64>(d / static_cast<int64_t>(r)));
    Polynomial h = poly_x(f.ctx);
    const Polynomial x = h;
    for (int64_t k = 1; k <= d; ++k) {
        h = poly_pow_mod(h, q, f);
        bool cp = false;
        for (u64 c : checkpoints)
            if (static_cast<int64_t>(c) == k) cp = true;
        if (cp && k < d) {
            Polynomial g = poly_gcd(f, poly_sub(h, x));
            if (poly_deg(g) != 0) return false;
        }
    }
    return poly_equal(h, x);
}

namespace {

struct Stripped {
    u64 n0 = 1;
    u64 char_power = 1; // p^e with n = n0 * p^e
};

Stripped strip_characteristic(u64 n, u64 p) {
    Stripped s;
    s.n0 = n;
    while (s.n0 % p == 0) {
        s.n0 /= p;
        s.char_power *= p;
    }
    return s;
}

LabeledFactor coset_factor(const Extension& ext, const FieldElement& beta,
                           const std::vector<u64>& coset) {
    const FieldCtxPtr& B = ext.big;
    Polynomial prod = poly_one(B);
    for (u64 i : coset) {
        FieldElement root = B->pow(beta, i);
        prod = poly_mul(prod, poly_binomial(B, 1, root));
    }
    // convert coefficients to canonical F_q coordinates
    std::vector<FieldElement> coeffs;
    coeffs.reserve(prod.c.size());
    for (const FieldElement& e : prod.c) coeffs.push_back(ext.fq_map.to_fq(e));
    Polynomial over_fq = poly_from_coeffs(ext.fq_map.fq_ctx(), std::move(coeffs));
    LabeledFactor lf;
    lf.degree = coset.size();
    lf.poly = std::move(over_fq);
    lf.source = coset.size() == 1 ? Source::Binomial : Source::OrbitBinomialProduct;
    return lf;
}

} // namespace

Factorization oracle_factor(u64 n, u128 q, u128 bound, bool parallel) {
    if (n == 0) throw invalid_input("n must be positive");
    PrimePower pp = prime_power_split(q);
    Stripped st = strip_characteristic(n, pp.p);

    Factorization fz;
    fz.n = n;
    fz.q = q;
    fz.info = classify_case(st.n0, q);

    const u64 m = st.n0 == 1 ? 1 : static_cast<u64>(mult_order(q, st.n0));
    ExtensionPtr ext = build_extension(pp.p, pp.s, static_cast<u32>(m), bound);
    const u128 group = ext->big->group_order();
    FieldElement beta = ext->big->pow(ext->gamma, group / st.n0);

    CosetPartition part = cyclotomic_cosets(st.n0, q);
    const size_t count = part.cosets.size();
    fz.factors.resize(count);
    if (parallel) {
#ifdef CYCLOFACTOR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (size_t i = 0; i < count; ++i)
            fz.factors[i] = coset_factor(*ext, beta, part.cosets[i]);
    } else {
        for (size_t i = 0; i < count; ++i)
            fz.factors[i] = coset_factor(*ext, beta, part.cosets[i]);
    }
    if (st.char_power > 1) {
        for (LabeledFactor& lf : fz.factors) {
            lf.multiplicity = st.char_power;
            lf.source = Source::CharPower;
        }
        fz.notes.push_back("characteristic power stripped: exponent " + dec_string(st.char_power));
    }
    finalize_factorization(fz);
    return fz;
}

VerificationReport verify_factorization(const Factorization& fz) {
    VerificationReport rep;
    if (fz.factors.empty()) {
        rep.notes.push_back("empty factor list");
        return rep;
    }
    const FieldCtxPtr& ctx = fz.factors.front().poly.ctx;

    u128 degree_sum = 0;
    bool degrees_ok = true;
    for (const LabeledFactor& lf : fz.factors) {
        if (static_cast<int64_t>(lf.degree) != poly_deg(lf.poly)) degrees_ok = false;
        degree_sum += static_cast<u128>(lf.degree) * lf.multiplicity;
    }
    rep.degrees_ok = degrees_ok && degree_sum == fz.n;
    if (!rep.degrees_ok) rep.notes.push_back("degree bookkeeping mismatch");

    Polynomial prod = poly_one(ctx);
    for (const LabeledFactor& lf : fz.factors)
        prod = poly_mul(prod, poly_pow(lf.poly, lf.multiplicity));
    rep.product_ok = poly_equal(prod, poly_xn_minus_1(ctx, fz.n));
    if (!rep.product_ok) rep.notes.push_back("product of factors is not x^n - 1");

    rep.all_irreducible = true;
    for (const LabeledFactor& lf : fz.factors) {
        if (!poly_is_monic(lf.poly) || !is_irreducible(lf.poly)) {
            rep.all_irreducible = false;
            rep.notes.push_back("factor not monic irreducible: " + poly_to_text(lf.poly));
            break;
        }
    }

    PrimePower pp = prime_power_split(fz.q);
    Stripped st = strip_characteristic(fz.n, pp.p);
    const size_t cosets = cyclotomic_cosets(st.n0, fz.q).cosets.size();
    rep.count_match = fz.total == fz.factors.size() && fz.factors.size() == cosets;
    if (!rep.count_match) rep.notes.push_back("factor count does not match coset count");
    return rep;
}

} // namespace cyclofactor
