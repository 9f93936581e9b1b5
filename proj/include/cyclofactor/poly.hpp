#pragma once

#include "cyclofactor/field.hpp"

#include <utility>

namespace cyclofactor {

// Dense univariate polynomial over a shared FieldContext.
// Coefficients constant-first, no trailing zeros; empty vector is the zero polynomial.
struct Polynomial {
    FieldCtxPtr ctx;
    std::vector<FieldElement> c;
};

Polynomial poly_zero(FieldCtxPtr ctx);
Polynomial poly_one(FieldCtxPtr ctx);
Polynomial poly_x(FieldCtxPtr ctx);
Polynomial poly_from_coeffs(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);
Polynomial poly_binomial(FieldCtxPtr ctx, u64 t, const FieldElement& eta);  // x^t - eta
// x^{2t} - a*x^t + b
Polynomial poly_trinomial(FieldCtxPtr ctx, u64 t, const FieldElement& a, const FieldElement& b);
Polynomial poly_xn_minus_1(FieldCtxPtr ctx, u64 n);

int64_t poly_deg(const Polynomial& f); // -1 for the zero polynomial
bool poly_is_zero(const Polynomial& f);
bool poly_is_monic(const Polynomial& f);
bool poly_equal(const Polynomial& a, const Polynomial& b);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_scale(const Polynomial& a, const FieldElement& s);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_make_monic(const Polynomial& a);

// Quotient and remainder; b must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b); // monic unless both zero

Polynomial poly_pow_mod(const Polynomial& base, u128 e, const Polynomial& m);
Polynomial poly_pow(const Polynomial& base, u64 e);

FieldElement poly_eval(const Polynomial& f, const FieldElement& x0);

// Coefficient-wise a -> a^q.
Polynomial frobenius_coeffs(const Polynomial& f, u128 q);

// Total order on normalized polynomials: degree ascending, then encoded
// coefficients lexicographic from leading to constant.
struct CanonicalKey {
    u64 degree = 0;
    std::vector<u64> codes;

    bool operator==(const CanonicalKey& o) const { return degree == o.degree && codes == o.codes; }
    bool operator<(const CanonicalKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        return codes < o.codes;
    }
};

CanonicalKey canonical_key(const Polynomial& f);

// Decreasing degree, " + " separated; coefficient 1 omitted on nonconstant terms.
// Prime field: "x^3 + x + 1". Extension field: "x^2 + (2,1)*x + (0,1)".
std::string poly_to_text(const Polynomial& f);

} // namespace cyclofactor
