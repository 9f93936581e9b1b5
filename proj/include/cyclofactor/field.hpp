#pragma once

#include "cyclofactor/intarith.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cyclofactor {

// Element of F_{p^d}: coordinate vector over F_p, length d, entries in [0, p).
struct FieldElement {
    std::vector<u64> c;

    bool operator==(const FieldElement& o) const { return c == o.c; }
};

// F_{p^d} presented as F_p[x]/(modulus); modulus is monic, irreducible,
// stored constant-first with the leading 1 included.
class FieldContext {
public:
    FieldContext(u64 p, std::vector<u64> modulus, bool generator_check);

    u64 characteristic() const { return p_; }
    u32 degree() const { return deg_; }
    u128 order() const { return order_; }
    u128 group_order() const { return order_ - 1; }
    const std::vector<u64>& modulus() const { return mod_; }
    bool generator_check() const { return generator_check_; }
    const FactoredNat& group_order_factors() const { return group_factors_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_scalar(u64 v) const;
    FieldElement gen() const; // residue class of x

    bool is_zero(const FieldElement& a) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    // Exponent reduced mod the group order for nonzero bases.
    FieldElement pow(const FieldElement& a, u128 e) const;
    u128 element_order(const FieldElement& a) const;

    // Integer code sum(c_i p^i); injective on the field, < p^d <= bound.
    u64 encode(const FieldElement& a) const;
    FieldElement decode(u64 code) const;

    std::string to_string(const FieldElement& a) const; // "(2,1)" for d > 1, "2" for d = 1
    std::string describe() const; // "GF(p^d), modulus = c0 + c1*x + ... + x^d"

private:
    u64 p_;
    u32 deg_;
    u128 order_;
    std::vector<u64> mod_;
    bool generator_check_;
    FactoredNat group_factors_;
};

using FieldCtxPtr = std::shared_ptr<const FieldContext>;

// Lexicographically first primitive polynomial of degree d over F_p, ordered by
// the integer encoding of the coefficient vector (constant least significant).
// Throws bound_exceeded if p^d > bound. Results are cached per (p, d).
FieldCtxPtr find_primitive_polynomial(u64 p, u32 d, u128 bound);

} // namespace cyclofactor
