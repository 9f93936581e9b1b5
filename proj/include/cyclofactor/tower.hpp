#pragma once

#include "cyclofactor/poly.hpp"

namespace cyclofactor {

// Linear-algebra bridge between a big field F_{p^D} and the canonical F_q
// presentation: coordinates with respect to the basis {1, theta, ..., theta^{s-1}},
// where theta is a root of the canonical degree-s primitive polynomial.
class SubfieldMap {
public:
    SubfieldMap(FieldCtxPtr big, FieldCtxPtr fq, FieldElement theta);

    // Element of the fq context; throws invalid_input if e is not fixed by the
    // q-power map (equivalently, lies outside the F_q subfield).
    FieldElement to_fq(const FieldElement& e) const;
    // Inverse direction: F_q coordinates combined back into the big field.
    FieldElement lift(const FieldElement& a) const;

    const FieldCtxPtr& big_ctx() const { return big_; }
    const FieldCtxPtr& fq_ctx() const { return fq_; }
    const FieldElement& theta() const { return theta_; }

private:
    FieldCtxPtr big_;
    FieldCtxPtr fq_;
    FieldElement theta_;
    std::vector<std::vector<u64>> basis_; // s columns of length D
    std::vector<std::vector<u64>> left_;  // s rows of length D, left * basis = identity
};

// F_q in F_{q^w} in F_{q^{2w}}, realized inside the single big field of degree
// 2ws over F_p, with the distinguished generator chain
//   delta = pi^{q^w+1}, alpha = pi^{(q^{2w}-1)/(q^2-1)}, theta = pi^{(q^{2w}-1)/(q-1)}.
// pi is twisted so that theta is a root of the canonical F_q modulus; this keeps
// coordinate output identical across independently built fields.
struct Tower {
    u64 p = 0;
    u32 s = 0;
    u64 w = 0;
    u128 q = 0;
    FieldCtxPtr big;
    FieldElement pi, delta, alpha, theta;
    SubfieldMap fq_map;
};

using TowerPtr = std::shared_ptr<const Tower>;

TowerPtr build_tower(u64 p, u32 s, u64 w, u128 bound);

// F_{q^ext} over F_p with a canonical F_q coordinate map; the oracle's field.
struct Extension {
    u64 p = 0;
    u32 s = 0;
    u32 ext = 0;
    u128 q = 0;
    FieldCtxPtr big;
    FieldElement gamma; // multiplicative generator
    SubfieldMap fq_map;
};

using ExtensionPtr = std::shared_ptr<const Extension>;

ExtensionPtr build_extension(u64 p, u32 s, u32 ext, u128 bound);

// Deterministic root of the canonical degree-s primitive polynomial for
// F_{p^s} inside a big context containing it as a subfield.
FieldElement subfield_root(const FieldCtxPtr& big, const FieldCtxPtr& fq);

} // namespace cyclofactor
