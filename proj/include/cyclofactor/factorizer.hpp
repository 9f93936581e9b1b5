#pragma once

#include "cyclofactor/cases.hpp"
#include "cyclofactor/index_sets.hpp"
#include "cyclofactor/poly.hpp"
#include "cyclofactor/tower.hpp"

#include <map>

namespace cyclofactor {

enum class Source {
    Binomial,
    Trinomial,
    OrbitBinomialProduct,
    OrbitTrinomialProduct,
    CharPower,
};

const char* source_name(Source s);

struct LabeledFactor {
    Polynomial poly; // monic, coefficients in the canonical F_q context
    u64 degree = 0;
    Source source = Source::Binomial;
    u64 multiplicity = 1;
};

struct Factorization {
    u64 n = 0;   // the full exponent, including any characteristic power
    u128 q = 0;
    CaseInfo info;                      // classification of the coprime part
    std::vector<LabeledFactor> factors; // sorted by CanonicalKey
    std::map<u64, u64> counts_by_degree;
    u64 total = 0; // number of distinct irreducible factors
    std::vector<std::string> notes;
    bool oracle_fallback = false;
};

// Sorts by CanonicalKey and rebuilds counts_by_degree / total.
void finalize_factorization(Factorization& fz);

// Product over the sigma-orbit of f (sigma = q-power map on coefficients),
// orbit_len = w or 2w; result has F_q coefficients, returned over the
// canonical F_q context. Throws if the coefficients fail the subfield test.
Polynomial frobenius_orbit_product(const Polynomial& f_big, const Tower& tower, u64 orbit_len);

Factorization factor_base_simple(const CaseParams& P, const Tower& tower);
Factorization factor_base_trinomial(const CaseParams& P, const Tower& tower);
Factorization factor_w_odd_simple(const CaseParams& P, const Tower& tower);
Factorization factor_w_odd_8n(const CaseParams& P, const Tower& tower);
Factorization factor_w_two(const CaseParams& P, const Tower& tower);

// Closed-form counts, no polynomial construction. Throws for Unsupported.
struct CountResult {
    u64 total = 0;
    std::map<u64, u64> by_degree;
};
CountResult count_factors(u64 n, u128 q);

// Top level: characteristic stripping, case dispatch, oracle fallback for
// composite w (flagged). bound limits every constructed field.
Factorization factor(u64 n, u128 q, u128 bound);

} // namespace cyclofactor
