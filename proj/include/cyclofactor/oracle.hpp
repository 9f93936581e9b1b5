#pragma once

#include "cyclofactor/factorizer.hpp"

namespace cyclofactor {

struct CosetPartition {
    u64 n = 0;
    u128 q = 0;
    std::vector<std::vector<u64>> cosets; // each sorted, list ordered by minimum
};

// Requires gcd(n, q) = 1. Number of cosets = number of irreducible factors.
CosetPartition cyclotomic_cosets(u64 n, u128 q);

// Ground-truth factorization via minimal polynomials over cyclotomic cosets,
// computed in F_{q^m}, m = ord_n(q). Independent of the explicit engine.
// parallel distributes per-coset work across threads; output is identical.
Factorization oracle_factor(u64 n, u128 q, u128 bound, bool parallel = false);

// Rabin test: x^{q^d} = x mod f and gcd(x^{q^{d/r}} - x, f) = 1 for primes r | d.
bool is_irreducible(const Polynomial& f);

struct VerificationReport {
    bool product_ok = false;
    bool all_irreducible = false;
    bool degrees_ok = false;
    bool count_match = false;
    std::vector<std::string> notes;

    bool accepted() const { return product_ok && all_irreducible && degrees_ok && count_match; }
};

VerificationReport verify_factorization(const Factorization& fz);

} // namespace cyclofactor
