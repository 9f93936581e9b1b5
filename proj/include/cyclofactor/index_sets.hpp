#pragma once

#include "cyclofactor/cases.hpp"
#include "cyclofactor/field.hpp"

namespace cyclofactor {

// Residue of x mod G in [1, G]; 0 is represented by G (exponent 0 = trivial power).
u64 canonical_residue(u128 x, u128 G);

// x^t - eta irreducible over F_q iff t = 1, or: rad(t) | o(eta),
// gcd(t, (q-1)/o(eta)) = 1, and 4|t implies 4|(q-1).
bool serret_binomial_irreducible(u64 t, u128 eta_order, u128 q);
bool serret_binomial_irreducible(u64 t, const FieldContext& K, const FieldElement& eta);

// Index set for w-orbit binomial products (w odd prime):
//   { u in [1, gw] : gcd(u,t)=1, (q^w-1)/(q-1) does not divide u*lw,
//     u minimal in its orbit {u*q^k mod gw} }.
// printed_form replaces the divisibility test by gcd(n,(q^w-1)/(q-1)) | u;
// the two differ at points where w | gcd(n, q-1) with v_w(n) < v_w(q^w-1).
std::vector<u64> enum_S_t(u64 t, const CaseParams& P, bool printed_form = false);

// Trinomial index set for rad(n)|(q-1), q = 3 mod 4, 8|n:
//   { u in [1, g2] : gcd(u,t)=1, 2^r does not divide u, u < (q*u mod g2) }.
std::vector<u64> enum_R_t(u64 t, const CaseParams& P);

// Trinomial index set for w = 2:
//   { u in [1, g2] : gcd(u,t)=1, (q+1) does not divide u*l2, u <= (q*u mod g2 in [1,g2]) }.
std::vector<u64> enum_R_t_w2(u64 t, const CaseParams& P);

// Trinomial index set for w odd prime, q = 3 mod 4, 8|n (range [1, 2^r*g1] = [1, g2]):
//   { u in [1, g2] : gcd(u,t)=1, 2^r does not divide u, u < (q*u mod g2) }.
std::vector<u64> enum_R1_t(u64 t, const CaseParams& P);

// 2w-orbit index set for w odd prime, q = 3 mod 4, 8|n:
//   { u in [1, g2w] : gcd(u,t)=1, 2^r does not divide u,
//     (q^{2w}-1)/(q^2-1) does not divide u*l2w, u minimal in {u*q^k mod g2w, k < 2w} }.
std::vector<u64> enum_R2_t(u64 t, const CaseParams& P, bool printed_form = false);

} // namespace cyclofactor
