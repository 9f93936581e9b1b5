#include "cyclofactor/index_sets.hpp"

namespace cyclofactor {

u64 canonical_residue(u128 x, u128 G) {
    u128 r = x % G;
    return static_cast<u64>(r == 0 ? G : r);
}

bool serret_binomial_irreducible(u64 t, u128 eta_order, u128 q) {
    if (t == 1) return true;
    if (eta_order == 0) throw invalid_input("eta must be nonzero");
    u128 rad_t = radical(factorize(t));
    if (eta_order % rad_t != 0) return false;
    if (gcd_u128(t, (q - 1) / eta_order) != 1) return false;
    if (t % 4 == 0 && (q - 1) % 4 != 0) return false;
    return true;
}

bool serret_binomial_irreducible(u64 t, const FieldContext& K, const FieldElement& eta) {
    if (K.is_zero(eta)) throw invalid_input("eta must be nonzero");
    return serret_binomial_irreducible(t, K.element_order(eta), K.order());
}

namespace {

bool orbit_minimal(u64 u, u128 G, u128 q, u64 steps) {
    u128 cur = u;
    for (u64 k = 1; k < steps; ++k) {
        cur = (cur * (q % G)) % G;
        if (canonical_residue(cur, G) < u) return false;
    }
    return true;
}

void require_exponent(u128 l) {
    if (l == 0) throw bound_exceeded("q-power exponent exceeds 128 bits");
}

} // namespace

std::vector<u64> enum_S_t(u64 t, const CaseParams& P, bool printed_form) {
    const u128 G = P.gw;
    std::vector<u64> out;
    u128 qw_over_1 = 0; // (q^w - 1)/(q - 1)
    u128 printed_gcd = 0;
    if (printed_form) {
        require_exponent(P.lw);
        printed_gcd = gcd_u128(P.n, (P.gw * P.lw) / (P.q - 1));
    } else {
        require_exponent(P.lw);
        qw_over_1 = (P.gw * P.lw) / (P.q - 1); // gw*lw = q^w - 1
    }
    for (u64 u = 1; u <= G; ++u) {
        if (gcd_u128(u, t) != 1) continue;
        if (printed_form) {
            if (u % printed_gcd == 0) continue;
        } else {
            if ((u * P.lw) % qw_over_1 == 0) continue;
        }
        if (!orbit_minimal(u, G, P.q, P.w)) continue;
        out.push_back(u);
    }
    return out;
}

std::vector<u64> enum_R_t(u64 t, const CaseParams& P) {
    const u128 G = P.g2;
    const u128 two_r = u128(1) << P.r;
    std::vector<u64> out;
    for (u64 u = 1; u <= G; ++u) {
        if (gcd_u128(u, t) != 1) continue;
        if (u % two_r == 0) continue;
        if (u128(u) >= (P.q * u) % G) continue;
        out.push_back(u);
    }
    return out;
}

std::vector<u64> enum_R_t_w2(u64 t, const CaseParams& P) {
    const u128 G = P.g2;
    require_exponent(P.l2);
    const u128 q_plus_1 = P.q + 1;
    std::vector<u64> out;
    for (u64 u = 1; u <= G; ++u) {
        if (gcd_u128(u, t) != 1) continue;
        if ((u * P.l2) % q_plus_1 == 0) continue;
        if (u > canonical_residue(P.q * u, G)) continue;
        out.push_back(u);
    }
    return out;
}

std::vector<u64> enum_R1_t(u64 t, const CaseParams& P) {
    // range [1, 2^r * g1] coincides with [1, g2] here: g2 = 2^r * g1
    return enum_R_t(t, P);
}

std::vector<u64> enum_R2_t(u64 t, const CaseParams& P, bool printed_form) {
    const u128 G = P.g2w;
    const u128 two_r = u128(1) << P.r;
    require_exponent(P.l2w);
    const u128 big_over_2 = (P.g2w * P.l2w) / (P.q * P.q - 1); // (q^{2w}-1)/(q^2-1)
    u128 printed_gcd = 0;
    if (printed_form) {
        require_exponent(P.lw);
        printed_gcd = gcd_u128(P.n, (P.gw * P.lw) / (P.q - 1));
    }
    std::vector<u64> out;
    for (u64 u = 1; u <= G; ++u) {
        if (gcd_u128(u, t) != 1) continue;
        if (u % two_r == 0) continue;
        if (printed_form) {
            if (u % printed_gcd == 0) continue;
        } else {
            if ((u * P.l2w) % big_over_2 == 0) continue;
        }
        if (!orbit_minimal(u, G, P.q, 2 * P.w)) continue;
        out.push_back(u);
    }
    return out;
}

} // namespace cyclofactor
