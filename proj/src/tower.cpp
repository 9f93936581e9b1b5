#include "cyclofactor/tower.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace cyclofactor {

namespace {

u128 inv_mod_u128(u128 a, u128 m) {
    __int128 t = 0, newt = 1;
    __int128 r = static_cast<__int128>(m), newr = static_cast<__int128>(a % m);
    while (newr != 0) {
        __int128 qq = r / newr;
        __int128 tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw invalid_input("inv_mod: arguments not coprime");
    if (t < 0) t += static_cast<__int128>(m);
    return static_cast<u128>(t);
}

// x with x = b mod (q-1), gcd(x, Q-1) = 1, where (q-1) | (Q-1) and gcd(b, q-1) = 1.
u128 lift_exponent(u128 b, u128 q_minus_1, const FactoredNat& big_group) {
    u128 x = 0, m = 1;
    for (const auto& [r, e] : big_group.factors) {
        u128 mod = 1;
        for (u32 i = 0; i < e; ++i) mod *= r;
        u128 res = (q_minus_1 % r == 0) ? (b % mod) : 1;
        // combine x = res (mod), current x (m)
        u128 diff = (res + mod - x % mod) % mod;
        x = x + m * ((diff * inv_mod_u128(m % mod, mod)) % mod);
        m *= mod;
    }
    return x % m;
}

// Baby-step giant-step in the cyclic subgroup generated by base (known order).
u128 bsgs_dlog(const FieldContext& K, const FieldElement& base, const FieldElement& target, u128 order) {
    u128 m = 1;
    while (m * m < order) ++m;
    std::unordered_map<u64, u64> table;
    table.reserve(static_cast<size_t>(m));
    FieldElement cur = K.one();
    for (u128 j = 0; j < m; ++j) {
        table.emplace(K.encode(cur), static_cast<u64>(j));
        cur = K.mul(cur, base);
    }
    FieldElement giant = K.inv(K.pow(base, m));
    cur = target;
    for (u128 i = 0; i <= m; ++i) {
        auto it = table.find(K.encode(cur));
        if (it != table.end()) return (i * m + it->second) % order;
        cur = K.mul(cur, giant);
    }
    throw invalid_input("discrete log not found; target outside subgroup");
}

Polynomial lift_scalar_poly(const FieldCtxPtr& big, const std::vector<u64>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (u64 v : coeffs) c.push_back(big->from_scalar(v));
    return poly_from_coeffs(big, std::move(c));
}

// One deterministic splitting attempt with mixing element c; empty result = no split.
Polynomial try_split(const Polynomial& f, const FieldElement& c) {
    const FieldCtxPtr& B = f.ctx;
    Polynomial h;
    if (B->characteristic() == 2) {
        // trace map sum z^(2^i) applied to c*x, i < D
        Polynomial a = poly_mod(poly_scale(poly_x(B), c), f);
        Polynomial acc = a;
        for (u32 i = 1; i < B->degree(); ++i) {
            a = poly_mod(poly_mul(a, a), f);
            acc = poly_add(acc, a);
        }
        h = poly_gcd(f, acc);
    } else {
        Polynomial shifted = poly_add(poly_x(B), poly_from_coeffs(B, {c}));
        Polynomial powed = poly_pow_mod(shifted, (B->order() - 1) / 2, f);
        h = poly_gcd(f, poly_sub(powed, poly_one(B)));
    }
    if (poly_deg(h) <= 0 || poly_deg(h) >= poly_deg(f)) return poly_zero(B);
    return h;
}

} // namespace

FieldElement subfield_root(const FieldCtxPtr& big, const FieldCtxPtr& fq) {
    if (big->characteristic() != fq->characteristic())
        throw invalid_input("subfield_root: characteristic mismatch");
    if (big->degree() % fq->degree() != 0)
        throw invalid_input("subfield_root: not a subfield");
    Polynomial f = poly_make_monic(lift_scalar_poly(big, fq->modulus()));
    const Polynomial whole = f;
    FieldElement g = big->gen();
    u32 attempts = 0;
    while (poly_deg(f) > 1) {
        FieldElement c = big->one();
        bool split = false;
        for (u32 j = 0; j < 512; ++j) {
            Polynomial h = try_split(f, c);
            if (!poly_is_zero(h)) {
                Polynomial other = poly_divmod(f, h).first;
                h = poly_make_monic(h);
                other = poly_make_monic(other);
                if (poly_deg(other) < poly_deg(h) ||
                    (poly_deg(other) == poly_deg(h) && canonical_key(other) < canonical_key(h)))
                    std::swap(h, other);
                f = h;
                split = true;
                break;
            }
            c = big->mul(c, g);
        }
        if (!split || ++attempts > 128)
            throw std::logic_error("subfield_root: splitting failed to converge");
    }
    FieldElement rho = big->neg(f.c[0]);
    if (!big->is_zero(poly_eval(whole, rho)))
        throw std::logic_error("subfield_root: claimed root does not vanish");
    return rho;
}

SubfieldMap::SubfieldMap(FieldCtxPtr big, FieldCtxPtr fq, FieldElement theta)
    : big_(std::move(big)), fq_(std::move(fq)), theta_(std::move(theta)) {
    const u64 p = big_->characteristic();
    if (p != fq_->characteristic()) throw invalid_input("subfield map: characteristic mismatch");
    const u32 D = big_->degree();
    const u32 s = fq_->degree();
    basis_.assign(s, {});
    FieldElement pw = big_->one();
    for (u32 i = 0; i < s; ++i) {
        basis_[i] = pw.c;
        pw = big_->mul(pw, theta_);
    }
    // Gauss-Jordan on the D x s basis matrix augmented with I_D; the first s rows
    // of the reduced augmentation give a left inverse.
    std::vector<std::vector<u64>> aug(D, std::vector<u64>(s + D, 0));
    for (u32 r = 0; r < D; ++r) {
        for (u32 cidx = 0; cidx < s; ++cidx) aug[r][cidx] = basis_[cidx][r];
        aug[r][s + r] = 1;
    }
    u32 row = 0;
    for (u32 col = 0; col < s; ++col) {
        u32 pivot = row;
        while (pivot < D && aug[pivot][col] == 0) ++pivot;
        if (pivot == D) throw std::logic_error("subfield map: basis not independent");
        std::swap(aug[row], aug[pivot]);
        u64 inv = 1;
        {
            // scalar inverse mod p by Fermat
            u64 b = aug[row][col], e = p - 2, acc = 1;
            while (e) {
                if (e & 1) acc = static_cast<u64>((static_cast<u128>(acc) * b) % p);
                b = static_cast<u64>((static_cast<u128>(b) * b) % p);
                e >>= 1;
            }
            inv = acc;
        }
        for (u64& v : aug[row]) v = static_cast<u64>((static_cast<u128>(v) * inv) % p);
        for (u32 r = 0; r < D; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            u64 fct = aug[r][col];
            for (u32 k = 0; k < s + D; ++k)
                aug[r][k] = static_cast<u64>((aug[r][k] + static_cast<u128>(p - fct) * aug[row][k]) % p);
        }
        ++row;
    }
    left_.assign(s, std::vector<u64>(D, 0));
    for (u32 r = 0; r < s; ++r)
        for (u32 k = 0; k < D; ++k) left_[r][k] = aug[r][s + k];
}

FieldElement SubfieldMap::to_fq(const FieldElement& e) const {
    const u64 p = big_->characteristic();
    const u32 D = big_->degree();
    const u32 s = fq_->degree();
    FieldElement out = fq_->zero();
    for (u32 r = 0; r < s; ++r) {
        u128 acc = 0;
        for (u32 k = 0; k < D; ++k) acc += static_cast<u128>(left_[r][k]) * e.c[k];
        out.c[r] = static_cast<u64>(acc % p);
    }
    // residual check doubles as the q-power fixedness test
    for (u32 k = 0; k < D; ++k) {
        u128 acc = 0;
        for (u32 r = 0; r < s; ++r) acc += static_cast<u128>(basis_[r][k]) * out.c[r];
        if (acc % p != e.c[k])
            throw invalid_input("element is not fixed by the q-power map (outside F_q)");
    }
    return out;
}

FieldElement SubfieldMap::lift(const FieldElement& a) const {
    const u64 p = big_->characteristic();
    const u32 D = big_->degree();
    const u32 s = fq_->degree();
    FieldElement out = big_->zero();
    for (u32 k = 0; k < D; ++k) {
        u128 acc = 0;
        for (u32 r = 0; r < s; ++r) acc += static_cast<u128>(basis_[r][k]) * a.c[r];
        out.c[k] = static_cast<u64>(acc % p);
    }
    return out;
}

namespace {

struct TowerKey {
    u64 p;
    u32 s;
    u64 w;
    bool operator<(const TowerKey& o) const {
        if (p != o.p) return p < o.p;
        if (s != o.s) return s < o.s;
        return w < o.w;
    }
};

std::mutex g_tower_mutex;
std::map<TowerKey, TowerPtr> g_tower_cache;

struct ExtKey {
    u64 p;
    u32 s;
    u32 ext;
    bool operator<(const ExtKey& o) const {
        if (p != o.p) return p < o.p;
        if (s != o.s) return s < o.s;
        return ext < o.ext;
    }
};

std::mutex g_ext_mutex;
std::map<ExtKey, ExtensionPtr> g_ext_cache;

void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("tower invariant violated: ") + what);
}

} // namespace

TowerPtr build_tower(u64 p, u32 s, u64 w, u128 bound) {
    if (s == 0 || w == 0) throw invalid_input("build_tower: s and w must be positive");
    {
        std::lock_guard<std::mutex> lock(g_tower_mutex);
        auto it = g_tower_cache.find({p, s, w});
        if (it != g_tower_cache.end()) {
            if (it->second->big->order() > bound)
                throw bound_exceeded("field size exceeds bound");
            return it->second;
        }
    }
    const u64 big_deg64 = 2ull * w * s;
    if (big_deg64 > 64) throw bound_exceeded("tower degree exceeds supported maximum");
    const u32 big_deg = static_cast<u32>(big_deg64);
    FieldCtxPtr big = find_primitive_polynomial(p, big_deg, bound);
    FieldCtxPtr fq = find_primitive_polynomial(p, s, bound);
    const u128 q = checked_pow(p, s);
    const u128 Q = big->order();
    const u128 qw = checked_pow(q, static_cast<u64>(w));

    FieldElement pi = big->gen();
    {
        // twist pi so theta lands on the canonical F_q modulus root, for every s
        FieldElement rho = subfield_root(big, fq);
        FieldElement theta0 = big->pow(pi, (Q - 1) / (q - 1));
        u128 b = bsgs_dlog(*big, theta0, rho, q - 1);
        u128 e = lift_exponent(b, q - 1, big->group_order_factors());
        pi = big->pow(pi, e);
        require(big->pow(pi, (Q - 1) / (q - 1)) == rho, "theta misses canonical root");
    }
    FieldElement theta = big->pow(pi, (Q - 1) / (q - 1));
    FieldElement delta = big->pow(pi, qw + 1);
    FieldElement alpha = big->pow(pi, (Q - 1) / (q * q - 1));

    require(big->element_order(pi) == Q - 1, "pi not primitive");
    require(big->element_order(theta) == q - 1, "theta order");
    require(big->element_order(delta) == qw - 1, "delta order");
    require(big->element_order(alpha) == q * q - 1, "alpha order");
    require(big->pow(alpha, q + 1) == theta, "alpha^(q+1) != theta");
    require(big->pow(delta, (qw - 1) / (q - 1)) == theta, "delta power chain misses theta");

    auto tower = std::make_shared<Tower>(Tower{
        p, s, w, q, big, pi, delta, alpha, theta, SubfieldMap(big, fq, theta)});
    std::lock_guard<std::mutex> lock(g_tower_mutex);
    auto [it, inserted] = g_tower_cache.emplace(TowerKey{p, s, w}, tower);
    return it->second;
}

ExtensionPtr build_extension(u64 p, u32 s, u32 ext, u128 bound) {
    if (s == 0 || ext == 0) throw invalid_input("build_extension: degrees must be positive");
    {
        std::lock_guard<std::mutex> lock(g_ext_mutex);
        auto it = g_ext_cache.find({p, s, ext});
        if (it != g_ext_cache.end()) {
            if (it->second->big->order() > bound)
                throw bound_exceeded("field size exceeds bound");
            return it->second;
        }
    }
    const u64 deg64 = static_cast<u64>(s) * ext;
    if (deg64 > 64) throw bound_exceeded("extension degree exceeds supported maximum");
    FieldCtxPtr big = find_primitive_polynomial(p, static_cast<u32>(deg64), bound);
    FieldCtxPtr fq = find_primitive_polynomial(p, s, bound);
    FieldElement theta = (ext == 1) ? big->gen() : subfield_root(big, fq);
    const u128 q = checked_pow(p, s);
    auto result = std::make_shared<Extension>(Extension{
        p, s, ext, q, big, big->gen(), SubfieldMap(big, fq, theta)});
    std::lock_guard<std::mutex> lock(g_ext_mutex);
    auto [it, inserted] = g_ext_cache.emplace(ExtKey{p, s, ext}, result);
    return it->second;
}

} // namespace cyclofactor
