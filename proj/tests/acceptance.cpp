// Acceptance gate. Runs every release criterion and prints one PASS/FAIL line
// per criterion; exits nonzero if any criterion fails. Expected values are
// frozen from the independent coset oracle; where a printed closed form is
// known to disagree with the oracle, the point lives in the reviewed
// discrepancy registry below and the oracle value is authoritative.

#include "cyclofactor/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cyclofactor;

namespace {

constexpr u128 kBound = u128(1) << 63;

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 pow64(u64 b, u32 e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// exact nonnegative rationals; every value handled here is tiny
struct Frac {
    u128 num = 0;
    u128 den = 1;
};

Frac reduce(Frac f) {
    u128 g = gcd128(f.num, f.den);
    if (g > 1) {
        f.num /= g;
        f.den /= g;
    }
    return f;
}

Frac frac(u128 n, u128 d = 1) { return reduce(Frac{n, d}); }

Frac fmul(Frac a, Frac b) { return reduce(Frac{a.num * b.num, a.den * b.den}); }

Frac fadd(Frac a, Frac b) { return reduce(Frac{a.num * b.den + b.num * a.den, a.den * b.den}); }

bool frac_as_u64(Frac f, u64& out) {
    f = reduce(f);
    if (f.den != 1) return false;
    out = static_cast<u64>(f.num);
    return true;
}

// prod over primes p | m of (1 + v_p(vals) * (p-1)/p); odd_only skips p = 2.
Frac valuation_product(u64 m, u64 vals, bool odd_only) {
    Frac acc = frac(1);
    for (const auto& [p, e] : factorize(m).factors) {
        if (odd_only && p == 2) continue;
        u128 v = valuation(p, vals);
        acc = fmul(acc, Frac{p + v * (p - 1), p});
    }
    return acc;
}

// The per-case grand-total count formulas, evaluated exactly as printed.
// Returns false for the unsupported (composite-order) case.
bool printed_grand_total(const CaseParams& P, u64& out) {
    Frac T;
    switch (P.tag) {
    case CaseTag::BaseSimple:
        T = fmul(frac(P.g1), valuation_product(P.m1, P.m1, false));
        break;
    case CaseTag::BaseTrinomial: {
        // g1 * (1/2 + 2^{r-2} (2 + v2(m2))) * prod over odd p | m2
        Frac mid = fadd(frac(1, 2), frac((u128(1) << (P.r - 2)) * (2 + valuation(2, P.m2))));
        T = fmul(fmul(frac(P.g1), mid), valuation_product(P.m2, P.m2, true));
        break;
    }
    case CaseTag::WOddSimple: {
        Frac a = fmul(valuation_product(P.mw, P.mw, false), frac(P.gw, P.w));
        Frac b = fmul(valuation_product(P.mw1, P.mw1, false), frac((P.w - 1) * P.g1, P.w));
        T = fadd(a, b);
        break;
    }
    case CaseTag::WOdd8n: {
        // all four products take valuations from m_{2w}
        u128 two_r = u128(1) << P.r;
        Frac t1 = fmul(valuation_product(P.m2w, P.m2w, false), frac(two_r * P.gw, 2 * P.w));
        Frac t2 = fmul(valuation_product(P.m2w, P.m2w, true), frac(P.gw, 2 * P.w));
        Frac t3 = fmul(valuation_product(P.mw1, P.m2w, false),
                       frac(two_r * (P.w - 1) * P.g1, 2 * P.w));
        Frac t4 = fmul(valuation_product(P.mw1, P.m2w, true), frac((P.w - 1) * P.g1, 2 * P.w));
        T = fadd(fadd(t1, t2), fadd(t3, t4));
        break;
    }
    case CaseTag::WTwo: {
        Frac a = fmul(valuation_product(P.m2, P.m2, false), frac(P.g2, 2));
        Frac b = fmul(valuation_product(P.mw1, P.mw1, false), frac(P.g1, 2));
        T = fadd(a, b);
        break;
    }
    case CaseTag::Unsupported: return false;
    }
    return frac_as_u64(T, out);
}

// ---------------------------------------------------------------------------
// Reviewed discrepancy registry: points where a printed table row disagrees
// with the coset count. The oracle value is authoritative; each entry was
// re-derived by hand with two independent methods before being admitted.
struct Discrepancy {
    u128 q;
    u64 n;
    u64 printed;
    u64 actual;
    const char* where;
};

const std::vector<Discrepancy>& reviewed_discrepancies() {
    static const std::vector<Discrepancy> kList = {
        {3, 104, 20, 25,
         "count table, q=3 row with first exponent >= 2: the row hypothesis excludes"
         " 8 | n when q = 3 mod 4, where the trinomial regime applies"},
        {9, 208, 40, 60, "count table, q=9 row with first exponent >= 4, second <= 1"},
        {9, 1456, 248, 372, "count table, q=9 row with first exponent >= 4, second <= 1"},
        {9, 637, 21, 57, "count table, q=9 row with first exponent <= 3, second >= 2"},
        {9, 10192, 456, 684, "count table, q=9 row with first exponent >= 4, second >= 2"},
        {8, 147, 23, 26, "trinomial-regime table, q=8 row with first exponent in {1,2}, second >= 2"},
        {8, 441, 62, 65, "trinomial-regime table, q=8 row with first exponent in {1,2}, second >= 2"},
    };
    return kList;
}

const Discrepancy* find_discrepancy(u128 q, u64 n) {
    for (const Discrepancy& d : reviewed_discrepancies())
        if (d.q == q && d.n == n) return &d;
    return nullptr;
}

// ---------------------------------------------------------------------------
// printed per-family table rows, evaluated at their published parameter points
struct PrintedPoint {
    u128 q;
    u64 n;
    u64 printed;
};

std::vector<PrintedPoint> printed_table_points() {
    std::vector<PrintedPoint> v;
    auto add = [&](u128 q, u64 n, u64 printed) { v.push_back({q, n, printed}); };

    // ---- first table (simple base / odd-prime orbit regime), last exponent k = 1
    for (u32 k = 1; k <= 2; ++k) add(2, pow64(7, k), 2 * k + 1);
    for (u32 k1 = 0; k1 <= 3; ++k1)
        add(3, pow64(2, k1) * 13, k1 <= 1 ? pow64(2, k1) * 5 : (k1 + 1) * 5);
    for (u32 k1 = 0; k1 <= 3; ++k1)
        add(4, pow64(3, k1) * 7, k1 <= 1 ? pow64(3, k1) * 3 : 12 * k1 + 2 * k1 - 6 + 1);
    for (u32 k1 = 0; k1 <= 3; ++k1)
        add(5, pow64(2, k1) * 31, k1 <= 2 ? pow64(2, k1) * 11 : 2 * k1 * 11);
    for (u32 k1 = 0; k1 <= 1; ++k1)
        for (u32 k2 = 0; k2 <= 1; ++k2)
            add(7, pow64(2, k1) * pow64(3, k2) * 19, pow64(2, k1) * pow64(3, k2) * 7);
    for (u32 k1 = 0; k1 <= 1; ++k1) // second exponent 2 row
        add(7, pow64(2, k1) * 9 * 19, pow64(2, k1) * (36 * 2 + 2 * 2 - 18 + 1));
    for (u32 k2 = 0; k2 <= 1; ++k2) add(7, 4 * pow64(3, k2) * 19, pow64(3, k2 + 1) * 7);
    add(7, 4 * 9 * 19, 3 * (36 * 2 + 2 * 2 - 18 + 1));
    for (u32 k1 = 0; k1 <= 1; ++k1) add(8, pow64(7, k1) * 73, pow64(7, k1) * 25);
    add(8, 7 * 73, (6 * 1 + 1) * 25); // overlapping row, first exponent >= 1
    for (u32 k1 = 0; k1 <= 3; ++k1)
        for (u32 k2 = 0; k2 <= 1; ++k2)
            add(9, pow64(2, k1) * pow64(7, k2) * 13,
                pow64(2, k1) * (pow64(7, k2) * 13 + 2) / 3);
    for (u32 k2 = 0; k2 <= 1; ++k2) // first exponent 4 row (reviewed: wrong)
        add(9, 16 * pow64(7, k2) * 13, 4 * (4 - 2) * (pow64(7, k2) * 13 + 2) / 3);
    add(9, 49 * 13, 6 * 2 + 2 * 2 + 4 + 1);              // second exponent 2 row (reviewed)
    add(9, 16 * 49 * 13, 4 * 2 * (24 * 2 + 2 * 2 + 4 + 1)); // both high rows (reviewed)

    // ---- second table (even orbit / trinomial regime)
    for (u32 k = 1; k <= 4; ++k) add(2, pow64(3, k), k + 1);
    for (u32 k1 = 0; k1 <= 1; ++k1)
        for (u32 k2 = 1; k2 <= 2; ++k2)
            add(4, pow64(3, k1) * pow64(5, k2), pow64(3, k1) * (2 * k2 + 1));
    add(4, 45, (2 * 2 + 1) * 3);
    add(4, 225, (2 * 2 + 1) * 5);
    add(4, 135, (2 * 3 + 1) * 3);
    for (u32 k1 = 0; k1 <= 2; ++k1)
        for (u32 k2 = 1; k2 <= 2; ++k2)
            add(5, pow64(2, k1) * pow64(3, k2), pow64(2, k1) * (k2 + 1));
    for (u32 k1 = 3; k1 <= 5; ++k1) add(5, pow64(2, k1) * 3, 4 * k1 + 2 * k1 - 4);
    add(5, 72, 4 * 3 * 2 + 2 * 3 - 4 * 2);
    add(5, 144, 4 * 4 * 2 + 2 * 4 - 4 * 2);
    add(5, 216, 4 * 3 * 3 + 2 * 3 - 4 * 3);
    for (u32 k1 = 1; k1 <= 2; ++k1)
        for (u32 k2 = 0; k2 <= 1; ++k2)
            add(8, pow64(3, k1) * pow64(7, k2), (pow64(3, k1) + 1) * pow64(7, k2) / 2);
    for (u32 k1 = 1; k1 <= 2; ++k1) // second exponent 2 row (reviewed: wrong)
        add(8, pow64(3, k1) * 49, (7 + pow64(3, k1) * (6 * 2 + 1)) / 2);
    for (u32 k1 = 3; k1 <= 5; ++k1) add(8, pow64(3, k1), 3 * k1 - 1);
    add(8, 189, (3 * 3 - 1) * 7);
    add(8, 1323, (3 * 3 - 1) * (6 * 2 + 1));
    for (u32 k1 = 0; k1 <= 3; ++k1)
        for (u32 k2 = 1; k2 <= 2; ++k2)
            add(9, pow64(2, k1) * pow64(5, k2), pow64(2, k1) * (2 * k2 + 1));
    add(9, 80, 4 * (4 * 4 * 1 + 4 - 8 * 1 - 1));
    add(9, 160, 4 * (4 * 5 * 1 + 5 - 8 * 1 - 1));
    add(9, 400, 4 * (4 * 4 * 2 + 4 - 8 * 2 - 1));
    return v;
}

// ---------------------------------------------------------------------------
// frozen expected totals for the two published count tables (oracle values)
struct TablePoint {
    u128 q;
    u64 n;
    u64 expected;
};

std::vector<TablePoint> table_one_points() {
    return {
        {2, 1, 1},    {2, 7, 3},    {2, 49, 5},                                  // 7^k
        {3, 1, 1},    {3, 2, 2},    {3, 4, 3},    {3, 8, 5},                     // 2^k1 13^k
        {3, 13, 5},   {3, 26, 10},  {3, 52, 15},  {3, 104, 25},
        {4, 1, 1},    {4, 3, 3},    {4, 9, 5},    {4, 27, 7},                    // 3^k1 7^k
        {4, 7, 3},    {4, 21, 9},   {4, 63, 23},  {4, 189, 37},
        {5, 31, 11},  {5, 62, 22},  {5, 124, 44}, {5, 248, 66},                  // 2^k1 31
        {8, 73, 25},  {8, 511, 175},                                             // 7^k1 73
        {9, 13, 5},   {9, 26, 10},  {9, 52, 20},  {9, 104, 40},  {9, 208, 60},   // 2^k1 7^k2 13
        {9, 91, 31},  {9, 182, 62}, {9, 364, 124}, {9, 728, 248}, {9, 1456, 372},
    };
}

std::vector<TablePoint> table_two_points() {
    return {
        {2, 3, 2},    {2, 9, 3},    {2, 27, 4},   {2, 81, 5},                    // 3^k
        {4, 1, 1},    {4, 3, 3},    {4, 9, 5},    {4, 27, 7},                    // 3^k1 5^k2
        {4, 5, 3},    {4, 15, 9},   {4, 45, 15},  {4, 135, 21},
        {4, 25, 5},   {4, 75, 15},  {4, 225, 25},
        {5, 2, 2},    {5, 4, 4},    {5, 8, 6},    {5, 16, 8},    {5, 32, 10},    // 2^k1 3^k2
        {5, 3, 2},    {5, 6, 4},    {5, 12, 8},   {5, 24, 14},   {5, 48, 20},
        {5, 96, 26},  {5, 9, 3},    {5, 18, 6},   {5, 36, 12},   {5, 72, 22},
        {5, 144, 32}, {5, 216, 30},
        {8, 3, 2},    {8, 9, 5},    {8, 27, 8},   {8, 81, 11},   {8, 243, 14},   // 3^k1 7^k2
        {8, 21, 14},  {8, 63, 35},  {8, 189, 56}, {8, 147, 26},  {8, 441, 65},
        {8, 1323, 104},
        {9, 2, 2},    {9, 4, 4},    {9, 8, 8},    {9, 16, 12},   {9, 32, 16},    // 2^k1 5^k2
        {9, 5, 3},    {9, 10, 6},   {9, 20, 12},  {9, 40, 24},   {9, 80, 44},
        {9, 160, 64}, {9, 25, 5},   {9, 50, 10},  {9, 100, 20},  {9, 200, 40},
        {9, 400, 76},
    };
}

// ---------------------------------------------------------------------------
// shared grid (criterion 1 domain)
std::vector<GridJob> acceptance_grid() {
    std::vector<GridJob> qs = {
        {0, 2, 1, 2},  {0, 3, 1, 3},  {0, 2, 2, 4},  {0, 5, 1, 5},
        {0, 7, 1, 7},  {0, 2, 3, 8},  {0, 3, 2, 9},  {0, 11, 1, 11},
        {0, 13, 1, 13}, {0, 2, 4, 16}, {0, 5, 2, 25}, {0, 3, 3, 27},
    };
    return make_grid(qs, 300, false);
}

// true when q^m stays at or below cap
bool pow_fits(u128 q, u128 m, u128 cap) {
    u128 acc = 1;
    for (u128 i = 0; i < m; ++i) {
        if (acc > cap / q) return false;
        acc *= q;
    }
    return acc <= cap;
}

// ---------------------------------------------------------------------------
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    std::vector<std::string> failures;
};

void note_failure(CriterionResult& r, std::string msg) {
    if (r.failures.size() < 12) r.failures.push_back(std::move(msg));
}

std::string qn_label(u128 q, u64 n) {
    return "q=" + dec_string(q) + " n=" + std::to_string(n);
}

// criterion 1: explicit == oracle on the whole sweep grid, verified products
CriterionResult run_criterion_grid() {
    CriterionResult r{1, "oracle equivalence sweep", false, "", {}};
    auto t0 = std::chrono::steady_clock::now();
    std::vector<GridJob> jobs = acceptance_grid();
    std::vector<GridRow> rows = run_grid_parallel(jobs, kBound, true);
    u64 pass = 0, fail = 0, skip = 0, matched = 0, mismatched = 0, fallback = 0, unverified = 0;
    for (const GridRow& row : rows) {
        switch (row.status) {
        case RowStatus::Pass: ++pass; break;
        case RowStatus::Fail: ++fail; break;
        case RowStatus::Skip: ++skip; break;
        }
        if (row.status == RowStatus::Skip) continue;
        if (row.oracle_fallback) {
            ++fallback;
            continue; // composite orbit order: outside the five closed-form cases
        }
        if (row.status == RowStatus::Fail)
            note_failure(r, qn_label(row.job.q, row.job.n) + " failed: " + row.error);
        if (!row.verified) ++unverified;
        if (row.oracle_match == 1) ++matched;
        if (row.oracle_match == 0) {
            ++mismatched;
            note_failure(r, qn_label(row.job.q, row.job.n) + " oracle multiset mismatch");
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << jobs.size() << " jobs, " << pass << " pass, " << fail << " fail, " << skip
       << " bound-skips, " << fallback << " composite-order fallbacks, " << matched
       << " oracle comparisons, " << std::fixed;
    os.precision(1);
    os << dt << "s";
    r.detail = os.str();
    r.pass = fail == 0 && mismatched == 0 && unverified == 0 && matched > 0 && dt < 300.0;
    if (matched == 0) note_failure(r, "no oracle comparison actually ran");
    if (dt >= 300.0) note_failure(r, "sweep exceeded the five-minute budget");
    return r;
}

// criteria 2 and 3: frozen table totals, checked four ways
CriterionResult run_criterion_table(int id, const char* title,
                                     const std::vector<TablePoint>& pts) {
    CriterionResult r{id, title, false, "", {}};
    u64 checked = 0;
    for (const TablePoint& tp : pts) {
        std::string label = qn_label(tp.q, tp.n);
        try {
            u64 cosets = cyclotomic_cosets(tp.n, tp.q).cosets.size();
            u64 counted = count_factors(tp.n, tp.q).total;
            Factorization fz = factor(tp.n, tp.q, kBound);
            bool verified = verify_factorization(fz).accepted();
            if (cosets != tp.expected)
                note_failure(r, label + ": coset count " + std::to_string(cosets) +
                                    " != expected " + std::to_string(tp.expected));
            if (counted != tp.expected)
                note_failure(r, label + ": closed-form count " + std::to_string(counted) +
                                    " != expected " + std::to_string(tp.expected));
            if (fz.total != tp.expected)
                note_failure(r, label + ": explicit engine built " + std::to_string(fz.total) +
                                    " factors, expected " + std::to_string(tp.expected));
            if (!verified) note_failure(r, label + ": product/irreducibility verification failed");
            u128 m = tp.n > 1 ? mult_order(tp.q, tp.n) : 1;
            if (pow_fits(tp.q, m, u128(1) << 24)) {
                Factorization of = oracle_factor(tp.n, tp.q, kBound);
                if (!factorizations_match(fz, of))
                    note_failure(r, label + ": explicit and oracle multisets differ");
            }
            ++checked;
        } catch (const std::exception& e) {
            note_failure(r, label + ": exception: " + e.what());
        }
    }
    r.detail = std::to_string(checked) + " points";
    r.pass = r.failures.empty() && checked == pts.size();
    return r;
}

// criterion 4: the flagship worked example
CriterionResult run_criterion_example() {
    CriterionResult r{4, "x^104 - 1 over GF(3)", false, "", {}};
    try {
        Factorization fz = factor(104, 3, kBound);
        std::string tag = case_name(fz.info.tag);
        if (tag != "WOdd8n") note_failure(r, "case " + tag + ", expected WOdd8n");
        if (fz.total != 25) note_failure(r, "total " + std::to_string(fz.total) + ", expected 25");
        if (!verify_factorization(fz).accepted()) note_failure(r, "verification rejected");
        std::map<u64, u64> want{{1, 2}, {2, 3}, {3, 8}, {6, 12}};
        if (fz.counts_by_degree != want) note_failure(r, "per-degree histogram is off");
        if (!factorizations_match(fz, oracle_factor(104, 3, kBound)))
            note_failure(r, "oracle multiset differs");
        r.detail = "case WOdd8n, 25 factors, degrees 1:2 2:3 3:8 6:12";
    } catch (const std::exception& e) {
        note_failure(r, std::string("exception: ") + e.what());
    }
    r.pass = r.failures.empty();
    return r;
}

// criterion 5: closed-form counts vs coset counts, plus every printed formula
CriterionResult run_criterion_counts() {
    CriterionResult r{5, "count formulas vs coset oracle", false, "", {}};
    u64 grid_checked = 0, formula_checked = 0, printed_checked = 0, registered_hits = 0;
    std::set<std::pair<u64, u64>> hit; // (n, low 64 bits of q)

    for (const GridJob& job : acceptance_grid()) {
        CaseInfo info = classify_case(job.n, job.q);
        if (info.tag == CaseTag::Unsupported) continue;
        std::string label = qn_label(job.q, job.n);
        u64 cosets = cyclotomic_cosets(job.n, job.q).cosets.size();
        u64 counted = count_factors(job.n, job.q).total;
        if (counted != cosets)
            note_failure(r, label + ": count_factors " + std::to_string(counted) +
                                " != cosets " + std::to_string(cosets));
        ++grid_checked;

        u64 printed = 0;
        CaseParams P = derive_params(job.n, job.q, info);
        if (!printed_grand_total(P, printed)) {
            note_failure(r, label + ": grand-total formula did not reduce to an integer");
            continue;
        }
        ++formula_checked;
        if (printed != cosets) {
            const Discrepancy* d = find_discrepancy(job.q, job.n);
            if (!d || d->printed != printed || d->actual != cosets)
                note_failure(r, label + ": grand total " + std::to_string(printed) +
                                    " != cosets " + std::to_string(cosets) +
                                    " and the point is not in the reviewed registry");
            else {
                hit.insert({job.n, static_cast<u64>(job.q)});
                ++registered_hits;
            }
        }
    }

    for (const PrintedPoint& pp : printed_table_points()) {
        std::string label = qn_label(pp.q, pp.n);
        u64 cosets = cyclotomic_cosets(pp.n, pp.q).cosets.size();
        u64 counted = count_factors(pp.n, pp.q).total;
        if (counted != cosets)
            note_failure(r, label + ": count_factors " + std::to_string(counted) +
                                " != cosets " + std::to_string(cosets));
        ++printed_checked;
        if (pp.printed == cosets) continue;
        const Discrepancy* d = find_discrepancy(pp.q, pp.n);
        if (!d || d->printed != pp.printed || d->actual != cosets) {
            note_failure(r, label + ": printed row value " + std::to_string(pp.printed) +
                                " != cosets " + std::to_string(cosets) +
                                " and the point is not in the reviewed registry");
        } else {
            hit.insert({pp.n, static_cast<u64>(pp.q)});
            ++registered_hits;
        }
    }

    for (const Discrepancy& d : reviewed_discrepancies())
        if (!hit.count({d.n, static_cast<u64>(d.q)}))
            note_failure(r, qn_label(d.q, d.n) +
                                ": registry entry never exercised (stale registry)");

    std::ostringstream os;
    os << grid_checked << " grid points, " << formula_checked << " grand-total evaluations, "
       << printed_checked << " printed row points, " << reviewed_discrepancies().size()
       << " registered divergences confirmed";
    r.detail = os.str();
    r.pass = r.failures.empty();
    return r;
}

// criterion 6: binomial irreducibility rule vs the generic test
CriterionResult run_criterion_serret() {
    CriterionResult r{6, "binomial criterion vs Rabin test", false, "", {}};
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<u64, u32>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                     {7, 1}, {2, 3}, {3, 2}};
    u64 checked = 0;
    for (auto [p, s] : fields) {
        FieldCtxPtr K = find_primitive_polynomial(p, s, kBound);
        u128 q = K->order();
        for (u64 t = 1; t <= 12; ++t) {
            for (u64 code = 1; code < q; ++code) {
                FieldElement eta = K->decode(code);
                bool rule = serret_binomial_irreducible(t, *K, eta);
                bool rabin = is_irreducible(poly_binomial(K, t, eta));
                if (rule != rabin)
                    note_failure(r, "q=" + dec_string(q) + " t=" + std::to_string(t) +
                                        " eta code " + std::to_string(code) + ": rule says " +
                                        (rule ? "irreducible" : "reducible") + ", Rabin says " +
                                        (rabin ? "irreducible" : "reducible"));
                ++checked;
            }
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << checked << " binomials, " << std::fixed;
    os.precision(2);
    os << dt << "s";
    r.detail = os.str();
    r.pass = r.failures.empty() && dt < 30.0;
    if (dt >= 30.0) note_failure(r, "exceeded the 30 second budget");
    return r;
}

// criterion 7: the arithmetic lemma behind the orbit splitting
// statements, for prime powers q < 100 and primes w < 20 with S = (q^w-1)/(q-1):
//   (1) gcd(q-1, S) = w when w | q-1, else 1
//   (2) when w is odd and w | q-1: v_w(S) = 1   (the divisibility hypothesis is
//       necessary: q=2, w=3 gives S=7 with v_3 = 0)
//   (3) when w does not divide q-1: w does not divide S
CriterionResult run_criterion_lemma() {
    CriterionResult r{7, "orbit-splitting arithmetic lemma", false, "", {}};
    const u64 primes_w[] = {2, 3, 5, 7, 11, 13, 17, 19};
    u64 checked = 0;
    for (u64 q = 2; q < 100; ++q) {
        if (factorize(q).factors.size() != 1) continue;
        for (u64 w : primes_w) {
            u128 Q = 1;
            for (u64 i = 0; i < w; ++i) Q *= q;
            u128 S = (Q - 1) / (q - 1);
            bool wdiv = (q - 1) % w == 0;
            std::string label = "q=" + std::to_string(q) + " w=" + std::to_string(w);
            if (gcd128(q - 1, S) != (wdiv ? w : 1))
                note_failure(r, label + ": statement 1 (gcd) fails");
            if (w % 2 == 1) {
                u32 vw = valuation(w, S);
                if (wdiv && vw != 1) note_failure(r, label + ": statement 2 (valuation) fails");
                if (!wdiv && vw != 0) note_failure(r, label + ": statement 3 (coprimality) fails");
            }
            if (!wdiv && S % w == 0) note_failure(r, label + ": statement 3 fails");
            ++checked;
        }
    }
    // the documented witness that statement 2 needs its hypothesis
    if (valuation(3, (u128(8) - 1) / 1) != 0)
        note_failure(r, "expected v_3(7) = 0 witness failed");
    r.detail = std::to_string(checked) +
               " (q, w) pairs; statement 2 checked under its divisibility hypothesis"
               " (necessary: v_3((2^3-1)/(2-1)) = 0)";
    r.pass = r.failures.empty();
    return r;
}

// criterion 8: random orbit inputs per case; the descended product must be an
// F_q polynomial and irreducible of the predicted degree
struct SamplePoint {
    u64 n;
    u64 p;
    u32 s;
    u128 q;
};

struct PreparedPoint {
    SamplePoint sp;
    CaseParams P;
    TowerPtr T;
};

std::vector<u64> divisor_list(u64 m) {
    std::vector<u64> out;
    for (u128 d : divisors(factorize(m))) out.push_back(static_cast<u64>(d));
    return out;
}

CriterionResult run_criterion_sampling() {
    CriterionResult r{8, "random orbit-product sampling", false, "", {}};
    std::mt19937_64 rng(0x20260815ull);
    auto pick = [&rng](u64 hi) { return std::uniform_int_distribution<u64>(0, hi - 1)(rng); };

    const std::map<CaseTag, std::vector<SamplePoint>> points = {
        {CaseTag::BaseSimple,
         {{15, 2, 4, 16}, {12, 13, 1, 13}, {24, 5, 2, 25}, {8, 3, 2, 9}, {10, 11, 1, 11},
          {9, 7, 1, 7}, {16, 5, 1, 5}, {27, 13, 1, 13}, {25, 11, 1, 11}}},
        {CaseTag::BaseTrinomial,
         {{8, 3, 1, 3}, {16, 3, 1, 3}, {32, 3, 1, 3}, {64, 3, 1, 3}, {8, 7, 1, 7},
          {24, 7, 1, 7}, {48, 7, 1, 7}, {8, 11, 1, 11}, {40, 11, 1, 11}, {16, 11, 1, 11}}},
        {CaseTag::WOddSimple,
         {{7, 2, 1, 2}, {49, 2, 1, 2}, {63, 2, 2, 4}, {31, 5, 1, 5}, {13, 3, 1, 3},
          {121, 3, 1, 3}, {19, 7, 1, 7}, {26, 3, 2, 9}, {147, 2, 2, 4}}},
        {CaseTag::WOdd8n,
         {{104, 3, 1, 3}, {208, 3, 1, 3}, {416, 3, 1, 3}, {88, 3, 1, 3}, {176, 3, 1, 3},
          {56, 11, 1, 11}}},
        {CaseTag::WTwo,
         {{3, 2, 1, 2}, {9, 2, 1, 2}, {27, 2, 1, 2}, {24, 5, 1, 5}, {81, 5, 1, 5},
          {20, 3, 2, 9}, {5, 2, 2, 4}, {21, 2, 3, 8}, {3, 5, 1, 5}}},
    };

    u64 total_samples = 0;
    for (const auto& [tag, list] : points) {
        std::vector<PreparedPoint> prepared;
        bool setup_ok = true;
        for (const SamplePoint& sp : list) {
            CaseInfo info = classify_case(sp.n, sp.q);
            if (info.tag != tag) {
                note_failure(r, qn_label(sp.q, sp.n) + ": classified as " +
                                    case_name(info.tag) + ", sample table expected " +
                                    case_name(tag));
                setup_ok = false;
                continue;
            }
            CaseParams P = derive_params(sp.n, sp.q, info);
            u64 tower_w = (tag == CaseTag::WOddSimple || tag == CaseTag::WOdd8n) ? P.w : 1;
            prepared.push_back({sp, P, build_tower(sp.p, sp.s, tower_w, kBound)});
        }
        if (!setup_ok || prepared.empty()) continue;

        u64 done = 0, attempts = 0;
        while (done < 100 && attempts < 40000 && r.failures.size() < 12) {
            ++attempts;
            const PreparedPoint& pp = prepared[pick(prepared.size())];
            const CaseParams& P = pp.P;
            const Tower& T = *pp.T;

            // family selection mirrors the construction loops of each case
            u64 t = 0, u = 0, orbit_len = 0, expect_deg = 0;
            Polynomial f_big;
            enum class Fam { Binomial, Trinomial, OrbitW, Orbit2W };
            std::vector<Fam> fams;
            switch (P.tag) {
            case CaseTag::BaseSimple: fams = {Fam::Binomial}; break;
            case CaseTag::BaseTrinomial: fams = {Fam::Binomial, Fam::Trinomial}; break;
            case CaseTag::WOddSimple: fams = {Fam::Binomial, Fam::OrbitW}; break;
            case CaseTag::WOdd8n:
                fams = {Fam::Binomial, Fam::Trinomial, Fam::OrbitW, Fam::Orbit2W};
                break;
            case CaseTag::WTwo: fams = {Fam::Binomial, Fam::Trinomial}; break;
            case CaseTag::Unsupported: continue;
            }
            Fam fam = fams[pick(fams.size())];

            const bool odd_only = P.tag == CaseTag::BaseTrinomial || P.tag == CaseTag::WOdd8n;
            if (fam == Fam::Binomial) {
                u64 src = P.tag == CaseTag::BaseSimple    ? P.m1
                          : P.tag == CaseTag::BaseTrinomial ? P.m2
                                                            : P.mw1;
                std::vector<u64> ts = divisor_list(src);
                t = ts[pick(ts.size())];
                if (odd_only && t % 2 == 0) continue;
                std::vector<u64> us;
                for (u64 c = 1; c <= static_cast<u64>(P.g1); ++c)
                    if (gcd128(c, t) == 1) us.push_back(c);
                if (us.empty()) continue;
                u = us[pick(us.size())];
                f_big = poly_binomial(T.big, t, T.big->pow(T.theta, u128(u) * P.l1));
                orbit_len = 1;
                expect_deg = t;
            } else if (fam == Fam::Trinomial) {
                std::vector<u64> ts = divisor_list(P.tag == CaseTag::WOdd8n ? P.m2w : P.m2);
                t = ts[pick(ts.size())];
                std::vector<u64> us;
                if (P.tag == CaseTag::BaseTrinomial) us = enum_R_t(t, P);
                else if (P.tag == CaseTag::WTwo) us = enum_R_t_w2(t, P);
                else {
                    if (P.mw1 == 0 || P.mw1 % t != 0) continue;
                    us = enum_R1_t(t, P);
                }
                if (us.empty()) continue;
                u = us[pick(us.size())];
                f_big = poly_binomial(T.big, t, T.big->pow(T.alpha, u128(u) * P.l2));
                orbit_len = 2;
                expect_deg = 2 * t;
            } else if (fam == Fam::OrbitW) {
                std::vector<u64> ts = divisor_list(P.tag == CaseTag::WOdd8n ? P.m2w : P.mw);
                t = ts[pick(ts.size())];
                if (P.tag == CaseTag::WOdd8n && t % 2 == 0) continue;
                std::vector<u64> us = enum_S_t(t, P);
                if (us.empty()) continue;
                u = us[pick(us.size())];
                f_big = poly_binomial(T.big, t, T.big->pow(T.delta, u128(u) * P.lw));
                orbit_len = P.w;
                expect_deg = P.w * t;
            } else {
                std::vector<u64> ts = divisor_list(P.m2w);
                t = ts[pick(ts.size())];
                std::vector<u64> us = enum_R2_t(t, P);
                if (us.empty()) continue;
                u = us[pick(us.size())];
                f_big = poly_binomial(T.big, t, T.big->pow(T.pi, u128(u) * P.l2w));
                orbit_len = 2 * P.w;
                expect_deg = 2 * P.w * t;
            }

            std::string label = std::string(case_name(P.tag)) + " " +
                                qn_label(P.q, P.n) + " t=" + std::to_string(t) +
                                " u=" + std::to_string(u);
            try {
                Polynomial desc = frobenius_orbit_product(f_big, T, orbit_len);
                if (desc.ctx != T.fq_map.fq_ctx())
                    note_failure(r, label + ": product not over the base-field context");
                else if (static_cast<u64>(poly_deg(desc)) != expect_deg)
                    note_failure(r, label + ": degree " + std::to_string(poly_deg(desc)) +
                                        ", expected " + std::to_string(expect_deg));
                else if (!is_irreducible(desc))
                    note_failure(r, label + ": descended product is reducible");
                ++done;
            } catch (const std::exception& e) {
                note_failure(r, label + ": exception: " + e.what());
                ++done;
            }
        }
        total_samples += done;
        if (done < 100)
            note_failure(r, std::string(case_name(tag)) + ": drew only " +
                                std::to_string(done) + " of 100 samples");
    }
    r.detail = std::to_string(total_samples) + " samples across 5 cases";
    r.pass = r.failures.empty();
    return r;
}

} // namespace

int main() {
    std::vector<CriterionResult> results;
    results.push_back(run_criterion_grid());
    results.push_back(run_criterion_table(2, "first count table reproduction", table_one_points()));
    results.push_back(run_criterion_table(3, "second count table reproduction", table_two_points()));
    results.push_back(run_criterion_example());
    results.push_back(run_criterion_counts());
    results.push_back(run_criterion_serret());
    results.push_back(run_criterion_lemma());
    results.push_back(run_criterion_sampling());

    int failed = 0;
    for (const CriterionResult& r : results) {
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  "
                  << r.title << " (" << r.detail << ")\n";
        for (const std::string& f : r.failures) std::cout << "    - " << f << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << "RESULT: " << (results.size() - failed) << "/" << results.size()
              << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
