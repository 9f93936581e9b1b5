#pragma once

#include "cyclofactor/oracle.hpp"

namespace cyclofactor {

struct GridJob {
    u64 n = 0;
    u64 p = 0;
    u32 s = 1;
    u128 q = 0;
};

enum class RowStatus { Pass, Fail, Skip };

struct GridRow {
    GridJob job;
    CaseInfo info;
    u64 total = 0;
    bool verified = false;
    bool oracle_fallback = false;
    int oracle_match = -1; // -1 not checked (field bound), 0 mismatch, 1 match
    std::string error;
    RowStatus status = RowStatus::Skip;
};

// Multisets of (canonical key, multiplicity) agree. Both sides must be finalized.
bool factorizations_match(const Factorization& a, const Factorization& b);

// q-major, n-minor deterministic ordering. Skips gcd(n,q) > 1 points unless
// allow_char_power is set.
std::vector<GridJob> make_grid(const std::vector<GridJob>& q_list, u64 n_max, bool allow_char_power);

// One (n,q) job: explicit factor + self-verification + oracle comparison when
// the oracle extension also fits the bound. Exceptions land in row.error.
GridRow run_grid_job(const GridJob& job, u128 bound, bool check_oracle);

std::vector<GridRow> run_grid_serial(const std::vector<GridJob>& jobs, u128 bound, bool check_oracle);
std::vector<GridRow> run_grid_parallel(const std::vector<GridJob>& jobs, u128 bound, bool check_oracle);

} // namespace cyclofactor
