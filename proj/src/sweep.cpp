#include "cyclofactor/sweep.hpp"

namespace cyclofactor {

bool factorizations_match(const Factorization& a, const Factorization& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i) {
        const LabeledFactor& x = a.factors[i];
        const LabeledFactor& y = b.factors[i];
        if (x.multiplicity != y.multiplicity) return false;
        if (!(canonical_key(x.poly) == canonical_key(y.poly))) return false;
    }
    return true;
}

std::vector<GridJob> make_grid(const std::vector<GridJob>& q_list, u64 n_max, bool allow_char_power) {
    std::vector<GridJob> jobs;
    for (const GridJob& base : q_list) {
        for (u64 n = 1; n <= n_max; ++n) {
            if (!allow_char_power && n % base.p == 0) continue;
            GridJob j = base;
            j.n = n;
            jobs.push_back(j);
        }
    }
    return jobs;
}

namespace {

bool field_fits(u64 p, u64 ext_degree, u128 bound) {
    if (ext_degree > 64) return false;
    try {
        return checked_pow(p, ext_degree) <= bound;
    } catch (const overflow_error&) {
        return false;
    }
}

} // namespace

GridRow run_grid_job(const GridJob& job, u128 bound, bool check_oracle) {
    GridRow row;
    row.job = job;
    try {
        u64 n0 = job.n;
        while (n0 > 1 && n0 % job.p == 0) n0 /= job.p;
        row.info = classify_case(n0, job.q);
        Factorization fz = factor(job.n, job.q, bound);
        row.total = fz.total;
        row.oracle_fallback = fz.oracle_fallback;
        VerificationReport rep = verify_factorization(fz);
        row.verified = rep.accepted();
        if (!row.verified)
            for (const std::string& s : rep.notes) row.error += (row.error.empty() ? "" : "; ") + s;
        if (check_oracle && !fz.oracle_fallback) {
            u64 m = (n0 <= 1) ? 1 : static_cast<u64>(mult_order(job.q, n0));
            if (field_fits(job.p, u64(job.s) * m, bound)) {
                Factorization of = oracle_factor(job.n, job.q, bound);
                row.oracle_match = factorizations_match(fz, of) ? 1 : 0;
            }
        }
        row.status = (row.verified && row.oracle_match != 0) ? RowStatus::Pass : RowStatus::Fail;
    } catch (const bound_exceeded& e) {
        row.error = e.what();
        row.status = RowStatus::Skip;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.status = RowStatus::Fail;
    }
    return row;
}

std::vector<GridRow> run_grid_serial(const std::vector<GridJob>& jobs, u128 bound, bool check_oracle) {
    std::vector<GridRow> rows(jobs.size());
    for (size_t i = 0; i < jobs.size(); ++i) rows[i] = run_grid_job(jobs[i], bound, check_oracle);
    return rows;
}

std::vector<GridRow> run_grid_parallel(const std::vector<GridJob>& jobs, u128 bound, bool check_oracle) {
    std::vector<GridRow> rows(jobs.size());
#if defined(CYCLOFACTOR_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i)
        rows[static_cast<size_t>(i)] = run_grid_job(jobs[static_cast<size_t>(i)], bound, check_oracle);
#else
    for (size_t i = 0; i < jobs.size(); ++i) rows[i] = run_grid_job(jobs[i], bound, check_oracle);
#endif
    return rows;
}

} // namespace cyclofactor
