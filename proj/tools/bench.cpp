#include "cyclofactor/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <cstdlib>

using namespace cyclofactor;

namespace {

const u128 kBound = u128(1) << 63;

double time_once(const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) best = std::min(best, time_once(body));
    return best;
}

} // namespace

int main(int argc, char** argv) {
    u64 n_max = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 150;

    std::printf("oracle per-coset kernel, serial vs parallel\n");
    struct Inst {
        u64 n, p;
        u32 s;
    };
    const Inst insts[] = {{225, 2, 1}, {247, 2, 1}, {255, 2, 1}, {233, 2, 1}};
    for (const Inst& in : insts) {
        u128 q = checked_pow(in.p, in.s);
        Factorization serial, parallel;
        double ts = best_of(3, [&] { serial = oracle_factor(in.n, q, kBound, false); });
        double tp = best_of(3, [&] { parallel = oracle_factor(in.n, q, kBound, true); });
        bool same = factorizations_match(serial, parallel);
        std::printf("  n=%-4llu q=%-3llu factors=%-3llu serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n",
                    (unsigned long long)in.n, (unsigned long long)q,
                    (unsigned long long)serial.total, ts, tp, ts / tp,
                    same ? "identical" : "OUTPUT MISMATCH");
        if (!same) return 1;
    }

    std::printf("grid sweep kernel, serial vs parallel, n <= %llu\n", (unsigned long long)n_max);
    std::vector<GridJob> qs;
    for (u64 p : {2, 3, 5, 7}) qs.push_back(GridJob{0, p, 1, p});
    qs.push_back(GridJob{0, 2, 2, 4});
    qs.push_back(GridJob{0, 3, 2, 9});
    std::vector<GridJob> jobs = make_grid(qs, n_max, true);
    std::vector<GridRow> rs, rp;
    double ts = best_of(2, [&] { rs = run_grid_serial(jobs, kBound, true); });
    double tp = best_of(2, [&] { rp = run_grid_parallel(jobs, kBound, true); });
    bool same = rs.size() == rp.size();
    for (size_t i = 0; same && i < rs.size(); ++i)
        same = rs[i].status == rp[i].status && rs[i].total == rp[i].total &&
               rs[i].oracle_match == rp[i].oracle_match;
    std::printf("  jobs=%zu serial %8.1f ms   parallel %8.1f ms   x%.2f   %s\n", jobs.size(), ts,
                tp, ts / tp, same ? "identical" : "OUTPUT MISMATCH");
    return same ? 0 : 1;
}
