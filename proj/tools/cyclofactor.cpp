#include "cyclofactor/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <limits>
#include <iostream>

using namespace cyclofactor;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

u128 field_bound() {
    const char* env = std::getenv("CYCLOFACTOR_FIELD_BOUND");
    if (!env || !*env) return u128(1) << 63;
    return parse_u128(env);
}

ordered_json json_q(u128 q) {
    if (q <= std::numeric_limits<u64>::max()) return static_cast<u64>(q);
    return dec_string(q);
}

struct JobArgs {
    u64 p = 2;
    u32 s = 1;
    u64 n = 1;
    std::string format = "text";
    std::string engine = "explicit";
};

void add_common(CLI::App* cmd, JobArgs& a, bool with_engine) {
    cmd->add_option("--p", a.p, "field characteristic (prime)")->required();
    cmd->add_option("--s", a.s, "extension degree, q = p^s")->default_val(1);
    cmd->add_option("--n", a.n, "exponent of x^n - 1")->required();
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    if (with_engine)
        cmd->add_option("--engine", a.engine, "which factorization engine to run")
            ->check(CLI::IsMember({"explicit", "oracle", "both"}))
            ->default_val("explicit");
}

u128 make_q(const JobArgs& a) {
    if (!is_prime_u64(a.p)) throw invalid_input("--p must be prime");
    if (a.s == 0 || a.s > 64) throw invalid_input("--s must be in [1, 64]");
    return checked_pow(a.p, a.s);
}

ordered_json factorization_json(const JobArgs& a, const Factorization& fz, bool verified) {
    ordered_json j;
    j["p"] = a.p;
    j["s"] = a.s;
    j["q"] = json_q(fz.q);
    j["n"] = fz.n;
    j["case"] = case_name(fz.info.tag);
    j["w"] = fz.info.w;
    j["total"] = fz.total;
    ordered_json arr = ordered_json::array();
    for (const LabeledFactor& lf : fz.factors) {
        ordered_json f;
        f["degree"] = lf.degree;
        f["multiplicity"] = lf.multiplicity;
        f["source"] = source_name(lf.source);
        f["poly"] = poly_to_text(lf.poly);
        arr.push_back(std::move(f));
    }
    j["factors"] = std::move(arr);
    j["verified"] = verified;
    j["notes"] = fz.notes;
    return j;
}

void print_factorization_text(const Factorization& fz, bool verified) {
    std::cout << "x^" << fz.n << " - 1 over GF(" << dec_string(fz.q) << ")\n";
    std::cout << "case " << case_name(fz.info.tag) << ", w = " << fz.info.w
              << ", " << fz.total << " distinct irreducible factor"
              << (fz.total == 1 ? "" : "s") << "\n";
    for (const LabeledFactor& lf : fz.factors) {
        std::cout << "  " << poly_to_text(lf.poly);
        if (lf.multiplicity > 1) std::cout << "   ^" << lf.multiplicity;
        std::cout << "   [" << source_name(lf.source) << "]\n";
    }
    std::cout << "degree: count\n";
    for (const auto& [d, c] : fz.counts_by_degree) std::cout << "  " << d << ": " << c << "\n";
    for (const std::string& note : fz.notes) std::cout << "note: " << note << "\n";
    std::cout << (verified ? "VERIFIED" : "VERIFICATION FAILED") << "\n";
}

int emit_factorization(const JobArgs& a, const Factorization& fz) {
    VerificationReport rep = verify_factorization(fz);
    if (a.format == "json") {
        std::cout << factorization_json(a, fz, rep.accepted()).dump(2) << "\n";
    } else {
        print_factorization_text(fz, rep.accepted());
        if (!rep.accepted())
            for (const std::string& s : rep.notes) std::cout << "check failed: " << s << "\n";
    }
    return rep.accepted() ? kExitOk : kExitVerification;
}

int run_factor(const JobArgs& a) {
    u128 q = make_q(a);
    u128 bound = field_bound();
    Factorization fz = a.engine == "oracle" ? oracle_factor(a.n, q, bound) : factor(a.n, q, bound);
    if (a.engine == "both") {
        Factorization of = oracle_factor(a.n, q, bound);
        if (!factorizations_match(fz, of)) {
            std::cout << "engines disagree\n";
            return kExitVerification;
        }
        fz.notes.push_back("oracle comparison: multisets match");
    }
    return emit_factorization(a, fz);
}

int run_count(const JobArgs& a) {
    u128 q = make_q(a);
    CountResult cr = count_factors(a.n, q);
    if (a.format == "json") {
        ordered_json j;
        j["p"] = a.p;
        j["s"] = a.s;
        j["q"] = json_q(q);
        j["n"] = a.n;
        CaseInfo info = classify_case(a.n, q);
        j["case"] = case_name(info.tag);
        j["w"] = info.w;
        j["total"] = cr.total;
        ordered_json bd = ordered_json::object();
        for (const auto& [d, c] : cr.by_degree) bd[std::to_string(d)] = c;
        j["by_degree"] = std::move(bd);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << cr.total << "\n";
        for (const auto& [d, c] : cr.by_degree)
            std::cout << "  degree " << d << ": " << c << "\n";
    }
    return kExitOk;
}

int run_compare(const JobArgs& a) {
    u128 q = make_q(a);
    u128 bound = field_bound();
    Factorization ex = factor(a.n, q, bound);
    Factorization oc = oracle_factor(a.n, q, bound);
    // diff as multisets of (poly text, multiplicity)
    std::map<std::string, long long> diff;
    for (const LabeledFactor& lf : ex.factors) diff[poly_to_text(lf.poly)] += (long long)lf.multiplicity;
    for (const LabeledFactor& lf : oc.factors) diff[poly_to_text(lf.poly)] -= (long long)lf.multiplicity;
    bool clean = true;
    for (const auto& [text, delta] : diff) {
        if (delta == 0) continue;
        clean = false;
        std::cout << (delta > 0 ? "explicit only: " : "oracle only: ") << text
                  << " (x" << (delta > 0 ? delta : -delta) << ")\n";
    }
    if (a.format == "json") {
        ordered_json j;
        j["p"] = a.p;
        j["s"] = a.s;
        j["q"] = json_q(q);
        j["n"] = a.n;
        j["match"] = clean;
        j["explicit_total"] = ex.total;
        j["oracle_total"] = oc.total;
        std::cout << j.dump(2) << "\n";
    } else if (clean) {
        std::cout << "match: " << ex.total << " factors\n";
    }
    return clean ? kExitOk : kExitVerification;
}

struct SweepArgs {
    std::vector<std::string> qs;
    u64 n_max = 100;
    bool allow_char_power = false;
    bool serial = false;
    std::string format = "text";
};

int run_sweep(const SweepArgs& sa) {
    u128 bound = field_bound();
    std::vector<GridJob> q_list;
    for (const std::string& qtext : sa.qs) {
        u128 q = parse_u128(qtext);
        PrimePower pp = prime_power_split(q);
        q_list.push_back(GridJob{0, pp.p, pp.s, q});
    }
    std::vector<GridJob> jobs = make_grid(q_list, sa.n_max, sa.allow_char_power);
    std::vector<GridRow> rows =
        sa.serial ? run_grid_serial(jobs, bound, true) : run_grid_parallel(jobs, bound, true);
    u64 pass = 0, fail = 0, skip = 0;
    ordered_json arr = ordered_json::array();
    for (const GridRow& r : rows) {
        const char* status = r.status == RowStatus::Pass   ? "pass"
                             : r.status == RowStatus::Fail ? "FAIL"
                                                           : "skip";
        if (r.status == RowStatus::Pass) ++pass;
        else if (r.status == RowStatus::Fail) ++fail;
        else ++skip;
        if (sa.format == "json") {
            ordered_json j;
            j["q"] = json_q(r.job.q);
            j["n"] = r.job.n;
            j["case"] = case_name(r.info.tag);
            j["w"] = r.info.w;
            j["total"] = r.total;
            j["status"] = status;
            j["verified"] = r.verified;
            j["oracle"] = r.oracle_match < 0 ? "skipped" : (r.oracle_match ? "match" : "mismatch");
            j["fallback"] = r.oracle_fallback;
            if (!r.error.empty()) j["error"] = r.error;
            arr.push_back(std::move(j));
        } else {
            std::cout << status << " q=" << dec_string(r.job.q) << " n=" << r.job.n
                      << " case=" << case_name(r.info.tag) << " total=" << r.total;
            if (r.oracle_match >= 0)
                std::cout << " oracle=" << (r.oracle_match ? "match" : "MISMATCH");
            if (r.oracle_fallback) std::cout << " (fallback)";
            if (!r.error.empty()) std::cout << " [" << r.error << "]";
            std::cout << "\n";
        }
    }
    if (sa.format == "json") {
        ordered_json top;
        top["rows"] = std::move(arr);
        top["pass"] = pass;
        top["fail"] = fail;
        top["skip"] = skip;
        std::cout << top.dump(2) << "\n";
    } else {
        std::cout << "pass " << pass << ", fail " << fail << ", skip " << skip << "\n";
    }
    return fail == 0 ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"factor x^n - 1 into irreducibles over a small finite field"};
    app.require_subcommand(1);

    JobArgs fa, ca, oa, pa;
    SweepArgs sa;

    CLI::App* cmd_factor = app.add_subcommand("factor", "factor with the explicit engine");
    add_common(cmd_factor, fa, true);
    CLI::App* cmd_count = app.add_subcommand("count", "closed-form factor count only");
    add_common(cmd_count, ca, false);
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "factor with the cyclotomic-coset oracle");
    add_common(cmd_oracle, oa, false);
    CLI::App* cmd_compare = app.add_subcommand("compare", "diff explicit engine against the oracle");
    add_common(cmd_compare, pa, false);
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "run a grid of (n, q) jobs");
    cmd_sweep->add_option("--q", sa.qs, "prime powers, repeatable or comma separated")
        ->required()
        ->delimiter(',');
    cmd_sweep->add_option("--n-max", sa.n_max, "largest n")->default_val(100);
    cmd_sweep->add_flag("--allow-char-power", sa.allow_char_power,
                        "include n divisible by the characteristic");
    cmd_sweep->add_flag("--serial", sa.serial, "disable the parallel grid runner");
    cmd_sweep->add_option("--format", sa.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_factor->parsed()) return run_factor(fa);
        if (cmd_count->parsed()) return run_count(ca);
        if (cmd_oracle->parsed()) {
            oa.engine = "oracle";
            return run_factor(oa);
        }
        if (cmd_compare->parsed()) return run_compare(pa);
        if (cmd_sweep->parsed()) return run_sweep(sa);
    } catch (const bound_exceeded& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResource;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitInvalid;
}
