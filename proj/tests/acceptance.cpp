// Acceptance gate: each criterion prints exactly one [PASS]/[FAIL] line and
// the process exits nonzero if any of them failed.  argv[1] names the
// installed CLI binary, used by the determinism criterion's smoke runs.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypercube/cli_app.hpp"
#include "hypercube/entropy.hpp"
#include "hypercube/fourier.hpp"
#include "hypercube/influence.hpp"
#include "hypercube/io.hpp"
#include "hypercube/noise.hpp"
#include "hypercube/social_choice.hpp"
#include "hypercube/zoo.hpp"
#include "oracles.hpp"

using namespace hypercube;

namespace {

int g_failures = 0;

void report(int number, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << detail
              << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 3) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(prec);
    os << v;
    return os.str();
}

// every Boolean function of the given arity, as packed words
std::uint64_t table_count(int n) { return std::uint64_t(1) << (std::uint64_t(1) << n); }

struct NamedFunction {
    std::string name;
    BooleanFunction f;
};

// catalogue of named functions with arities up to max_n
std::vector<NamedFunction> zoo_catalogue(int max_n) {
    std::vector<NamedFunction> out;
    for (int n = 1; n <= max_n; ++n) {
        const std::string suffix = "_" + std::to_string(n);
        out.push_back({"dictator1" + suffix, zoo::dictator(n, 1)});
        if (n > 1) out.push_back({"dictator_last" + suffix, zoo::dictator(n, n)});
        out.push_back({"parity" + suffix, zoo::parity(n, (subset_mask(1) << n) - 1)});
        out.push_back({"or" + suffix, zoo::or_function(n)});
        out.push_back({"and" + suffix, zoo::and_function(n)});
        if (n % 2 == 1) out.push_back({"majority" + suffix, zoo::majority(n)});
        for (int w = 1; w <= 3; ++w) {
            auto tp = zoo::bl_params(w);
            if (tp.n == n)
                out.push_back({"tribes_w" + std::to_string(w) + suffix, zoo::tribes(tp)});
        }
    }
    return out;
}

// ---- criterion 1: transform vs direct-summation oracle -------------------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    double worst = 0.0;

    for (int n = 0; n <= 10; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            auto f = oracle::random_real(n, rng);
            auto fast = transform(f);
            auto slow = oracle::direct_transform(f);
            for (std::size_t m = 0; m < fast.coeffs.size(); ++m) {
                double rel = std::fabs(fast.coeffs[m] - slow.coeffs[m]) /
                             std::max(1.0, std::fabs(slow.coeffs[m]));
                worst = std::max(worst, rel);
            }
        }
    }

    std::uint64_t boolean_checked = 0;
    bool boolean_exact = true;
    for (int n = 0; n <= 3; ++n) {
        for (std::uint64_t bits = 0; bits < table_count(n); ++bits) {
            auto f = BooleanFunction::from_words(n, {bits});
            auto fast = transform(f);
            auto slow = oracle::direct_transform(f);
            for (std::size_t m = 0; m < fast.coeffs.size(); ++m)
                boolean_exact = boolean_exact && fast.coeffs[m] == slow.coeffs[m];
            ++boolean_checked;
        }
    }

    double elapsed = seconds_since(t0);
    bool ok = worst <= 1e-12 && boolean_exact && elapsed < 10.0;
    report(1, ok,
           "fast transform vs quadratic oracle, 1000 random real tables per n<=10 "
           "(max rel dev " + fmt(worst, 17) + ") and all " +
               std::to_string(boolean_checked) + " Boolean tables n<=3 " +
               (boolean_exact ? "bit-exact" : "NOT bit-exact") + "; " + fmt(elapsed) +
               " s (limit 10)");
}

// ---- criterion 2: closed-form spectra -------------------------------------

void criterion2() {
    bool or_and_exact = true;
    for (int n = 1; n <= 15; ++n) {
        auto so = transform(zoo::or_function(n));
        auto co = zoo::or_spectrum(n);
        auto sa = transform(zoo::and_function(n));
        auto ca = zoo::and_spectrum(n);
        for (std::size_t m = 0; m < so.coeffs.size(); ++m) {
            or_and_exact = or_and_exact && so.coeffs[m] == co.coeffs[m];
            or_and_exact = or_and_exact && sa.coeffs[m] == ca.coeffs[m];
        }
    }

    double maj_worst = 0.0;
    for (int n : {3, 5, 7, 9, 11}) {
        auto s = transform(zoo::majority(n));
        auto c = zoo::majority_spectrum(n);
        for (std::size_t m = 0; m < s.coeffs.size(); ++m)
            maj_worst = std::max(maj_worst, std::fabs(s.coeffs[m] - c.coeffs[m]));
    }

    // worked expansion on two coordinates: (1/2)(1 + x1 + x2 - x1 x2)
    auto w = transform(zoo::or_function(2));
    bool worked = w.coeffs[0] == 0.5 && w.coeffs[1] == 0.5 && w.coeffs[2] == 0.5 &&
                  w.coeffs[3] == -0.5;

    bool ok = or_and_exact && maj_worst <= 1e-12 && worked;
    report(2, ok,
           "OR/AND closed forms bit-exact for n<=15 (" +
               std::string(or_and_exact ? "yes" : "no") + "), majority n in {3..11} max dev " +
               fmt(maj_worst, 17) + " (limit 1e-12), worked 2-variable expansion " +
               (worked ? "reproduced" : "WRONG"));
}

// ---- criterion 3: influence duality ---------------------------------------

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();

    bool dual_exact = true;
    bool monotone_exact = true;
    std::uint64_t monotone_seen = 0;
    for (std::uint64_t bits = 0; bits < table_count(4); ++bits) {
        auto f = BooleanFunction::from_words(4, {bits});
        auto s = transform(f);
        for (int i = 1; i <= 4; ++i)
            dual_exact = dual_exact && influence_pivot(f, i) == influence_spectral(s, i);
        if (is_monotone(f)) {
            ++monotone_seen;
            for (int i = 1; i <= 4; ++i)
                monotone_exact = monotone_exact &&
                                 influence_pivot(f, i) == s.coeffs[subset_mask(1) << (i - 1)];
        }
    }

    bool zoo_exact = true;
    bool zoo_monotone_exact = true;
    auto catalogue = zoo_catalogue(15);
    for (const auto& nf : catalogue) {
        auto s = transform(nf.f);
        for (int i = 1; i <= nf.f.arity(); ++i)
            zoo_exact = zoo_exact && influence_pivot(nf.f, i) == influence_spectral(s, i);
        if (is_monotone(nf.f)) {
            for (int i = 1; i <= nf.f.arity(); ++i)
                zoo_monotone_exact =
                    zoo_monotone_exact &&
                    influence_pivot(nf.f, i) == s.coeffs[subset_mask(1) << (i - 1)];
        }
    }

    double elapsed = seconds_since(t0);
    bool ok = dual_exact && monotone_exact && zoo_exact && zoo_monotone_exact &&
              elapsed < 60.0;
    report(3, ok,
           "pivot == spectral influence on all 65536 tables at n=4 and " +
               std::to_string(catalogue.size()) + " catalogue functions n<=15 (" +
               (dual_exact && zoo_exact ? "exact" : "MISMATCH") +
               "); level-1 identity on " + std::to_string(monotone_seen) +
               " monotone tables " + (monotone_exact && zoo_monotone_exact ? "exact" : "BROKEN") +
               "; " + fmt(elapsed) + " s (limit 60)");
}

// ---- criterion 4: inequality suite ----------------------------------------

// all inequality checks for one real table; returns false on any violation
bool inequality_suite(const RealFunction& rf, const std::vector<NoiseParams>& grid,
                      std::uint64_t& cells) {
    const double tol = 1e-9;
    bool ok = poincare_check(rf, tol).all_pass();
    ok = ok && bonami_check(rf, tol).all_pass();
    ok = ok && one_norm_trick_check(rf, tol).all_pass();
    for (int d = 0; d <= rf.arity() && ok; ++d)
        ok = ok && truncation_lemma_check(rf, d, tol).all_pass();
    for (const auto& np : grid) {
        if (!ok) break;
        ok = ok && hypercontractivity_check(rf, np, tol).all_pass();
        ++cells;
    }
    return ok;
}

void criterion4() {
    auto grid = hyper_grid();  // already contains both presets
    const bool grid_big_enough = grid.size() >= 50;

    std::uint64_t checked = 0, cells = 0;
    bool ok = grid_big_enough;
    std::string first_bad;

    for (int n = 0; n <= 4 && ok; ++n) {
        for (std::uint64_t bits = 0; bits < table_count(n) && ok; ++bits) {
            auto f = BooleanFunction::from_words(n, {bits});
            if (!inequality_suite(to_real(f), grid, cells)) {
                ok = false;
                first_bad = "exhaustive n=" + std::to_string(n) + " table " + table_bits(f);
            }
            ++checked;
        }
    }

    std::mt19937_64 rng(4004);
    std::uint64_t random_checked = 0;
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        int n = 2 + int(rng() % 9);             // 2..10
        int d = 1 + int(rng() % std::min(n, 6));  // 1..min(n,6)
        auto rf = oracle::random_low_degree(n, d, rng);
        if (!inequality_suite(rf, grid, cells)) {
            ok = false;
            first_bad = "random poly n=" + std::to_string(n) + " d=" + std::to_string(d) +
                        " trial=" + std::to_string(trial);
        }
        ++random_checked;
    }

    report(4, ok,
           "Poincare/Bonami/1-norm/truncation/hypercontractivity (" +
               std::to_string(grid.size()) + "-cell grid incl. presets) on " +
               std::to_string(checked) + " exhaustive tables n<=4 and " +
               std::to_string(random_checked) + " random degree-d polynomials, " +
               std::to_string(cells) + " grid cells total: " +
               (ok ? "zero violations at 1e-9" : "violation at " + first_bad));
}

// ---- criterion 5: entropy suite --------------------------------------------

void criterion5() {
    const double tol = 1e-9;
    bool ok = true;
    std::string first_bad;
    double max_efi_n2 = 0.0, max_efi = 0.0, max_mefi = 0.0;
    std::uint64_t checked = 0;

    for (int n = 0; n <= 4 && ok; ++n) {
        for (std::uint64_t bits = 0; bits < table_count(n) && ok; ++bits) {
            auto f = BooleanFunction::from_words(n, {bits});
            auto e = efi_ratios(f);
            bool good = e.entropy <= double(n) + tol &&
                        e.total_influence <= double(n) + tol &&
                        owz_level_bound_check(f, tol).all_pass() &&
                        edge_isoperimetric_check(f, tol).all_pass() &&
                        shannon_code_bound_check(f, tol).all_pass();
            if (!good) {
                ok = false;
                first_bad = "n=" + std::to_string(n) + " table " + table_bits(f);
            }
            if (n == 2) max_efi_n2 = std::max(max_efi_n2, e.efi_ratio);
            max_efi = std::max(max_efi, e.efi_ratio);
            max_mefi = std::max(max_mefi, e.mefi_ratio);
            ++checked;
        }
    }

    bool sharp = max_efi_n2 == 2.0;
    ok = ok && sharp;
    report(5, ok,
           "level/isoperimetric/code bounds and H<=n, I<=n on " + std::to_string(checked) +
               " tables n<=4: " + (first_bad.empty() ? "zero violations" : "violation at " + first_bad) +
               "; exhaustive max EFI ratio at n=2 is " + fmt(max_efi_n2, 15) +
               (sharp ? " (== 2 as required)" : " (expected exactly 2)") +
               "; observed max EFI " + fmt(max_efi, 6) + ", max MEFI " + fmt(max_mefi, 6) +
               " across n<=4");
}

// ---- criterion 6: dictator distance and largest influence ------------------

void criterion6() {
    const double tol = 1e-9;
    bool ok = true;
    std::string first_bad;
    std::uint64_t fkn_checked = 0, kkl_checked = 0;

    auto run_pair = [&](const BooleanFunction& f, const std::string& label) {
        if (!fkn_check(f, tol).pass) {
            ok = false;
            first_bad = "fkn " + label;
            return;
        }
        ++fkn_checked;
        if (variance(transform(f)) > 0.0) {
            if (!kkl_intermediate_check(f, tol).all_pass()) {
                ok = false;
                first_bad = "kkl " + label;
                return;
            }
            ++kkl_checked;
        }
    };

    for (int n = 0; n <= 4 && ok; ++n)
        for (std::uint64_t bits = 0; bits < table_count(n) && ok; ++bits)
            run_pair(BooleanFunction::from_words(n, {bits}),
                     "n=" + std::to_string(n) + " bits=" + std::to_string(bits));

    auto catalogue = zoo_catalogue(15);
    for (const auto& nf : catalogue) {
        if (!ok) break;
        run_pair(nf.f, nf.name);
    }

    report(6, ok,
           "dictator-distance bound (C=731) on " + std::to_string(fkn_checked) +
               " functions and exponential influence bound on " + std::to_string(kkl_checked) +
               " nonconstant ones (exhaustive n<=4 + catalogue n<=15): " +
               (ok ? "zero violations" : "violation at " + first_bad));
}

// ---- criterion 7: greedy coalition traces -----------------------------------

// exact per-step recomputation of the expectation bookkeeping
bool trace_is_exact(const BooleanFunction& f, const CoalitionTrace& t, double target) {
    double expectation = std::ldexp(double(f.sum_of_values()), -f.arity());
    for (const auto& step : t.steps) {
        double next = expectation + step.max_influence * t.direction;
        // every quantity is dyadic with denominator 2^n, so == is meaningful
        if (next != step.expectation_after) return false;
        expectation = next;
    }
    if (expectation != t.final_expectation) return false;
    return t.direction * t.final_expectation >= target;
}

void criterion7() {
    bool ok = true;
    std::string first_bad;

    // worked traces
    {
        auto t = greedy_coalition(zoo::or_function(2), 0.99, 1);
        if (t.coalition != std::vector<int>{1} || t.final_expectation != 1.0) {
            ok = false;
            first_bad = "or_2 trace";
        }
        auto tb = greedy_coalition(zoo::tribes(zoo::bl_params(2)), 0.99, 1);
        if (ok && tb.coalition.size() != 2) {
            ok = false;
            first_bad = "tribes(2,2) coalition size";
        }
        for (int n = 1; n <= 7 && ok; ++n) {
            auto ta = greedy_coalition(zoo::and_function(n), 0.99, 1);
            if (ta.coalition.size() != std::size_t(n)) {
                ok = false;
                first_bad = "and_" + std::to_string(n) + " coalition size";
            }
        }
    }

    // random monotone functions, resampled until the target is reachable
    std::mt19937_64 rng(7007);
    int done = 0;
    while (done < 100 && ok) {
        int n = 2 + int(rng() % 11);  // 2..12
        auto f = oracle::random_monotone(n, rng);
        if (std::ldexp(double(f.sum_of_values()), -n) < -0.99) continue;
        auto t = greedy_coalition(f, 0.99, 1);
        if (!trace_is_exact(f, t, 0.99)) {
            ok = false;
            first_bad = "random monotone n=" + std::to_string(n) + " sample " +
                        std::to_string(done);
        }
        ++done;
    }

    // monotone catalogue functions whose starting expectation permits it
    int zoo_done = 0;
    for (const auto& nf : zoo_catalogue(12)) {
        if (!ok) break;
        if (!is_monotone(nf.f)) continue;
        if (std::ldexp(double(nf.f.sum_of_values()), -nf.f.arity()) < -0.99) continue;
        auto t = greedy_coalition(nf.f, 0.99, 1);
        if (!trace_is_exact(nf.f, t, 0.99)) {
            ok = false;
            first_bad = "catalogue " + nf.name;
        }
        ++zoo_done;
    }

    report(7, ok,
           "greedy coalitions: exact step identity on " + std::to_string(done) +
               " random monotone rules (n<=12) and " + std::to_string(zoo_done) +
               " monotone catalogue functions; OR_2 -> {1} at expectation 1, "
               "Tribes(2,2) -> 2 voters, AND_n -> n voters (n<=7)" +
               (ok ? "" : "; FAILED at " + first_bad));
}

// ---- criterion 8: tribes parameterization ----------------------------------

void criterion8() {
    bool sandwich = true;
    for (int w = 2; w <= 5; ++w) {
        auto tp = zoo::bl_params(w);
        long double q = 1.0L - std::ldexp(1.0L, -w);
        sandwich = sandwich && std::pow(q, tp.s) >= 0.5L && std::pow(q, tp.s + 1) < 0.5L;
    }

    auto tp3 = zoo::bl_params(3);
    auto prof = influence_profile(zoo::tribes(tp3), InfluenceMethod::pivot_count);
    const double target = std::log(double(tp3.n)) / double(tp3.n);
    double lo = prof.per_coordinate[0], hi = prof.per_coordinate[0];
    for (double v : prof.per_coordinate) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool band = lo >= target / 4.0 && hi <= target * 4.0;

    bool ok = sandwich && band;
    report(8, ok,
           "bl_params sandwich holds for w in {2..5} (" +
               std::string(sandwich ? "yes" : "no") + "); Tribes(w=3,s=5,n=15) influences in [" +
               fmt(lo, 6) + ", " + fmt(hi, 6) + "] vs ln(15)/15 = " + fmt(target, 6) +
               ", within factor 4 " + (band ? "(yes)" : "(NO)"));
}

// ---- criterion 9: determinism -----------------------------------------------

struct CliCapture {
    int code = 0;
    std::string out;
};

CliCapture capture(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("hypercube");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliCapture r;
    r.code = cli_main(int(argv.size()), argv.data(), out, err);
    r.out = out.str();
    return r;
}

bool run_binary(const std::string& command, std::string& out) {
    out.clear();
    FILE* p = popen((command + " 2>/dev/null").c_str(), "r");
    if (!p) return false;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    int status = pclose(p);
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

void criterion9(const std::string& binary) {
    // randomized command, fixed seed, run twice
    std::vector<std::string> survey_rand = {"survey", "--n",    "6",    "--mode", "random",
                                            "--count", "3000",  "--seed", "11",   "--json"};
    auto r1 = capture(survey_rand);
    auto r2 = capture(survey_rand);
    bool random_stable = r1.code == 0 && r1.out == r2.out && !r1.out.empty();

    // parallel commands under varying thread counts
    auto s1 = capture({"survey", "--n", "4", "--mode", "exhaustive", "--threads", "1", "--json"});
    auto s4 = capture({"survey", "--n", "4", "--mode", "exhaustive", "--threads", "4", "--json"});
    bool survey_stable = s1.code == 0 && s1.out == s4.out;

    auto v1 = capture({"verify", "poincare", "--all-n", "4", "--threads", "1", "--json"});
    auto v4 = capture({"verify", "poincare", "--all-n", "4", "--threads", "4", "--json"});
    bool verify_stable = v1.code == 0 && v1.out == v4.out;

    // the shipped binary reproduces the in-process bytes
    bool binary_ok = false;
    if (!binary.empty()) {
        std::string quoted = "'" + binary + "'";
        std::string b1, b2;
        bool ran = run_binary(quoted + " survey --n 4 --mode exhaustive --threads 4 --json", b1) &&
                   run_binary(quoted + " verify poincare --all-n 4 --threads 3 --json", b2);
        binary_ok = ran && b1 == s1.out && b2 == v1.out;
    }

    bool ok = random_stable && survey_stable && verify_stable && binary_ok;
    report(9, ok,
           std::string("byte-identical JSON reports: seeded random survey x2 (") +
               (random_stable ? "yes" : "NO") + "), exhaustive survey threads 1 vs 4 (" +
               (survey_stable ? "yes" : "NO") + "), verify sweep threads 1 vs 4 (" +
               (verify_stable ? "yes" : "NO") + "), shipped binary matches in-process bytes (" +
               (binary_ok ? "yes" : "NO") + ")");
}

}  // namespace

int main(int argc, char** argv) {
    std::string binary = argc > 1 ? argv[1] : "";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(binary);
    return g_failures == 0 ? 0 : 1;
}
