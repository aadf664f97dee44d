#include "hypercube/cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hypercube/entropy.hpp"
#include "hypercube/influence.hpp"
#include "hypercube/io.hpp"
#include "hypercube/noise.hpp"
#include "hypercube/social_choice.hpp"
#include "hypercube/zoo.hpp"

namespace hypercube {

namespace {

// Reports are the CLI's observable output, so nothing machine-dependent or
// run-dependent (thread counts, timings, paths outside the user's own
// arguments) may be serialized into them.

struct CommonOpts {
    bool json = false;
    double tol = 1e-9;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_flag("--json", c.json, "emit the report as JSON on stdout");
    cmd->add_option("--tol", c.tol, "relative tolerance for assertions")
        ->check(CLI::PositiveNumber);
}

int finish(const Report& r, const CommonOpts& c, std::ostream& out) {
    if (c.json)
        out << r.to_json().dump() << "\n";
    else
        r.print_text(out);
    return r.all_pass() ? 0 : 1;
}

long parse_long(const std::string& s, const std::string& what) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::runtime_error(what + ": expected an integer, got \"" + s + "\"");
    return v;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Loads either format; the Boolean part is set only for .bfn inputs.
struct LoadedFunction {
    RealFunction real;
    std::optional<BooleanFunction> boolean;
};

LoadedFunction load_function(const std::string& path) {
    LoadedFunction lf;
    if (ends_with(path, ".bfn")) {
        lf.boolean = read_bfn_file(path);
        lf.real = to_real(*lf.boolean);
    } else if (ends_with(path, ".spec")) {
        lf.real = inverse_transform(read_spec_file(path));
        lf.real.check_finite();
    } else {
        throw std::runtime_error("input must end in .bfn or .spec: " + path);
    }
    return lf;
}

// ---- zoo ----------------------------------------------------------------

int run_zoo(const std::string& name, const std::vector<std::string>& params,
            const std::string& out_path, const std::string& spec_path,
            const CommonOpts& c, std::ostream& out) {
    BooleanFunction f;
    std::optional<Spectrum> closed_form;
    std::optional<zoo::TribesParams> tribes_params;

    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::runtime_error("zoo " + name + " takes " + std::to_string(k) +
                                     " parameter(s), got " + std::to_string(params.size()));
    };

    if (name == "dict") {
        want(2);
        int n = int(parse_long(params[0], "n")), i = int(parse_long(params[1], "i"));
        f = zoo::dictator(n, i);
        closed_form = zoo::dictator_spectrum(n, i);
    } else if (name == "parity") {
        if (params.size() != 1 && params.size() != 2)
            throw std::runtime_error("zoo parity takes n and an optional mask");
        int n = int(parse_long(params[0], "n"));
        subset_mask mask = params.size() == 2
                               ? subset_mask(parse_long(params[1], "mask"))
                               : (subset_mask(1) << n) - 1;
        f = zoo::parity(n, mask);
        closed_form = zoo::parity_spectrum(n, mask);
    } else if (name == "maj") {
        want(1);
        int n = int(parse_long(params[0], "n"));
        f = zoo::majority(n);
        closed_form = zoo::majority_spectrum(n);
    } else if (name == "or") {
        want(1);
        int n = int(parse_long(params[0], "n"));
        f = zoo::or_function(n);
        closed_form = zoo::or_spectrum(n);
    } else if (name == "and") {
        want(1);
        int n = int(parse_long(params[0], "n"));
        f = zoo::and_function(n);
        closed_form = zoo::and_spectrum(n);
    } else if (name == "tribes") {
        want(1);
        auto tp = zoo::bl_params(int(parse_long(params[0], "w")));
        f = zoo::tribes(tp);
        tribes_params = tp;
    } else {
        throw std::runtime_error("unknown zoo member \"" + name +
                                 "\" (expected dict, parity, maj, or, and, tribes)");
    }

    write_bfn_file(out_path, f);
    if (!spec_path.empty())
        write_spec_file(spec_path, closed_form ? *closed_form : transform(f));

    Report r("zoo");
    r.set_input("name", name);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : params) arr.push_back(p);
    r.set_input("params", arr);
    r.add_quantity("n", f.arity());
    r.add_quantity("mean", std::ldexp(double(f.sum_of_values()), -f.arity()));
    if (f.arity() <= 12) r.add_quantity("table", table_bits(f));
    if (tribes_params) {
        r.add_quantity("tribe_width", tribes_params->w);
        r.add_quantity("tribe_count", tribes_params->s);
    }
    if (closed_form) {
        // the table and the closed-form spectrum must agree bit for bit
        Spectrum computed = transform(f);
        double max_dev = 0.0;
        bool equal = true;
        for (std::size_t m = 0; m < computed.coeffs.size(); ++m) {
            max_dev = std::max(max_dev,
                               std::fabs(computed.coeffs[m] - closed_form->coeffs[m]));
            equal = equal && computed.coeffs[m] == closed_form->coeffs[m];
        }
        r.add_quantity("closed_form_max_deviation", max_dev);
        if (name == "maj")
            r.check_le("closed_form_matches_transform", max_dev, 0.0, c.tol);
        else
            r.check_true("closed_form_matches_transform", equal, to_bfn_string(f));
    }
    return finish(r, c, out);
}

// ---- analyze ------------------------------------------------------------

int run_analyze(const std::string& in_path, const std::string& out_path,
                const CommonOpts& c, std::ostream& out) {
    BooleanFunction f = read_bfn_file(in_path);
    Spectrum s = transform(f);
    if (!out_path.empty()) write_spec_file(out_path, s);

    Report r("analyze");
    r.set_input("file", in_path);
    r.add_quantity("n", f.arity());
    r.add_quantity("mean", mean(s));
    r.add_quantity("variance", variance(s));
    r.add_quantity("degree", degree(s));
    auto lw = nlohmann::ordered_json::array();
    for (double w : level_weights(s)) lw.push_back(w);
    r.add_quantity("level_weights", lw);
    auto prof = influence_profile(f, InfluenceMethod::pivot_count);
    auto infl = nlohmann::ordered_json::array();
    for (double v : prof.per_coordinate) infl.push_back(v);
    r.add_quantity("influence", infl);
    r.add_quantity("total_influence", prof.total);

    double parseval = 0.0;
    for (double co : s.coeffs) parseval += co * co;
    r.check_exact("parseval_energy_is_one", parseval, 1.0);
    for (int i = 1; i <= f.arity(); ++i)
        r.check_exact("pivot_matches_spectral_influence_" + std::to_string(i),
                      prof.per_coordinate[std::size_t(i - 1)], influence_spectral(s, i));
    return finish(r, c, out);
}

// ---- entropy ------------------------------------------------------------

int run_entropy(const std::string& in_path, const CommonOpts& c, std::ostream& out) {
    LoadedFunction lf = load_function(in_path);
    Report r("entropy");
    r.set_input("file", in_path);
    r.set_config("tol", c.tol);
    r.set_config("log_base", 2);

    if (lf.boolean) {
        const BooleanFunction& f = *lf.boolean;
        EntropyReport e = efi_ratios(f);
        r.add_quantity("n", f.arity());
        r.add_quantity("entropy", e.entropy);
        r.add_quantity("min_entropy", e.min_entropy);
        r.add_quantity("total_influence", e.total_influence);
        r.add_quantity("efi_ratio", e.efi_ratio);
        r.add_quantity("mefi_ratio", e.mefi_ratio);
        r.add_quantity("level_entropy", e.level_entropy);
        r.check_le("entropy_le_n", e.entropy, double(f.arity()), c.tol);
        r.check_le("influence_le_n", e.total_influence, double(f.arity()), c.tol);
        r.merge_assertions(owz_level_bound_check(f, c.tol));
        r.merge_assertions(edge_isoperimetric_check(f, c.tol));
        r.merge_assertions(shannon_code_bound_check(f, c.tol));
    } else {
        Spectrum s = transform(lf.real);
        r.add_quantity("n", lf.real.arity());
        r.add_quantity("entropy", fourier_entropy(s));      // throws if not unit norm
        r.add_quantity("min_entropy", min_entropy(s));
        r.add_quantity("total_influence", total_influence(s));
        r.add_quantity("level_entropy", level_entropy(s));
        r.merge_assertions(shannon_code_bound_check(lf.real, c.tol));
    }
    return finish(r, c, out);
}

// ---- verify -------------------------------------------------------------

Report verify_one(const std::string& kind, const LoadedFunction& lf, int trunc_d,
                  const CommonOpts& c) {
    const RealFunction& rf = lf.real;
    if (kind == "bonami") return bonami_check(rf, c.tol);
    if (kind == "norm1") return one_norm_trick_check(rf, c.tol);
    if (kind == "poincare") return poincare_check(rf, c.tol);
    if (kind == "monotone") {
        if (!lf.boolean)
            throw std::runtime_error("verify monotone needs a .bfn input");
        return monotone_influence_check(*lf.boolean);
    }
    if (kind == "trunc") {
        if (trunc_d >= 0) return truncation_lemma_check(rf, trunc_d, c.tol);
        Report all("truncation");
        for (int d = 0; d <= rf.arity(); ++d)
            all.merge_assertions(truncation_lemma_check(rf, d, c.tol),
                                 "d" + std::to_string(d) + "_");
        return all;
    }
    if (kind == "hyper") {
        Report all("hypercontractivity");
        auto cell_name = [](const NoiseParams& np) {
            std::ostringstream os;
            os << "p" << np.p << "_q";
            if (std::isinf(np.q)) os << "inf";
            else os << np.q;
            os << "_rho" << np.rho << "_";
            return os.str();
        };
        for (const auto& np : hyper_grid())
            all.merge_assertions(hypercontractivity_check(rf, np, c.tol), cell_name(np));
        return all;
    }
    throw std::runtime_error("unknown verify kind \"" + kind +
                             "\" (expected bonami, hyper, norm1, trunc, poincare, monotone)");
}

// Run one kind over every arity-n function, in deterministic parallel chunks.
Report verify_exhaustive(const std::string& kind, int n, int threads, const CommonOpts& c) {
    if (n < 0 || n > 4)
        throw std::runtime_error("exhaustive verify supports n <= 4");
    const std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);

    // pass = nullopt means the precondition excluded the function (monotone)
    auto check = [&](std::uint64_t seq) -> std::optional<bool> {
        BooleanFunction f = BooleanFunction::from_words(n, {seq});
        LoadedFunction lf{to_real(f), f};
        if (kind == "monotone" && !is_monotone(f)) return std::nullopt;
        if (kind == "hyper") {
            // the grid is exercised per-file and in the test suites; the
            // exhaustive sweep sticks to the two presets for speed
            return hypercontractivity_check(lf.real, hyper_preset_4_2(), c.tol).all_pass() &&
                   hypercontractivity_check(lf.real, hyper_preset_2_43(), c.tol).all_pass();
        }
        return verify_one(kind, lf, -1, c).all_pass();
    };

    struct ChunkResult {
        std::uint64_t checked = 0, skipped = 0, violations = 0;
        std::uint64_t first_bad = std::numeric_limits<std::uint64_t>::max();
    };
    const int nthreads = std::max(1, threads);
    std::vector<ChunkResult> parts(static_cast<std::size_t>(nthreads));
    const std::uint64_t per = (total + std::uint64_t(nthreads) - 1) / std::uint64_t(nthreads);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        const std::uint64_t begin = std::min(total, std::uint64_t(t) * per);
        const std::uint64_t end = std::min(total, begin + per);
        pool.emplace_back([&, t, begin, end] {
            ChunkResult& cr = parts[std::size_t(t)];
            for (std::uint64_t seq = begin; seq < end; ++seq) {
                auto ok = check(seq);
                if (!ok) { ++cr.skipped; continue; }
                ++cr.checked;
                if (!*ok) {
                    ++cr.violations;
                    cr.first_bad = std::min(cr.first_bad, seq);
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    ChunkResult sum;
    for (const auto& p : parts) {
        sum.checked += p.checked;
        sum.skipped += p.skipped;
        sum.violations += p.violations;
        sum.first_bad = std::min(sum.first_bad, p.first_bad);
    }

    Report r("verify " + kind + " --all-n " + std::to_string(n));
    r.set_config("tol", c.tol);
    r.add_quantity("functions_checked", sum.checked);
    if (kind == "monotone") r.add_quantity("skipped_non_monotone", sum.skipped);
    r.add_quantity("violations", sum.violations);
    std::string witness;
    if (sum.violations > 0)
        witness = to_bfn_string(BooleanFunction::from_words(n, {sum.first_bad}));
    r.check_true("zero_violations", sum.violations == 0, witness);
    return r;
}

// ---- survey -------------------------------------------------------------

nlohmann::ordered_json survey_entry_json(const SurveyEntry& e, int rank, bool family) {
    nlohmann::ordered_json j;
    j["rank"] = rank;
    j["sequence"] = e.sequence;
    if (family) j["name"] = e.name;
    j["table"] = e.table;
    j["entropy"] = e.entropy;
    j["min_entropy"] = e.min_entropy;
    j["total_influence"] = e.total_influence;
    j["efi_ratio"] = e.efi_ratio;
    j["mefi_ratio"] = e.mefi_ratio;
    return j;
}

int run_survey(const SurveyOptions& opts, const std::string& out_path,
               const CommonOpts& c, std::ostream& out) {
    SurveyResult res = efi_survey(opts);
    const bool family = opts.mode == SurveyMode::family;

    Report r("survey");
    r.set_input("n", opts.n);
    r.set_input("mode", family ? "family"
                               : (opts.mode == SurveyMode::random ? "random" : "exhaustive"));
    if (opts.mode == SurveyMode::random) {
        r.set_input("count", opts.count);
        r.set_config("seed", opts.seed);
    }
    r.add_quantity("evaluated", res.evaluated);
    if (!res.top_efi.empty()) {
        r.add_quantity("max_efi_ratio", res.top_efi.front().efi_ratio);
        r.add_quantity("max_mefi_ratio", res.top_mefi.front().mefi_ratio);
    }
    auto efi = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < res.top_efi.size(); ++i)
        efi.push_back(survey_entry_json(res.top_efi[i], int(i) + 1, family));
    auto mefi = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < res.top_mefi.size(); ++i)
        mefi.push_back(survey_entry_json(res.top_mefi[i], int(i) + 1, family));
    r.add_quantity("top_efi", efi);
    r.add_quantity("top_mefi", mefi);

    if (!out_path.empty()) {
        std::ofstream lb(out_path);
        if (!lb) throw std::runtime_error("cannot open " + out_path + " for writing");
        for (std::size_t i = 0; i < res.top_efi.size(); ++i) {
            auto j = survey_entry_json(res.top_efi[i], int(i) + 1, family);
            j["metric"] = "efi";
            lb << j.dump() << "\n";
        }
        for (std::size_t i = 0; i < res.top_mefi.size(); ++i) {
            auto j = survey_entry_json(res.top_mefi[i], int(i) + 1, family);
            j["metric"] = "mefi";
            lb << j.dump() << "\n";
        }
    }
    return finish(r, c, out);
}

// ---- coalition ----------------------------------------------------------

int run_coalition(const std::string& in_path, double target, int direction,
                  const CommonOpts& c, std::ostream& out) {
    BooleanFunction f = read_bfn_file(in_path);
    CoalitionTrace trace = greedy_coalition(f, target, direction);

    Report r("coalition");
    r.set_input("file", in_path);
    r.set_input("target", target);
    r.set_input("direction", direction);
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : trace.steps) {
        nlohmann::ordered_json j;
        j["coordinate"] = s.coordinate;
        j["max_influence"] = s.max_influence;
        j["expectation_after"] = s.expectation_after;
        steps.push_back(std::move(j));
    }
    r.add_quantity("steps", steps);
    auto coal = nlohmann::ordered_json::array();
    for (int i : trace.coalition) coal.push_back(i);
    r.add_quantity("coalition", coal);
    r.add_quantity("coalition_size", trace.coalition.size());
    r.add_quantity("final_expectation", trace.final_expectation);

    r.check_ge("target_reached", double(direction) * trace.final_expectation, target, 0.0);
    bool monotone_progress = true;
    double prev = -2.0 * direction;
    for (const auto& s : trace.steps) {
        if (direction * s.expectation_after < direction * prev) monotone_progress = false;
        prev = s.expectation_after;
    }
    r.check_true("expectation_monotone_along_trace", monotone_progress);
    r.check_le("coalition_size_le_n", double(trace.coalition.size()), double(f.arity()), 0.0);
    return finish(r, c, out);
}

// ---- fkn / kkl ----------------------------------------------------------

std::string affine_name(const AffineResult& a) {
    switch (a.kind) {
        case AffineClass::constant_plus: return "constant_plus";
        case AffineClass::constant_minus: return "constant_minus";
        case AffineClass::dictator: return "dictator_" + std::to_string(a.coordinate);
        case AffineClass::anti_dictator: return "anti_dictator_" + std::to_string(a.coordinate);
        default: return "not_affine";
    }
}

int run_fkn(const std::string& in_path, const CommonOpts& c, std::ostream& out) {
    BooleanFunction f = read_bfn_file(in_path);
    FknResult res = fkn_check(f, c.tol);
    Report r("fkn");
    r.set_input("file", in_path);
    r.set_config("tol", c.tol);
    r.add_quantity("level1_weight", res.level1_weight);
    r.add_quantity("best_coordinate", res.best_coordinate);
    r.add_quantity("distance", res.distance);
    r.add_quantity("bound", res.bound);
    r.add_quantity("affine_class", affine_name(affine_classify(f)));
    r.check_le("distance_le_bound", res.distance, res.bound, c.tol);
    return finish(r, c, out);
}

int run_kkl(const std::string& in_path, const CommonOpts& c, std::ostream& out) {
    BooleanFunction f = read_bfn_file(in_path);
    Report r = kkl_intermediate_check(f, c.tol);
    r.set_input("file", in_path);
    if (f.arity() >= 2) r.add_quantity("sharpness_ratio", kkl_ratio(f));
    return finish(r, c, out);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fourier analysis of functions on the Hamming cube"};
    app.require_subcommand(1);

    // zoo
    CommonOpts zoo_c;
    std::string zoo_name, zoo_out, zoo_spec;
    std::vector<std::string> zoo_params;
    auto* zoo_cmd = app.add_subcommand("zoo", "construct a named function");
    zoo_cmd->add_option("name", zoo_name, "dict | parity | maj | or | and | tribes")
        ->required();
    zoo_cmd->add_option("params", zoo_params, "member parameters");
    zoo_cmd->add_option("-o,--out", zoo_out, "truth-table output (.bfn)")->required();
    zoo_cmd->add_option("--spec", zoo_spec, "also write the spectrum (.spec)");
    add_common(zoo_cmd, zoo_c);

    // analyze
    CommonOpts an_c;
    std::string an_in, an_out;
    auto* an_cmd = app.add_subcommand("analyze", "spectrum and influences of a table");
    an_cmd->add_option("file", an_in, "input .bfn")->required();
    an_cmd->add_option("-o,--out", an_out, "spectrum output (.spec)");
    add_common(an_cmd, an_c);

    // entropy
    CommonOpts en_c;
    std::string en_in;
    auto* en_cmd = app.add_subcommand("entropy", "spectral entropy quantities and bounds");
    en_cmd->add_option("file", en_in, "input .bfn or .spec")->required();
    add_common(en_cmd, en_c);

    // verify
    CommonOpts ve_c;
    std::string ve_kind, ve_in;
    int ve_all_n = -1, ve_d = -1, ve_threads = 1;
    double ve_rho = std::numeric_limits<double>::quiet_NaN(), ve_p = 0, ve_q = 0;
    auto* ve_cmd = app.add_subcommand("verify", "check an inequality on an input");
    ve_cmd->add_option("kind", ve_kind, "bonami | hyper | norm1 | trunc | poincare | monotone")
        ->required();
    ve_cmd->add_option("file", ve_in, "input .bfn or .spec");
    ve_cmd->add_option("--all-n", ve_all_n, "check every function of this arity instead");
    ve_cmd->add_option("--d", ve_d, "truncation degree (default: all)");
    ve_cmd->add_option("--rho", ve_rho, "noise rate for hyper");
    ve_cmd->add_option("--p", ve_p, "input norm for hyper");
    ve_cmd->add_option("--q", ve_q, "output norm for hyper");
    ve_cmd->add_option("--threads", ve_threads, "worker threads for --all-n");
    add_common(ve_cmd, ve_c);

    // survey
    CommonOpts su_c;
    SurveyOptions su_opts;
    std::string su_mode = "exhaustive", su_out;
    auto* su_cmd = app.add_subcommand("survey", "entropy/influence ratio leaderboard");
    su_cmd->add_option("--n", su_opts.n, "arity")->required();
    su_cmd->add_option("--mode", su_mode, "exhaustive | random | family");
    su_cmd->add_option("--count", su_opts.count, "samples in random mode");
    su_cmd->add_option("--seed", su_opts.seed, "random mode seed");
    su_cmd->add_option("--top", su_opts.top_k, "leaderboard length");
    su_cmd->add_option("--threads", su_opts.threads, "worker threads");
    su_cmd->add_flag("--allow-large", su_opts.allow_large, "permit exhaustive n=5");
    su_cmd->add_option("-o,--out", su_out, "leaderboard file (JSON lines)");
    add_common(su_cmd, su_c);

    // coalition
    CommonOpts co_c;
    std::string co_in;
    double co_target = 0.99;
    int co_direction = 1;
    auto* co_cmd = app.add_subcommand("coalition", "greedy influential coalition");
    co_cmd->add_option("file", co_in, "input .bfn (monotone)")->required();
    co_cmd->add_option("--target", co_target, "expectation to reach, in (0,1)");
    co_cmd->add_option("--direction", co_direction, "+1 or -1");
    add_common(co_cmd, co_c);

    // fkn
    CommonOpts fk_c;
    std::string fk_in;
    auto* fk_cmd = app.add_subcommand("fkn", "distance to the nearest dictator");
    fk_cmd->add_option("file", fk_in, "input .bfn")->required();
    add_common(fk_cmd, fk_c);

    // kkl
    CommonOpts kk_c;
    std::string kk_in;
    auto* kk_cmd = app.add_subcommand("kkl", "largest-influence lower bound");
    kk_cmd->add_option("file", kk_in, "input .bfn")->required();
    add_common(kk_cmd, kk_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*zoo_cmd) return run_zoo(zoo_name, zoo_params, zoo_out, zoo_spec, zoo_c, out);
        if (*an_cmd) return run_analyze(an_in, an_out, an_c, out);
        if (*en_cmd) return run_entropy(en_in, en_c, out);
        if (*ve_cmd) {
            if (ve_all_n >= 0)
                return finish(verify_exhaustive(ve_kind, ve_all_n, ve_threads, ve_c), ve_c, out);
            if (ve_in.empty())
                throw std::runtime_error("verify needs an input file or --all-n");
            LoadedFunction lf = load_function(ve_in);
            Report r = [&] {
                if (ve_kind == "hyper" && !std::isnan(ve_rho)) {
                    if (ve_p <= 0 || ve_q <= 0)
                        throw std::runtime_error("--rho needs --p and --q");
                    return hypercontractivity_check(lf.real, {ve_rho, ve_p, ve_q}, ve_c.tol);
                }
                return verify_one(ve_kind, lf, ve_d, ve_c);
            }();
            r.set_input("file", ve_in);
            return finish(r, ve_c, out);
        }
        if (*su_cmd) {
            if (su_mode == "exhaustive") su_opts.mode = SurveyMode::exhaustive;
            else if (su_mode == "random") su_opts.mode = SurveyMode::random;
            else if (su_mode == "family") su_opts.mode = SurveyMode::family;
            else throw std::runtime_error("unknown survey mode \"" + su_mode + "\"");
            return run_survey(su_opts, su_out, su_c, out);
        }
        if (*co_cmd) return run_coalition(co_in, co_target, co_direction, co_c, out);
        if (*fk_cmd) return run_fkn(fk_in, fk_c, out);
        if (*kk_cmd) return run_kkl(kk_in, kk_c, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}

}  // namespace hypercube
