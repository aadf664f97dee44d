#include "hypercube/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "hypercube/influence.hpp"
#include "hypercube/io.hpp"
#include "hypercube/zoo.hpp"

namespace hypercube {

namespace {

void check_unit_norm(const Spectrum& s) {
    double sum = 0.0;
    for (double c : s.coeffs) sum += c * c;
    if (std::fabs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("spectrum is not unit norm: energy " +
                                    std::to_string(sum));
}

double plog(double p) { return p > 0.0 ? p * std::log2(1.0 / p) : 0.0; }

}  // namespace

double fourier_entropy(const Spectrum& s) {
    check_unit_norm(s);
    double h = 0.0;
    for (double c : s.coeffs) h += plog(c * c);
    return h;
}

double min_entropy(const Spectrum& s) {
    check_unit_norm(s);
    double largest = 0.0;
    for (double c : s.coeffs) largest = std::max(largest, c * c);
    return -std::log2(largest);
}

double level_entropy(const Spectrum& s) {
    check_unit_norm(s);
    double h = 0.0;
    for (double w : level_weights(s)) h += plog(w);
    return h;
}

EntropyReport efi_ratios(const BooleanFunction& f) {
    Spectrum s = transform(f);
    EntropyReport r;
    r.entropy = fourier_entropy(s);
    r.min_entropy = min_entropy(s);
    r.total_influence = total_influence(s);
    r.level_entropy = level_entropy(s);
    if (r.total_influence > 0.0) {  // constants have I = 0; ratios stay 0
        r.efi_ratio = r.entropy / r.total_influence;
        r.mefi_ratio = r.min_entropy / r.total_influence;
    }
    return r;
}

Report owz_level_bound_check(const BooleanFunction& f, double tol) {
    Report r("owz-level-bound");
    Spectrum s = transform(f);
    const double lhs = level_entropy(s);
    const double infl = total_influence(s);
    r.add_quantity("level_entropy", lhs);
    r.add_quantity("total_influence", infl);
    r.set_config("tol", tol);
    r.set_config("log_base", 2);
    r.check_le("level_entropy_le_3_influence", lhs, 3.0 * infl, tol);
    return r;
}

Report edge_isoperimetric_check(const BooleanFunction& f, double tol) {
    Report r("edge-isoperimetric");
    const double p =
        double(f.size() - f.count_minus()) / double(f.size());  // share of +1 outputs
    const double bound = p > 0.0 ? 2.0 * p * std::log2(1.0 / p) : 0.0;
    const double infl = influence_profile(f, InfluenceMethod::pivot_count).total;
    r.add_quantity("plus_fraction", p);
    r.add_quantity("total_influence", infl);
    r.add_quantity("bound", bound);
    r.set_config("tol", tol);
    r.set_config("log_base", 2);
    r.check_ge("influence_ge_isoperimetric_bound", infl, bound, tol);
    return r;
}

Report shannon_code_bound_check(const RealFunction& f, double tol) {
    Report r("shannon-code-bound");
    Spectrum s = transform(f);
    const double h = fourier_entropy(s);
    const double infl = total_influence(s);
    const int n = f.arity();
    // codeword block length: ceil(log2 n), at least 1 so coordinates remain
    // distinguishable from the terminator at n = 1
    const int block = std::max(1, n <= 1 ? 0 : int(std::bit_width(unsigned(n - 1))));
    const double bound = std::log2(3.0) * (double(block) * infl + 1.0);
    r.add_quantity("entropy", h);
    r.add_quantity("total_influence", infl);
    r.add_quantity("block_length", block);
    r.add_quantity("bound", bound);
    r.set_config("tol", tol);
    r.set_config("log_base", 2);
    r.check_le("entropy_le_code_bound", h, bound, tol);
    return r;
}

Report shannon_code_bound_check(const BooleanFunction& f, double tol) {
    return shannon_code_bound_check(to_real(f), tol);
}

namespace {

SurveyEntry make_entry(std::uint64_t sequence, const BooleanFunction& f,
                       const EntropyReport& e) {
    SurveyEntry out;
    out.sequence = sequence;
    out.table = table_bits(f);
    out.entropy = e.entropy;
    out.min_entropy = e.min_entropy;
    out.total_influence = e.total_influence;
    out.efi_ratio = e.efi_ratio;
    out.mefi_ratio = e.mefi_ratio;
    return out;
}

bool efi_before(const SurveyEntry& a, const SurveyEntry& b) {
    if (a.efi_ratio != b.efi_ratio) return a.efi_ratio > b.efi_ratio;
    return a.sequence < b.sequence;
}

bool mefi_before(const SurveyEntry& a, const SurveyEntry& b) {
    if (a.mefi_ratio != b.mefi_ratio) return a.mefi_ratio > b.mefi_ratio;
    return a.sequence < b.sequence;
}

void sort_and_trim(std::vector<SurveyEntry>& v,
                   bool (*before)(const SurveyEntry&, const SurveyEntry&),
                   std::size_t k) {
    std::sort(v.begin(), v.end(), before);
    if (v.size() > k) v.resize(k);
}

struct ChunkTops {
    std::vector<SurveyEntry> efi, mefi;
};

// Evaluate functions [begin, end) given a table maker; keeps local top lists.
template <typename MakeFn>
ChunkTops survey_chunk(std::uint64_t begin, std::uint64_t end, std::size_t k,
                       const MakeFn& make) {
    ChunkTops tops;
    for (std::uint64_t seq = begin; seq < end; ++seq) {
        BooleanFunction f = make(seq);
        SurveyEntry e = make_entry(seq, f, efi_ratios(f));
        tops.efi.push_back(e);
        tops.mefi.push_back(std::move(e));
        // keep the locals small without resorting every iteration
        if (tops.efi.size() >= 4 * k + 64) {
            sort_and_trim(tops.efi, efi_before, k);
            sort_and_trim(tops.mefi, mefi_before, k);
        }
    }
    sort_and_trim(tops.efi, efi_before, k);
    sort_and_trim(tops.mefi, mefi_before, k);
    return tops;
}

}  // namespace

SurveyResult efi_survey(const SurveyOptions& opts) {
    check_arity(opts.n);
    if (opts.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
    const std::size_t k = std::size_t(opts.top_k);
    const int threads = std::max(1, opts.threads);

    std::uint64_t total = 0;
    std::function<BooleanFunction(std::uint64_t)> make;

    std::vector<std::vector<std::uint64_t>> drawn;  // random mode tables
    std::vector<std::pair<std::string, BooleanFunction>> family;

    switch (opts.mode) {
        case SurveyMode::exhaustive: {
            const int cap = opts.allow_large ? 5 : 4;
            if (opts.n > cap)
                throw std::invalid_argument(
                    "exhaustive survey over n=" + std::to_string(opts.n) +
                    " would enumerate 2^" + std::to_string(1 << opts.n) +
                    " functions" + (opts.allow_large ? "" : " (pass allow_large for n=5)"));
            total = std::uint64_t(1) << (std::uint64_t(1) << opts.n);
            const int n = opts.n;
            make = [n](std::uint64_t seq) {
                return BooleanFunction::from_words(n, {seq});
            };
            break;
        }
        case SurveyMode::random: {
            if (opts.n < 1) throw std::invalid_argument("random survey needs n >= 1");
            total = opts.count;
            const std::size_t words = (std::size_t(1) << opts.n) > 64
                                          ? (std::size_t(1) << opts.n) / 64
                                          : 1;
            // draw every table up front so the outcome depends only on the
            // seed, not on the thread count
            std::mt19937_64 rng(opts.seed);
            drawn.resize(total);
            for (auto& t : drawn) {
                t.resize(words);
                for (auto& w : t) w = rng();
            }
            const int n = opts.n;
            const auto* tables = &drawn;
            make = [n, tables](std::uint64_t seq) {
                return BooleanFunction::from_words(n, (*tables)[seq]);
            };
            break;
        }
        case SurveyMode::family: {
            if (opts.n < 1) throw std::invalid_argument("family survey needs n >= 1");
            for (int i = 1; i <= opts.n; ++i)
                family.emplace_back("dictator_" + std::to_string(i),
                                    zoo::dictator(opts.n, i));
            family.emplace_back("parity_all",
                                zoo::parity(opts.n, (subset_mask(1) << opts.n) - 1));
            family.emplace_back("or", zoo::or_function(opts.n));
            family.emplace_back("and", zoo::and_function(opts.n));
            if (opts.n % 2 == 1) family.emplace_back("majority", zoo::majority(opts.n));
            for (int w = 1; w <= std::min(opts.n, 24); ++w) {
                auto tp = zoo::bl_params(w);
                if (tp.n == opts.n)
                    family.emplace_back("tribes_" + std::to_string(w), zoo::tribes(tp));
            }
            total = family.size();
            const auto* fam = &family;
            make = [fam](std::uint64_t seq) { return (*fam)[seq].second; };
            break;
        }
    }

    std::vector<ChunkTops> parts;
    if (threads == 1 || total < 2048) {
        parts.push_back(survey_chunk(0, total, k, make));
    } else {
        const std::uint64_t per = (total + std::uint64_t(threads) - 1) / std::uint64_t(threads);
        parts.resize(std::size_t(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t begin = std::min(total, std::uint64_t(t) * per);
            const std::uint64_t end = std::min(total, begin + per);
            pool.emplace_back([&, t, begin, end] {
                parts[std::size_t(t)] = survey_chunk(begin, end, k, make);
            });
        }
        for (auto& th : pool) th.join();
    }

    SurveyResult result;
    result.evaluated = total;
    for (auto& p : parts) {
        result.top_efi.insert(result.top_efi.end(), p.efi.begin(), p.efi.end());
        result.top_mefi.insert(result.top_mefi.end(), p.mefi.begin(), p.mefi.end());
    }
    sort_and_trim(result.top_efi, efi_before, k);
    sort_and_trim(result.top_mefi, mefi_before, k);
    if (opts.mode == SurveyMode::family) {
        for (auto& e : result.top_efi) e.name = family[e.sequence].first;
        for (auto& e : result.top_mefi) e.name = family[e.sequence].first;
    }
    return result;
}

}  // namespace hypercube
