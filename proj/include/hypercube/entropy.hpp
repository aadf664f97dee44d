#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercube/boolean_function.hpp"
#include "hypercube/fourier.hpp"
#include "hypercube/report.hpp"

// Spectral entropy quantities.  All logarithms here are base 2, with the
// usual 0 * log(1/0) = 0 convention; the squared coefficients of a unit-norm
// function form the probability distribution being measured.
namespace hypercube {

// Shannon entropy of {fhat(S)^2}; requires sum fhat^2 = 1 within 1e-9.
double fourier_entropy(const Spectrum& s);

// Min-entropy: -log2 of the largest squared coefficient.
double min_entropy(const Spectrum& s);

// Entropy of the level distribution {W^k}.
double level_entropy(const Spectrum& s);

struct EntropyReport {
    double entropy = 0.0;        // H
    double min_entropy = 0.0;    // H_inf
    double total_influence = 0.0;
    double efi_ratio = 0.0;      // H / I, 0 for constants
    double mefi_ratio = 0.0;     // H_inf / I, 0 for constants
    double level_entropy = 0.0;
};
EntropyReport efi_ratios(const BooleanFunction& f);

// Level-distribution entropy is at most 3 * I(f).
Report owz_level_bound_check(const BooleanFunction& f, double tol = 1e-9);

// I(f) >= 2 p log2(1/p) where p is the fraction of +1 outputs.
Report edge_isoperimetric_check(const BooleanFunction& f, double tol = 1e-9);

// Encoding subsets coordinate-by-coordinate over {0,1,!} gives
// H(f) <= log2(3) * (max(1, ceil(log2 n)) * I(f) + 1) for unit-norm f.
Report shannon_code_bound_check(const RealFunction& f, double tol = 1e-9);
Report shannon_code_bound_check(const BooleanFunction& f, double tol = 1e-9);

enum class SurveyMode { exhaustive, random, family };

struct SurveyOptions {
    int n = 2;
    SurveyMode mode = SurveyMode::exhaustive;
    std::uint64_t count = 1000;  // random mode only
    std::uint64_t seed = 0;
    int top_k = 10;
    int threads = 1;
    bool allow_large = false;  // permit exhaustive n = 5
};

struct SurveyEntry {
    std::uint64_t sequence = 0;  // enumeration or generation order
    std::string name;            // family mode only
    std::string table;           // truth-table bit string
    double entropy = 0.0;
    double min_entropy = 0.0;
    double total_influence = 0.0;
    double efi_ratio = 0.0;
    double mefi_ratio = 0.0;
};

struct SurveyResult {
    std::vector<SurveyEntry> top_efi;   // by efi_ratio desc, sequence asc
    std::vector<SurveyEntry> top_mefi;  // by mefi_ratio desc, sequence asc
    std::uint64_t evaluated = 0;
};

// Leaderboard of entropy/influence ratios.  Results are a deterministic
// function of the options alone: worker chunks are merged with the
// (ratio desc, sequence asc) order, so the thread count never changes the
// outcome, and random mode draws all tables up front from the seed.
SurveyResult efi_survey(const SurveyOptions& opts);

}  // namespace hypercube
