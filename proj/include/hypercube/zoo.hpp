#pragma once

#include <vector>

#include "hypercube/boolean_function.hpp"
#include "hypercube/fourier.hpp"

// Named example functions and their closed-form spectra.
namespace hypercube::zoo {

BooleanFunction dictator(int n, int i);        // f(x) = x_i
BooleanFunction parity(int n, subset_mask s);  // chi_S
RealFunction indicator(int n, point_index a);  // 0/1 bump at a

// Majority of an odd number of voters; even n throws (no tie-break rule).
BooleanFunction majority(int n);

BooleanFunction or_function(int n);   // +1 unless every coordinate is -1
BooleanFunction and_function(int n);  // -1 unless every coordinate is +1

// f(x) = g(x restricted to coords); coords are distinct 1-based coordinates,
// listed in the order g reads them.
BooleanFunction junta(int n, const std::vector<int>& coords, const BooleanFunction& g);

// Ordered partition of {1,...,n} into disjoint nonempty blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;
};

// OR of block-wise ANDs: +1 exactly when some block is unanimously +1.
BooleanFunction tribes(int n, const Partition& p);

// Width-w tribes sized so the function is nearly unbiased: s is the largest
// tribe count with 1 - (1 - 2^-w)^s <= 1/2, over n = s*w coordinates in
// consecutive width-w blocks.
struct TribesParams {
    int w = 0;  // tribe width (block size)
    int s = 0;  // tribe count
    int n = 0;  // s * w
};
TribesParams bl_params(int w);
Partition uniform_partition(const TribesParams& tp);
BooleanFunction tribes(const TribesParams& tp);

// Closed-form spectra, cross-checked against the transform in tests.
Spectrum dictator_spectrum(int n, int i);
Spectrum parity_spectrum(int n, subset_mask s);
Spectrum indicator_spectrum(int n, point_index a);
Spectrum majority_spectrum(int n);  // odd n
Spectrum or_spectrum(int n);
Spectrum and_spectrum(int n);

}  // namespace hypercube::zoo
