#pragma once

#include <vector>

#include "hypercube/boolean_function.hpp"
#include "hypercube/report.hpp"

// Walsh--Hadamard spectra.  Convention: the forward transform carries the
// 2^-n normalization, coeffs[S] = 2^-n * sum_x f(x) chi_S(x), so the spectrum
// of a +/-1 function is made of dyadic rationals and (for n <= 24) every
// coefficient, Parseval sum and influence below is exact in double
// arithmetic.  The inverse transform is the same butterfly without scaling.
namespace hypercube {

struct Spectrum {
    int n = 0;
    std::vector<double> coeffs;  // indexed by subset mask

    double at(subset_mask s) const { return coeffs.at(s); }
};

// In-place size-2^k sign-kernel butterfly: a[m] <- sum_i a[i] (-1)^pc(m&i).
void walsh_hadamard_inplace(std::vector<double>& a);

Spectrum transform(const RealFunction& f);
Spectrum transform(const BooleanFunction& f);
RealFunction inverse_transform(const Spectrum& s);

// <f, g> = E[f g] = sum_S fhat(S) ghat(S); arity mismatch throws.
double plancherel(const Spectrum& a, const Spectrum& b);

// Checks sum_S fhat(S)^2 == E[f^2]; the Boolean overload asserts the sum is
// bit-exactly 1 (dyadic arithmetic makes it exact for n <= 24).
Report parseval_check(const RealFunction& f, double tol = 1e-9);
Report parseval_check(const BooleanFunction& f);

double mean(const Spectrum& s);             // fhat(empty)
double variance(const Spectrum& s);         // sum over S != empty of fhat(S)^2
double covariance(const Spectrum& a, const Spectrum& b);

// Largest |S| with a coefficient above the zero threshold.  Boolean spectra
// are exact, so the default threshold and exact zero agree for them; the
// constant 0 function has degree 0.
int degree(const Spectrum& s, double zero_tol = 1e-12);

// Keep levels |S| <= d, zero the rest.
Spectrum truncate(const Spectrum& s, int d);

double level_weight(const Spectrum& s, int k);       // W^k = sum_{|S|=k} fhat(S)^2
std::vector<double> level_weights(const Spectrum& s);  // k = 0..n

// Total influence from the spectrum: I(f) = sum_S |S| fhat(S)^2.
double total_influence(const Spectrum& s);

}  // namespace hypercube
