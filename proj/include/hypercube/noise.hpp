#pragma once

#include <vector>

#include "hypercube/boolean_function.hpp"
#include "hypercube/fourier.hpp"
#include "hypercube/report.hpp"

// Noise operator T_rho and the small-degree inequalities built on it.
// All verifiers compare with a relative tolerance scaled by max(1, |rhs|).
namespace hypercube {

// (E |f|^p)^(1/p); p must be >= 1, p = infinity gives the max norm.
double lp_norm(const RealFunction& f, double p);

// Spectral action of T_rho: multiplies the level-k coefficients by rho^k.
// rho outside [-1, 1] is allowed (used to invert the operator).
Spectrum apply_noise(const Spectrum& s, double rho);
RealFunction apply_noise(const RealFunction& f, double rho);

// R(x) = prod_i (1 + rho x_i); nonnegative for |rho| <= 1, with
// Rhat(S) = rho^|S| and E[R] = 1.
RealFunction riesz_product(double rho, int n);

struct NoiseParams {
    double rho = 0.0;
    double p = 2.0;  // norm on the input side
    double q = 2.0;  // norm on the smoothed side, q >= p
};

// ||T_rho f||_4 <= ||f||_2 and ||T_rho f||_2 <= ||f||_{4/3}, both at
// rho = 1/sqrt(3), the endpoint allowed by the rho^2 <= (p-1)/(q-1) law.
NoiseParams hyper_preset_4_2();
NoiseParams hyper_preset_2_43();

// Fixed sweep of admissible (p, q, rho) cells: every p <= q pair from a small
// norm ladder at the endpoint rho, a damped rho, and a negative rho, plus the
// two presets and a q = infinity cell.  Always more than 50 cells.
std::vector<NoiseParams> hyper_grid();

// E[f^4] <= 9^d (E[f^2])^2 for d = degree(f).  At arity 1 the moment
// identities behind the base case (E[f^4] = a0^4 + a1^4 + 6 a0^2 a1^2 and
// E[f^2] = a0^2 + a1^2) are checked as well.
Report bonami_check(const RealFunction& f, double tol = 1e-9);
Report bonami_check(const BooleanFunction& f, double tol = 1e-9);

// ||f||_2 <= 3^d ||f||_1 for degree-d f.
Report one_norm_trick_check(const RealFunction& f, double tol = 1e-9);

// ||T_rho f||_q <= ||f||_p.  Requires q >= p and an admissible rho:
// rho^2 <= (p-1)/(q-1) (for p = q the condition is |rho| <= 1, for
// q = infinity it is rho = 0); inadmissible parameters throw.
Report hypercontractivity_check(const RealFunction& f, const NoiseParams& np,
                                double tol = 1e-9);

// ||f^{<=d}||_2^2 <= sqrt(3)^d ||f||_2 ||f||_{4/3}.
Report truncation_lemma_check(const RealFunction& f, int d, double tol = 1e-9);

}  // namespace hypercube
