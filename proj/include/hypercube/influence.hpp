#pragma once

#include <cstdint>
#include <vector>

#include "hypercube/boolean_function.hpp"
#include "hypercube/fourier.hpp"
#include "hypercube/report.hpp"

namespace hypercube {

// Discrete derivative D_i f(x) = (f(x with x_i=+1) - f(x with x_i=-1)) / 2,
// constant along coordinate i.  For +/-1 functions its values lie in
// {-1, 0, 1} and D_i f(x) != 0 exactly when i is pivotal at x.
RealFunction derivative(const RealFunction& f, int i);

// Number of unordered edges {x, x^i} along coordinate i where f changes.
// I_i(f) = pivot_pair_count / 2^(n-1), an exact dyadic rational.
std::uint64_t pivot_pair_count(const BooleanFunction& f, int i);

double influence_pivot(const BooleanFunction& f, int i);
double influence_spectral(const Spectrum& s, int i);  // sum over S containing i

enum class InfluenceMethod { pivot_count, spectral };

struct InfluenceProfile {
    std::vector<double> per_coordinate;  // index i-1 holds I_i
    double total = 0.0;
    InfluenceMethod method = InfluenceMethod::pivot_count;
};

InfluenceProfile influence_profile(const BooleanFunction& f, InfluenceMethod method);
InfluenceProfile influence_profile(const Spectrum& s);

// For monotone f, I_i(f) equals the level-1 coefficient fhat({i}); both sides
// are dyadic so the check is bit-exact.  Throws std::invalid_argument naming
// a violating edge if f is not monotone.
Report monotone_influence_check(const BooleanFunction& f);

// Discrete Poincare inequality Var(f) <= I(f); reports whether equality holds
// (it does exactly when the spectrum lives on levels 0 and 1).
Report poincare_check(const RealFunction& f, double tol = 1e-9);
Report poincare_check(const BooleanFunction& f, double tol = 1e-9);

}  // namespace hypercube
