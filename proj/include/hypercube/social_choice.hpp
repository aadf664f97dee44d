#pragma once

#include <vector>

#include "hypercube/boolean_function.hpp"
#include "hypercube/fourier.hpp"
#include "hypercube/report.hpp"

// Structure theorems for voting rules: the affine dichotomy, the
// dictator-distance bound, the sharp lower bound on the largest influence,
// and greedy coalition building for monotone rules.
namespace hypercube {

enum class AffineClass { constant_plus, constant_minus, dictator, anti_dictator, not_affine };

struct AffineResult {
    AffineClass kind = AffineClass::not_affine;
    int coordinate = 0;  // set for (anti-)dictators
};

// A +/-1 function whose spectrum lives on levels 0 and 1 is a constant or a
// (possibly negated) single coordinate; classification is bit-exact.
AffineResult affine_classify(const BooleanFunction& f);

// Distance from f to its best dictator approximation, against the explicit
// constant 731 = 2 + 3^6: ||f - fhat({i}) x_i||_2^2 <= 731 (1 - W1).
inline constexpr double kDictatorDistanceConstant = 731.0;

struct FknResult {
    double level1_weight = 0.0;   // W1
    int best_coordinate = 0;      // largest |fhat({i})|, lowest index on ties
    double distance = 0.0;        // ||f - fhat({i}) x_i||_2^2
    double bound = 0.0;           // 731 * (1 - W1)
    bool pass = false;
};
FknResult fkn_check(const BooleanFunction& f, double tol = 1e-9);

// max_i I_i >= (2e)^-4 * exp(-12 I(f) / Var(f)); natural logs.  The constant
// input case has Var = 0 and is rejected.
Report kkl_intermediate_check(const BooleanFunction& f, double tol = 1e-9);

// Empirical sharpness ratio max_i I_i * n / (ln(n) * Var(f)); reported only,
// never asserted against a constant.  Needs n >= 2 and a nonconstant f.
double kkl_ratio(const BooleanFunction& f);

struct CoalitionStep {
    int coordinate = 0;        // original numbering
    double max_influence = 0.0;
    double expectation_after = 0.0;
};

struct CoalitionTrace {
    std::vector<CoalitionStep> steps;
    std::vector<int> coalition;  // coordinates fixed, in order chosen
    double final_expectation = 0.0;
    int direction = 1;
    double target = 0.0;
};

// Greedy bribery of a monotone rule: repeatedly fix the currently most
// influential coordinate to `direction` until |E[f]| reaches the target.
// Each step is validated against the exact identity
//   E[f restricted] = E[f] + max_i I_i(f)
// in integer arithmetic (the -1 direction runs on -f(-x) and maps back).
// Preconditions: f monotone, target in (0,1), direction in {-1,+1}, and
// direction * E[f] >= -target; violations throw std::invalid_argument.
CoalitionTrace greedy_coalition(const BooleanFunction& f, double target = 0.99,
                                int direction = 1);

}  // namespace hypercube
