#include "hypercube/social_choice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hypercube/influence.hpp"

namespace hypercube {

AffineResult affine_classify(const BooleanFunction& f) {
    Spectrum s = transform(f);
    if (s.coeffs[0] == 1.0) return {AffineClass::constant_plus, 0};
    if (s.coeffs[0] == -1.0) return {AffineClass::constant_minus, 0};
    for (int i = 1; i <= f.arity(); ++i) {
        double c = s.coeffs[subset_mask(1) << (i - 1)];
        if (c == 1.0) return {AffineClass::dictator, i};
        if (c == -1.0) return {AffineClass::anti_dictator, i};
    }
    return {AffineClass::not_affine, 0};
}

FknResult fkn_check(const BooleanFunction& f, double tol) {
    Spectrum s = transform(f);
    FknResult r;
    r.level1_weight = level_weight(s, std::min(1, s.n));
    if (s.n == 0) r.level1_weight = 0.0;  // no coordinates at all

    double best = -1.0;
    for (int i = 1; i <= f.arity(); ++i) {
        double c = std::fabs(s.coeffs[subset_mask(1) << (i - 1)]);
        if (c > best) {  // strict: ties keep the lowest index
            best = c;
            r.best_coordinate = i;
        }
    }

    // squared distance to fhat({i}) x_i is the energy off that coefficient
    double dist = 0.0;
    const subset_mask best_mask =
        r.best_coordinate > 0 ? subset_mask(1) << (r.best_coordinate - 1) : ~subset_mask(0);
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        if (m != best_mask) dist += s.coeffs[m] * s.coeffs[m];
    r.distance = dist;
    r.bound = kDictatorDistanceConstant * (1.0 - r.level1_weight);
    r.pass = r.distance <= r.bound + tol * std::max(1.0, std::fabs(r.bound));
    return r;
}

Report kkl_intermediate_check(const BooleanFunction& f, double tol) {
    Spectrum s = transform(f);
    const double var = variance(s);
    if (var <= 0.0)
        throw std::invalid_argument("constant function: the influence bound needs Var > 0");

    Report r("kkl-intermediate");
    auto prof = influence_profile(f, InfluenceMethod::pivot_count);
    double max_infl = 0.0;
    for (double v : prof.per_coordinate) max_infl = std::max(max_infl, v);
    const double bound =
        std::pow(2.0 * std::exp(1.0), -4.0) * std::exp(-12.0 * prof.total / var);
    r.add_quantity("max_influence", max_infl);
    r.add_quantity("total_influence", prof.total);
    r.add_quantity("variance", var);
    r.add_quantity("bound", bound);
    r.set_config("tol", tol);
    r.set_config("log_base", "e");
    r.check_ge("max_influence_ge_exponential_bound", max_infl, bound, tol);
    return r;
}

double kkl_ratio(const BooleanFunction& f) {
    if (f.arity() < 2)
        throw std::invalid_argument("sharpness ratio needs n >= 2");
    Spectrum s = transform(f);
    const double var = variance(s);
    if (var <= 0.0)
        throw std::invalid_argument("constant function: sharpness ratio undefined");
    auto prof = influence_profile(f, InfluenceMethod::pivot_count);
    double max_infl = 0.0;
    for (double v : prof.per_coordinate) max_infl = std::max(max_infl, v);
    return max_infl * double(f.arity()) / (std::log(double(f.arity())) * var);
}

CoalitionTrace greedy_coalition(const BooleanFunction& f, double target, int direction) {
    if (!(target > 0.0 && target < 1.0))
        throw std::invalid_argument("target must lie in (0, 1)");
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("direction must be +1 or -1");
    if (auto v = find_monotonicity_violation(f))
        throw std::invalid_argument(
            "function is not monotone: raising coordinate " +
            std::to_string(v->coordinate) + " at point " + std::to_string(v->point) +
            " lowers the value");

    // Work on g = f for +1; for -1 on g(x) = -f(-x), which is monotone with
    // E[g] = -E[f], and fixing x_i = +1 in g is fixing x_i = -1 in f.
    BooleanFunction cur = direction == 1 ? f : negate_function(f);
    const double sign = double(direction);

    std::int64_t num = cur.sum_of_values();  // E = num / 2^m exactly
    int m = cur.arity();
    if (std::ldexp(double(num), -m) < -target)
        throw std::invalid_argument("target unreachable: expectation already " +
                                    std::to_string(sign * std::ldexp(double(num), -m)) +
                                    " against direction " + std::to_string(direction));

    CoalitionTrace trace;
    trace.direction = direction;
    trace.target = target;

    std::vector<int> original(static_cast<std::size_t>(m));  // current coordinate -> original
    for (int i = 0; i < m; ++i) original[std::size_t(i)] = i + 1;

    while (std::ldexp(double(num), -m) < target) {
        if (m == 0)
            throw std::logic_error("ran out of coordinates before reaching the target");

        int best = 1;
        std::uint64_t best_pairs = pivot_pair_count(cur, 1);
        for (int i = 2; i <= m; ++i) {
            std::uint64_t pairs = pivot_pair_count(cur, i);
            if (pairs > best_pairs) {  // ties keep the lowest original index
                best_pairs = pairs;
                best = i;
            }
        }

        BooleanFunction next = restrict(cur, best, 1);
        const std::int64_t next_num = next.sum_of_values();
        // E[next] = E[cur] + I_best(cur), cleared of denominators:
        // next_num / 2^(m-1) = num / 2^m + best_pairs / 2^(m-1)
        if (2 * next_num != num + 2 * std::int64_t(best_pairs))
            throw std::logic_error("greedy step broke the exact expectation identity");

        CoalitionStep step;
        step.coordinate = original[std::size_t(best - 1)];
        step.max_influence = std::ldexp(double(best_pairs), -(m - 1));
        step.expectation_after = sign * std::ldexp(double(next_num), -(m - 1));
        trace.steps.push_back(step);
        trace.coalition.push_back(step.coordinate);

        original.erase(original.begin() + (best - 1));
        cur = std::move(next);
        num = next_num;
        --m;
    }

    trace.final_expectation = sign * std::ldexp(double(num), -m);
    return trace;
}

}  // namespace hypercube
