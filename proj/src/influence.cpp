#include "hypercube/influence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypercube {

namespace {
void check_coordinate(int i, int n) {
    if (i < 1 || i > n)
        throw std::out_of_range("coordinate " + std::to_string(i) +
                                " outside [1, " + std::to_string(n) + "]");
}
}

RealFunction derivative(const RealFunction& f, int i) {
    check_coordinate(i, f.arity());
    const point_index e = point_index(1) << (i - 1);
    RealFunction d(f.arity());
    for (point_index x = 0; x < f.size(); ++x)
        d[x] = (f[x & ~e] - f[x | e]) / 2.0;  // x_i=+1 clears the bit
    return d;
}

std::uint64_t pivot_pair_count(const BooleanFunction& f, int i) {
    check_coordinate(i, f.arity());
    const point_index e = point_index(1) << (i - 1);
    std::uint64_t pairs = 0;
    for (point_index x = 0; x < f.size(); ++x)
        if (!(x & e) && f.bit(x) != f.bit(x | e)) ++pairs;
    return pairs;
}

double influence_pivot(const BooleanFunction& f, int i) {
    // exact: numerator <= 2^(n-1), denominator a power of two
    return std::ldexp(double(pivot_pair_count(f, i)), -(f.arity() - 1));
}

double influence_spectral(const Spectrum& s, int i) {
    check_coordinate(i, s.n);
    const subset_mask e = subset_mask(1) << (i - 1);
    double acc = 0.0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        if (m & e) acc += s.coeffs[m] * s.coeffs[m];
    return acc;
}

InfluenceProfile influence_profile(const BooleanFunction& f, InfluenceMethod method) {
    if (method == InfluenceMethod::spectral) return influence_profile(transform(f));
    InfluenceProfile p;
    p.method = InfluenceMethod::pivot_count;
    p.per_coordinate.resize(std::size_t(f.arity()));
    for (int i = 1; i <= f.arity(); ++i)
        p.per_coordinate[std::size_t(i - 1)] = influence_pivot(f, i);
    for (double v : p.per_coordinate) p.total += v;
    return p;
}

InfluenceProfile influence_profile(const Spectrum& s) {
    InfluenceProfile p;
    p.method = InfluenceMethod::spectral;
    p.per_coordinate.resize(std::size_t(s.n));
    for (int i = 1; i <= s.n; ++i)
        p.per_coordinate[std::size_t(i - 1)] = influence_spectral(s, i);
    p.total = total_influence(s);
    return p;
}

Report monotone_influence_check(const BooleanFunction& f) {
    if (auto v = find_monotonicity_violation(f))
        throw std::invalid_argument(
            "function is not monotone: raising coordinate " +
            std::to_string(v->coordinate) + " at point " + std::to_string(v->point) +
            " lowers the value");

    Report r("monotone-influence");
    Spectrum s = transform(f);
    auto pivots = influence_profile(f, InfluenceMethod::pivot_count);

    auto coords = nlohmann::ordered_json::array();
    double max_dev = 0.0;
    double level1_sum = 0.0;
    for (int i = 1; i <= f.arity(); ++i) {
        double pivot = pivots.per_coordinate[std::size_t(i - 1)];
        double coeff = s.coeffs[subset_mask(1) << (i - 1)];
        coords.push_back(pivot);
        level1_sum += coeff;
        max_dev = std::max(max_dev, std::fabs(pivot - coeff));
        r.check_exact("influence_equals_level1_coeff_" + std::to_string(i), pivot, coeff);
    }
    r.add_quantity("per_coordinate_influence", coords);
    r.add_quantity("total_influence", pivots.total);
    r.add_quantity("max_deviation", max_dev);
    r.check_exact("total_equals_level1_sum", pivots.total, level1_sum);
    return r;
}

namespace {
Report poincare_impl(const Spectrum& s, double tol) {
    Report r("poincare");
    double var = variance(s);
    double infl = total_influence(s);
    r.add_quantity("variance", var);
    r.add_quantity("total_influence", infl);
    r.set_config("tol", tol);
    r.check_le("variance_le_total_influence", var, infl, tol);
    // equality holds exactly when all weight above level 1 vanishes
    bool equality = std::fabs(infl - var) <= tol * std::max(1.0, std::fabs(infl));
    r.add_quantity("equality", equality);
    return r;
}
}

Report poincare_check(const RealFunction& f, double tol) {
    return poincare_impl(transform(f), tol);
}

Report poincare_check(const BooleanFunction& f, double tol) {
    return poincare_impl(transform(f), tol);
}

}  // namespace hypercube
