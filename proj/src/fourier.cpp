#include "hypercube/fourier.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hypercube {

void walsh_hadamard_inplace(std::vector<double>& a) {
    const std::size_t n = a.size();
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t base = 0; base < n; base += h << 1)
            for (std::size_t j = base; j < base + h; ++j) {
                double x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
}

Spectrum transform(const RealFunction& f) {
    Spectrum s;
    s.n = f.arity();
    s.coeffs = f.values();
    walsh_hadamard_inplace(s.coeffs);
    const double scale = std::ldexp(1.0, -s.n);  // exact power of two
    for (double& c : s.coeffs) c *= scale;
    return s;
}

Spectrum transform(const BooleanFunction& f) {
    return transform(to_real(f));
}

RealFunction inverse_transform(const Spectrum& s) {
    RealFunction f(s.n, s.coeffs);
    walsh_hadamard_inplace(f.values());
    return f;
}

namespace {
void check_same_arity(int a, int b) {
    if (a != b)
        throw std::invalid_argument("arity mismatch: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}
}

double plancherel(const Spectrum& a, const Spectrum& b) {
    check_same_arity(a.n, b.n);
    double acc = 0.0;
    for (std::size_t m = 0; m < a.coeffs.size(); ++m)
        acc += a.coeffs[m] * b.coeffs[m];
    return acc;
}

Report parseval_check(const RealFunction& f, double tol) {
    Report r("parseval");
    Spectrum s = transform(f);
    double sum = 0.0;
    for (double c : s.coeffs) sum += c * c;
    double energy = 0.0;
    for (double v : f.values()) energy += v * v;
    energy /= double(f.size());
    r.add_quantity("coefficient_energy", sum);
    r.add_quantity("pointwise_energy", energy);
    r.set_config("tol", tol);
    r.check_close("energy_match", sum, energy, tol);
    return r;
}

Report parseval_check(const BooleanFunction& f) {
    Report r("parseval");
    Spectrum s = transform(f);
    double sum = 0.0;
    for (double c : s.coeffs) sum += c * c;
    r.add_quantity("coefficient_energy", sum);
    // All terms are dyadic with denominator 4^n, so the sum is exactly 1.
    r.check_exact("energy_is_one", sum, 1.0);
    return r;
}

double mean(const Spectrum& s) { return s.coeffs[0]; }

double variance(const Spectrum& s) {
    double acc = 0.0;
    for (std::size_t m = 1; m < s.coeffs.size(); ++m)
        acc += s.coeffs[m] * s.coeffs[m];
    return acc;
}

double covariance(const Spectrum& a, const Spectrum& b) {
    check_same_arity(a.n, b.n);
    double acc = 0.0;
    for (std::size_t m = 1; m < a.coeffs.size(); ++m)
        acc += a.coeffs[m] * b.coeffs[m];
    return acc;
}

int degree(const Spectrum& s, double zero_tol) {
    int d = 0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        if (std::fabs(s.coeffs[m]) > zero_tol)
            d = std::max(d, std::popcount(m));
    return d;
}

Spectrum truncate(const Spectrum& s, int d) {
    if (d < 0) throw std::invalid_argument("truncation degree must be >= 0");
    Spectrum t = s;
    for (std::size_t m = 0; m < t.coeffs.size(); ++m)
        if (std::popcount(m) > d) t.coeffs[m] = 0.0;
    return t;
}

double level_weight(const Spectrum& s, int k) {
    if (k < 0 || k > s.n)
        throw std::out_of_range("level " + std::to_string(k) +
                                " outside [0, " + std::to_string(s.n) + "]");
    double acc = 0.0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        if (std::popcount(m) == k) acc += s.coeffs[m] * s.coeffs[m];
    return acc;
}

std::vector<double> level_weights(const Spectrum& s) {
    std::vector<double> w(std::size_t(s.n) + 1, 0.0);
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        w[std::size_t(std::popcount(m))] += s.coeffs[m] * s.coeffs[m];
    return w;
}

double total_influence(const Spectrum& s) {
    double acc = 0.0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        acc += double(std::popcount(m)) * s.coeffs[m] * s.coeffs[m];
    return acc;
}

}  // namespace hypercube
