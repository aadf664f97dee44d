#include "hypercube/zoo.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hypercube::zoo {

namespace {

void check_coordinate(int i, int n) {
    if (i < 1 || i > n)
        throw std::out_of_range("coordinate " + std::to_string(i) +
                                " outside [1, " + std::to_string(n) + "]");
}

Spectrum zero_spectrum(int n) {
    check_arity(n);
    Spectrum s;
    s.n = n;
    s.coeffs.assign(std::size_t(1) << n, 0.0);
    return s;
}

// Exact binomial coefficients; arguments stay small enough for uint64.
std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * std::uint64_t(n - k + j) / std::uint64_t(j);
    return r;
}

}  // namespace

BooleanFunction dictator(int n, int i) {
    check_arity(n);
    check_coordinate(i, n);
    BooleanFunction f(n);
    const point_index e = point_index(1) << (i - 1);
    for (point_index x = 0; x < f.size(); ++x)
        f.set_bit(x, (x & e) != 0);  // bit set means x_i = -1
    return f;
}

BooleanFunction parity(int n, subset_mask s) {
    check_arity(n);
    if (s >> n)
        throw std::out_of_range("subset mask " + std::to_string(s) +
                                " has bits beyond coordinate " + std::to_string(n));
    BooleanFunction f(n);
    for (point_index x = 0; x < f.size(); ++x)
        f.set_bit(x, std::popcount(s & x) & 1);
    return f;
}

RealFunction indicator(int n, point_index a) {
    check_arity(n);
    RealFunction f(n);
    if (a >= f.size())
        throw std::out_of_range("point " + std::to_string(a) +
                                " outside table of size " + std::to_string(f.size()));
    f[a] = 1.0;
    return f;
}

BooleanFunction majority(int n) {
    check_arity(n);
    if (n % 2 == 0)
        throw std::invalid_argument("majority needs an odd number of voters, got " +
                                    std::to_string(n));
    BooleanFunction f(n);
    for (point_index x = 0; x < f.size(); ++x)
        f.set_bit(x, 2 * std::popcount(x) > n);  // more -1 votes than +1
    return f;
}

BooleanFunction or_function(int n) {
    check_arity(n);
    if (n == 0) throw std::invalid_argument("or_function needs n >= 1");
    BooleanFunction f(n);
    f.set_bit(f.size() - 1, true);  // -1 only at the all--1 point
    return f;
}

BooleanFunction and_function(int n) {
    check_arity(n);
    if (n == 0) throw std::invalid_argument("and_function needs n >= 1");
    BooleanFunction f = BooleanFunction::constant(n, -1);
    f.set_bit(0, false);  // +1 only at the all-+1 point
    return f;
}

BooleanFunction junta(int n, const std::vector<int>& coords, const BooleanFunction& g) {
    check_arity(n);
    if (int(coords.size()) != g.arity())
        throw std::invalid_argument("junta needs one host coordinate per inner coordinate");
    subset_mask seen = 0;
    for (int c : coords) {
        check_coordinate(c, n);
        subset_mask bit = subset_mask(1) << (c - 1);
        if (seen & bit)
            throw std::invalid_argument("duplicate coordinate " + std::to_string(c));
        seen |= bit;
    }
    BooleanFunction f(n);
    for (point_index x = 0; x < f.size(); ++x) {
        point_index y = 0;
        for (std::size_t t = 0; t < coords.size(); ++t)
            y |= point_index((x >> (coords[t] - 1)) & 1) << t;
        f.set_bit(x, g.bit(y));
    }
    return f;
}

BooleanFunction tribes(int n, const Partition& p) {
    check_arity(n);
    if (n == 0) throw std::invalid_argument("tribes needs n >= 1");
    std::vector<point_index> masks;
    subset_mask seen = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) throw std::invalid_argument("empty block in partition");
        point_index m = 0;
        for (int c : block) {
            check_coordinate(c, n);
            point_index bit = point_index(1) << (c - 1);
            if (seen & bit)
                throw std::invalid_argument("coordinate " + std::to_string(c) +
                                            " appears in two blocks");
            seen |= bit;
            m |= bit;
        }
        masks.push_back(m);
    }
    if (seen != (point_index(1) << n) - 1)
        throw std::invalid_argument("partition does not cover every coordinate");

    BooleanFunction f(n);
    for (point_index x = 0; x < f.size(); ++x) {
        bool any_unanimous = false;
        for (point_index m : masks)
            if ((x & m) == 0) { any_unanimous = true; break; }
        f.set_bit(x, !any_unanimous);
    }
    return f;
}

TribesParams bl_params(int w) {
    if (w < 1 || w > 24)
        throw std::invalid_argument("tribe width must be in [1, 24], got " + std::to_string(w));
    // largest s with (1 - 2^-w)^s >= 1/2; never a tie since the power has an
    // odd numerator
    const long double q = 1.0L - std::ldexp(1.0L, -w);
    long double prod = q;
    int s = 1;
    while (prod * q >= 0.5L) {
        prod *= q;
        ++s;
    }
    return {w, s, w * s};
}

Partition uniform_partition(const TribesParams& tp) {
    Partition p;
    for (int b = 0; b < tp.s; ++b) {
        std::vector<int> block;
        for (int j = 1; j <= tp.w; ++j) block.push_back(b * tp.w + j);
        p.blocks.push_back(std::move(block));
    }
    return p;
}

BooleanFunction tribes(const TribesParams& tp) {
    return tribes(tp.n, uniform_partition(tp));
}

Spectrum dictator_spectrum(int n, int i) {
    check_coordinate(i, n);
    Spectrum s = zero_spectrum(n);
    s.coeffs[subset_mask(1) << (i - 1)] = 1.0;
    return s;
}

Spectrum parity_spectrum(int n, subset_mask mask) {
    Spectrum s = zero_spectrum(n);
    s.coeffs.at(mask) = 1.0;
    return s;
}

Spectrum indicator_spectrum(int n, point_index a) {
    Spectrum s = zero_spectrum(n);
    if (a >= s.coeffs.size())
        throw std::out_of_range("point " + std::to_string(a) +
                                " outside table of size " + std::to_string(s.coeffs.size()));
    const double scale = std::ldexp(1.0, -n);
    for (subset_mask m = 0; m < s.coeffs.size(); ++m)
        s.coeffs[m] = character_value(m, a) * scale;
    return s;
}

Spectrum majority_spectrum(int n) {
    if (n % 2 == 0 || n < 1)
        throw std::invalid_argument("majority spectrum needs odd n, got " + std::to_string(n));
    Spectrum s = zero_spectrum(n);
    // weight depends only on |S|, zero on even levels; on level 2k+1 it is
    // (-1)^k * C((n-1)/2, k) / C(n-1, 2k) * 2^(1-n) * C(n-1, (n-1)/2)
    std::vector<double> by_level(std::size_t(n) + 1, 0.0);
    const double central = double(binom(n - 1, (n - 1) / 2));
    for (int k = 0; 2 * k + 1 <= n; ++k) {
        double value = 2.0 * double(binom((n - 1) / 2, k)) * central /
                       (double(binom(n - 1, 2 * k)) * std::ldexp(1.0, n));
        by_level[std::size_t(2 * k + 1)] = (k % 2 == 0) ? value : -value;
    }
    for (subset_mask m = 0; m < s.coeffs.size(); ++m)
        s.coeffs[m] = by_level[std::size_t(std::popcount(m))];
    return s;
}

Spectrum or_spectrum(int n) {
    if (n < 1) throw std::invalid_argument("or_spectrum needs n >= 1");
    Spectrum s = zero_spectrum(n);
    const double unit = std::ldexp(1.0, 1 - n);  // 1 / 2^(n-1)
    s.coeffs[0] = 1.0 - unit;
    for (subset_mask m = 1; m < s.coeffs.size(); ++m)
        s.coeffs[m] = (std::popcount(m) % 2 == 1) ? unit : -unit;
    return s;
}

Spectrum and_spectrum(int n) {
    if (n < 1) throw std::invalid_argument("and_spectrum needs n >= 1");
    Spectrum s = zero_spectrum(n);
    const double unit = std::ldexp(1.0, 1 - n);
    s.coeffs[0] = -1.0 + unit;
    for (subset_mask m = 1; m < s.coeffs.size(); ++m)
        s.coeffs[m] = unit;
    return s;
}

}  // namespace hypercube::zoo
