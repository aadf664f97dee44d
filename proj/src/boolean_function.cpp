#include "hypercube/boolean_function.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hypercube {

namespace {

constexpr int kDefaultMaxArity = 24;
constexpr int kArityCeiling = 30;

int read_max_arity_from_env() {
    const char* raw = std::getenv("HYPERCUBE_MAX_N");
    if (raw == nullptr || *raw == '\0') return kDefaultMaxArity;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 0 || v > kArityCeiling)
        throw std::invalid_argument(
            "HYPERCUBE_MAX_N must be an integer in [0, " +
            std::to_string(kArityCeiling) + "], got \"" + raw + "\"");
    return int(v);
}

}  // namespace

int max_arity() {
    static const int cap = read_max_arity_from_env();
    return cap;
}

void check_arity(int n) {
    if (n < 0 || n > max_arity())
        throw std::invalid_argument("arity " + std::to_string(n) +
                                    " outside [0, " + std::to_string(max_arity()) + "]");
}

point_index flip_point(point_index p, int i, int n) {
    if (i < 1 || i > n)
        throw std::out_of_range("coordinate " + std::to_string(i) +
                                " outside [1, " + std::to_string(n) + "]");
    return p ^ (point_index(1) << (i - 1));
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    check_arity(n);
    words_.assign(std::size_t(1) << (n_ > 6 ? n_ - 6 : 0), 0);
}

BooleanFunction BooleanFunction::constant(int n, int value) {
    if (value != 1 && value != -1)
        throw std::invalid_argument("constant value must be +1 or -1");
    BooleanFunction f(n);
    if (value == -1) {
        for (auto& w : f.words_) w = ~std::uint64_t(0);
        // mask off the tail beyond 2^n in the last word
        if (n < 6) f.words_[0] = (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
    }
    return f;
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<std::uint64_t> words) {
    BooleanFunction f(n);
    if (words.size() != f.words_.size())
        throw std::invalid_argument("expected " + std::to_string(f.words_.size()) +
                                    " table words, got " + std::to_string(words.size()));
    f.words_ = std::move(words);
    if (n < 6) f.words_[0] &= (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
    return f;
}

void BooleanFunction::check_point(point_index p) const {
    if (p >= size())
        throw std::out_of_range("point index " + std::to_string(p) +
                                " outside table of size " + std::to_string(size()));
}

int BooleanFunction::value(point_index p) const {
    check_point(p);
    return bit(p) ? -1 : 1;
}

void BooleanFunction::set_value(point_index p, int v) {
    check_point(p);
    if (v != 1 && v != -1)
        throw std::invalid_argument("value must be +1 or -1");
    set_bit(p, v == -1);
}

std::uint64_t BooleanFunction::count_minus() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += std::uint64_t(std::popcount(w));
    return c;
}

std::int64_t BooleanFunction::sum_of_values() const {
    return std::int64_t(size()) - 2 * std::int64_t(count_minus());
}

RealFunction::RealFunction(int n, double fill) : n_(n) {
    check_arity(n);
    values_.assign(std::size_t(1) << n_, fill);
}

RealFunction::RealFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    check_arity(n);
    if (values_.size() != (std::size_t(1) << n_))
        throw std::invalid_argument("table size " + std::to_string(values_.size()) +
                                    " does not match arity " + std::to_string(n_));
}

void RealFunction::check_finite() const {
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]))
            throw std::invalid_argument("non-finite value at point " + std::to_string(i));
}

RealFunction to_real(const BooleanFunction& f) {
    RealFunction g(f.arity());
    for (point_index p = 0; p < f.size(); ++p)
        g[p] = f.bit(p) ? -1.0 : 1.0;
    return g;
}

int character_value(subset_mask s, point_index p) {
    return (std::popcount(s & p) & 1) ? -1 : 1;
}

namespace {

// Splice out bit i-1 of an index: low bits kept, high bits shifted down.
inline point_index splice_in(point_index reduced, int i, bool bit_set) {
    point_index low = reduced & ((point_index(1) << (i - 1)) - 1);
    point_index high = reduced >> (i - 1);
    return low | (point_index(bit_set) << (i - 1)) | (high << i);
}

void check_restriction_args(int n, int i, int b) {
    if (n == 0) throw std::invalid_argument("cannot restrict an arity-0 function");
    if (i < 1 || i > n)
        throw std::out_of_range("coordinate " + std::to_string(i) +
                                " outside [1, " + std::to_string(n) + "]");
    if (b != 1 && b != -1)
        throw std::invalid_argument("restriction value must be +1 or -1");
}

}  // namespace

BooleanFunction restrict(const BooleanFunction& f, int i, int b) {
    check_restriction_args(f.arity(), i, b);
    BooleanFunction g(f.arity() - 1);
    const bool bit_set = (b == -1);
    for (point_index q = 0; q < g.size(); ++q)
        g.set_bit(q, f.bit(splice_in(q, i, bit_set)));
    return g;
}

RealFunction restrict(const RealFunction& f, int i, int b) {
    check_restriction_args(f.arity(), i, b);
    RealFunction g(f.arity() - 1);
    const bool bit_set = (b == -1);
    for (point_index q = 0; q < g.size(); ++q)
        g[q] = f[splice_in(q, i, bit_set)];
    return g;
}

std::optional<MonotonicityViolation> find_monotonicity_violation(const BooleanFunction& f) {
    // A violation is a point p with x_i = -1 (bit set), f(p) = +1, while the
    // point with x_i raised to +1 has f = -1.
    for (int i = 1; i <= f.arity(); ++i) {
        const point_index e = point_index(1) << (i - 1);
        for (point_index p = 0; p < f.size(); ++p)
            if ((p & e) && !f.bit(p) && f.bit(p ^ e))
                return MonotonicityViolation{p, i};
    }
    return std::nullopt;
}

bool is_monotone(const BooleanFunction& f) {
    return !find_monotonicity_violation(f).has_value();
}

BooleanFunction negate_function(const BooleanFunction& f) {
    BooleanFunction g(f.arity());
    const point_index all = f.size() - 1;
    for (point_index p = 0; p < f.size(); ++p)
        g.set_bit(p, !f.bit(all ^ p));
    return g;
}

}  // namespace hypercube
