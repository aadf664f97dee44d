#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Functions on the Hamming cube {-1,+1}^n.
//
// Point encoding: a point x = (x_1,...,x_n) is stored as the index whose bit
// j-1 equals (1 - x_j)/2, i.e. the bit is set exactly when x_j = -1.  Index 0
// is the all-(+1) point.  Subsets S of {1,...,n} use the same bit positions,
// so the character chi_S(x) is (-1)^popcount(mask & index).
namespace hypercube {

using point_index = std::uint64_t;
using subset_mask = std::uint64_t;

// Largest arity accepted when building tables.  Defaults to 24; the
// HYPERCUBE_MAX_N environment variable overrides it (hard ceiling 30, since
// tables are dense).  Invalid override values raise std::invalid_argument.
int max_arity();

// Checks 0 <= n <= max_arity(), throws std::invalid_argument otherwise.
void check_arity(int n);

inline std::uint64_t table_size(int n) { return std::uint64_t(1) << n; }

// Flip coordinate i (1-based) of a point: toggles bit i-1.
// Throws std::out_of_range unless 1 <= i <= n.
point_index flip_point(point_index p, int i, int n);

// A +/-1 valued function given by a dense truth table.  Bit i of the packed
// table stores (1 - f(point i))/2, so a set bit means f = -1.  Arity 0 is the
// degenerate single-point cube (used as the terminal case of restrictions).
class BooleanFunction {
  public:
    BooleanFunction() : n_(0), words_(1, 0) {}
    explicit BooleanFunction(int n);
    static BooleanFunction constant(int n, int value);

    // Build from packed table words (bit i = point i); bits beyond 2^n in the
    // last word are cleared.  The word count must match the arity.
    static BooleanFunction from_words(int n, std::vector<std::uint64_t> words);
    const std::vector<std::uint64_t>& words() const { return words_; }

    int arity() const { return n_; }
    std::uint64_t size() const { return std::uint64_t(1) << n_; }

    // f(point p) in {-1,+1}; throws std::out_of_range for p >= 2^n.
    int value(point_index p) const;
    void set_value(point_index p, int v);

    bool bit(point_index p) const {
        return (words_[p >> 6] >> (p & 63)) & 1;
    }
    void set_bit(point_index p, bool b) {
        std::uint64_t m = std::uint64_t(1) << (p & 63);
        if (b) words_[p >> 6] |= m; else words_[p >> 6] &= ~m;
    }

    // Number of points where f = -1 (popcount of the packed table).
    std::uint64_t count_minus() const;

    // Sum of f over all points as an exact integer: 2^n - 2*count_minus().
    std::int64_t sum_of_values() const;

    bool operator==(const BooleanFunction& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

  private:
    void check_point(point_index p) const;

    int n_;
    std::vector<std::uint64_t> words_;
};

// A real-valued function on the same cube, dense table of doubles.
class RealFunction {
  public:
    RealFunction() : n_(0), values_(1, 0.0) {}
    RealFunction(int n, double fill = 0.0);
    RealFunction(int n, std::vector<double> values);

    int arity() const { return n_; }
    std::uint64_t size() const { return values_.size(); }

    double value(point_index p) const { return values_.at(p); }
    double& operator[](point_index p) { return values_[p]; }
    double operator[](point_index p) const { return values_[p]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    // Requires every entry finite; throws std::invalid_argument otherwise.
    void check_finite() const;

  private:
    int n_;
    std::vector<double> values_;
};

RealFunction to_real(const BooleanFunction& f);

// Evaluate chi_S at a point: (-1)^popcount(mask & index).
int character_value(subset_mask s, point_index p);

// Restriction f|_{x_i = b}: fixes coordinate i (1-based) to b in {-1,+1} and
// renumbers the remaining coordinates preserving their order.  Restricting an
// arity-1 function yields the arity-0 constant; restricting arity 0 throws.
BooleanFunction restrict(const BooleanFunction& f, int i, int b);
RealFunction restrict(const RealFunction& f, int i, int b);

// Monotone means raising any coordinate from -1 to +1 never lowers f.
// find_monotonicity_violation returns a witness (point with x_i = -1 where
// f(point) > f(point with x_i raised)) or nullopt if f is monotone.
struct MonotonicityViolation {
    point_index point;
    int coordinate;
};
std::optional<MonotonicityViolation> find_monotonicity_violation(const BooleanFunction& f);
bool is_monotone(const BooleanFunction& f);

// g(x) = -f(-x): negates every input coordinate and the output.  Preserves
// monotonicity and negates the mean; used to reduce "push toward -1"
// problems to the "+1" case.
BooleanFunction negate_function(const BooleanFunction& f);

}  // namespace hypercube
