#include "hypercube/noise.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hypercube {

double lp_norm(const RealFunction& f, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : f.values()) m = std::max(m, std::fabs(v));
        return m;
    }
    if (!(p >= 1.0))
        throw std::invalid_argument("lp_norm needs p >= 1, got " + std::to_string(p));
    double acc = 0.0;
    for (double v : f.values()) acc += std::pow(std::fabs(v), p);
    return std::pow(acc / double(f.size()), 1.0 / p);
}

Spectrum apply_noise(const Spectrum& s, double rho) {
    Spectrum t = s;
    std::vector<double> powers(std::size_t(s.n) + 1, 1.0);
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * rho;
    for (std::size_t m = 0; m < t.coeffs.size(); ++m)
        t.coeffs[m] *= powers[std::size_t(std::popcount(m))];
    return t;
}

RealFunction apply_noise(const RealFunction& f, double rho) {
    return inverse_transform(apply_noise(transform(f), rho));
}

RealFunction riesz_product(double rho, int n) {
    check_arity(n);
    RealFunction r(n);
    // value depends only on how many coordinates are -1 (set bits)
    std::vector<double> by_weight(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k)
        by_weight[std::size_t(k)] = std::pow(1.0 + rho, n - k) * std::pow(1.0 - rho, k);
    for (point_index x = 0; x < r.size(); ++x)
        r[x] = by_weight[std::size_t(std::popcount(x))];
    return r;
}

NoiseParams hyper_preset_4_2() { return {1.0 / std::sqrt(3.0), 2.0, 4.0}; }
NoiseParams hyper_preset_2_43() { return {1.0 / std::sqrt(3.0), 4.0 / 3.0, 2.0}; }

std::vector<NoiseParams> hyper_grid() {
    const double ladder[] = {1.0, 4.0 / 3.0, 1.5, 2.0, 2.5, 3.0, 4.0};
    std::vector<NoiseParams> grid;
    for (double p : ladder)
        for (double q : ladder) {
            if (q < p) continue;
            const double limit = (p == q) ? 1.0 : (p - 1.0) / (q - 1.0);
            const double top = std::sqrt(limit);
            grid.push_back({top, p, q});
            if (top > 0.0) {  // the damped cells collapse onto rho=0 at p=1
                grid.push_back({0.7 * top, p, q});
                grid.push_back({-0.7 * top, p, q});
            }
        }
    grid.push_back(hyper_preset_4_2());
    grid.push_back(hyper_preset_2_43());
    grid.push_back({0.0, 2.0, std::numeric_limits<double>::infinity()});
    return grid;
}

Report bonami_check(const RealFunction& f, double tol) {
    Report r("bonami");
    Spectrum s = transform(f);
    const int d = degree(s);
    double m2 = 0.0, m4 = 0.0;
    for (double v : f.values()) {
        double v2 = v * v;
        m2 += v2;
        m4 += v2 * v2;
    }
    m2 /= double(f.size());
    m4 /= double(f.size());
    const double bound = std::pow(9.0, d) * m2 * m2;
    r.add_quantity("degree", d);
    r.add_quantity("fourth_moment", m4);
    r.add_quantity("second_moment", m2);
    r.add_quantity("bound", bound);
    r.set_config("tol", tol);
    r.check_le("fourth_moment_le_bound", m4, bound, tol);
    if (f.arity() == 1) {
        // base case: f = a0 + a1 x, moments expand explicitly
        double a0 = s.coeffs[0], a1 = s.coeffs[1];
        r.check_close("m4_base_identity", m4,
                      a0 * a0 * a0 * a0 + a1 * a1 * a1 * a1 + 6 * a0 * a0 * a1 * a1, tol);
        r.check_close("m2_base_identity", m2, a0 * a0 + a1 * a1, tol);
    }
    return r;
}

Report bonami_check(const BooleanFunction& f, double tol) {
    return bonami_check(to_real(f), tol);
}

Report one_norm_trick_check(const RealFunction& f, double tol) {
    Report r("one-norm-trick");
    const int d = degree(transform(f));
    const double l2 = lp_norm(f, 2.0);
    const double l1 = lp_norm(f, 1.0);
    const double bound = std::pow(3.0, d) * l1;
    r.add_quantity("degree", d);
    r.add_quantity("l2_norm", l2);
    r.add_quantity("l1_norm", l1);
    r.add_quantity("bound", bound);
    r.set_config("tol", tol);
    r.check_le("l2_le_scaled_l1", l2, bound, tol);
    return r;
}

Report hypercontractivity_check(const RealFunction& f, const NoiseParams& np, double tol) {
    if (!(np.p >= 1.0) || !(np.q >= np.p))
        throw std::invalid_argument("need 1 <= p <= q, got p=" + std::to_string(np.p) +
                                    " q=" + std::to_string(np.q));
    double limit;  // largest admissible rho^2
    if (np.p == np.q)
        limit = 1.0;
    else if (std::isinf(np.q))
        limit = 0.0;
    else
        limit = (np.p - 1.0) / (np.q - 1.0);
    if (np.rho * np.rho > limit + 1e-12)
        throw std::invalid_argument("inadmissible noise rate: rho^2=" +
                                    std::to_string(np.rho * np.rho) + " exceeds " +
                                    std::to_string(limit));

    Report r("hypercontractivity");
    r.set_input("rho", np.rho);
    r.set_input("p", np.p);
    r.set_input("q", std::isinf(np.q) ? nlohmann::ordered_json("inf")
                                      : nlohmann::ordered_json(np.q));
    const double lhs = lp_norm(apply_noise(f, np.rho), np.q);
    const double rhs = lp_norm(f, np.p);
    r.add_quantity("smoothed_q_norm", lhs);
    r.add_quantity("p_norm", rhs);
    r.set_config("tol", tol);
    r.check_le("smoothed_q_norm_le_p_norm", lhs, rhs, tol);
    return r;
}

Report truncation_lemma_check(const RealFunction& f, int d, double tol) {
    if (d < 0) throw std::invalid_argument("truncation degree must be >= 0");
    Report r("truncation");
    Spectrum s = transform(f);
    Spectrum low = truncate(s, d);
    double lhs = 0.0;
    for (double c : low.coeffs) lhs += c * c;
    const double rhs = std::pow(std::sqrt(3.0), d) * lp_norm(f, 2.0) * lp_norm(f, 4.0 / 3.0);
    r.set_input("d", d);
    r.add_quantity("low_part_energy", lhs);
    r.add_quantity("bound", rhs);
    r.set_config("tol", tol);
    r.check_le("low_part_energy_le_bound", lhs, rhs, tol);
    return r;
}

}  // namespace hypercube
