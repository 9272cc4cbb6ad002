#include "lpfz/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lpfz/transform.hpp"
#include "lpfz/util.hpp"

namespace lpfz {

ApproximantParams make_approximant(const KernelSpec& spec, int n, double tol) {
    if (n < 1) raise(errc::invalid_argument, "approximant index n must be >= 1");
    return {n, lambda_n(spec, n, tol)};
}

double g_n_eval(const KernelSpec& spec, const ApproximantParams& params, double t) {
    if (std::abs(t) > params.lambda) return 0.0;
    const double base = 1.0 - q_eval(spec, t) / params.n;
    if (base <= 0.0) return 0.0; // boundary roundoff clamps to the exact zero
    const double n = params.n;
    return n / (n + 1.0) * std::pow(base, n + 1.0);
}

bool envelope_check(const KernelSpec& spec, const ApproximantParams& params, double t) {
    const double g = g_n_eval(spec, params, t);
    return g >= 0.0 && g <= std::exp(-q_eval(spec, t));
}

double kn_bound(const KernelSpec& spec, double M, double t1, const QuadratureSettings& settings) {
    if (!(M > 0.0) || !(t1 > 0.0)) raise(errc::invalid_argument, "kn_bound needs M, t1 > 0");
    // normalize so the integrand starts at 1: relative tolerance then applies
    // even when exp(-q(t1)) is astronomically small
    const double q1 = q_eval(spec, t1);
    auto f = [&spec, t1, q1](double u) { return std::exp(-(q_eval(spec, t1 + u) - q1)); };
    auto decay = [&spec, t1, q1, M](double u) { return q_eval(spec, t1 + u) - q1 - M * u; };
    const IntegralValue I = integrate_decaying(f, decay, M, 0.0, OscMode::cos, settings);
    return 2.0 * std::exp(M * t1 - q1) * I.value;
}

double jn_bound(const KernelSpec& spec, double M, double t1, int n) {
    if (!(M > 0.0) || !(t1 > 0.0)) raise(errc::invalid_argument, "jn_bound needs M, t1 > 0");
    if (n < 1) raise(errc::invalid_argument, "jn_bound needs n >= 1");
    const double q1 = q_eval(spec, t1);
    if (!(n > q1))
        raise(errc::n_too_small, "need n > q(t1) = " + std::to_string(q1));
    return 2.0 * std::exp(M * t1) / (M * n);
}

ConvergenceBound n_for_epsilon(const KernelSpec& spec, double M, double epsilon,
                               const QuadratureSettings& settings) {
    if (!(M > 0.0) || !(epsilon > 0.0))
        raise(errc::invalid_argument, "n_for_epsilon needs M, epsilon > 0");
    double t1 = 1.0;
    double kn = kn_bound(spec, M, t1, settings);
    for (int it = 0; it < 60 && !(kn < 0.5 * epsilon); ++it) {
        t1 *= 2.0;
        kn = kn_bound(spec, M, t1, settings);
    }
    if (!(kn < 0.5 * epsilon))
        raise(errc::no_decay, "no split point t1 found with tail bound below epsilon/2");
    const double n_req = std::max(q_eval(spec, t1), 4.0 * std::exp(M * t1) / (M * epsilon));
    if (!(n_req < 2.0e9))
        raise(errc::invalid_argument, "required n exceeds the supported range");
    const int n_min = static_cast<int>(std::floor(n_req)) + 1;
    return {M, t1, n_min, epsilon, jn_bound(spec, M, t1, n_min), kn};
}

double empirical_gap(const KernelSpec& spec, int n, double M, int grid_size,
                     const QuadratureSettings& settings) {
    if (n < 1 || grid_size < 1 || !(M >= 0.0))
        raise(errc::invalid_argument, "empirical_gap needs n >= 1, grid >= 1, M >= 0");
    std::vector<ComplexPoint> pts;
    pts.push_back({0.0, 0.0});
    if (M > 0.0) {
        for (int i = 1; i <= grid_size; ++i) {
            const double r = M * i / grid_size; // boundary ring included
            for (int j = 0; j < grid_size; ++j) {
                const double th = 2.0 * 3.14159265358979323846 * j / grid_size;
                pts.push_back({r * std::cos(th), -r * std::sin(th)});
            }
        }
    }
    const std::vector<double> devs =
        parallel_map<double>(static_cast<int>(pts.size()), [&](int i) {
            const ComplexPoint z = pts[static_cast<size_t>(i)];
            const ComplexValue a = cft(spec, z, settings);
            const ComplexValue b = cft_approx(spec, n, z, settings);
            return std::abs(a.value() - b.value());
        });
    return *std::max_element(devs.begin(), devs.end());
}

} // namespace lpfz
