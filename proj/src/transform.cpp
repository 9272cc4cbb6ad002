#include "lpfz/transform.hpp"

#include <cmath>

#include "lpfz/approx.hpp"

namespace lpfz {

namespace {

// One half-line piece int_0^inf exp(-q(t)) exp(sigma t) osc(w t) dt with the
// exact decay exponent q(t) - sigma t driving the truncation search.
IntegralValue half_line(const KernelSpec& spec, double sigma, double w, OscMode mode,
                        const QuadratureSettings& s) {
    auto f = [&spec](double t) { return std::exp(-q_eval(spec, t)); };
    auto decay = [&spec, sigma](double t) { return q_eval(spec, t) - sigma * t; };
    return integrate_decaying(f, decay, sigma, w, mode, s);
}

IntegralValue half_line_compact(const KernelSpec& spec, const ApproximantParams& params,
                                double sigma, double w, OscMode mode,
                                const QuadratureSettings& s) {
    auto f = [&spec, &params, sigma](double t) {
        return g_n_eval(spec, params, t) * std::exp(sigma * t);
    };
    return integrate_finite(f, 0.0, params.lambda, w, mode, s);
}

} // namespace

ComplexValue complex_mul(const ComplexValue& a, const ComplexValue& b) {
    const std::complex<double> p = a.value() * b.value();
    const double err = a.abs() * b.error_estimate + b.abs() * a.error_estimate +
                       a.error_estimate * b.error_estimate;
    return {p.real(), p.imag(), err};
}

ComplexValue cft(const KernelSpec& spec, ComplexPoint z, const QuadratureSettings& settings) {
    if (z.sigma == 0.0) {
        const IntegralValue I = half_line(spec, 0.0, z.w, OscMode::cos, settings);
        return {2.0 * I.value, 0.0, 2.0 * I.error_estimate};
    }
    // 2 cosh(sigma t) = e^{sigma t} + e^{-sigma t}, 2 sinh likewise
    const IntegralValue cp = half_line(spec, z.sigma, z.w, OscMode::cos, settings);
    const IntegralValue cm = half_line(spec, -z.sigma, z.w, OscMode::cos, settings);
    const IntegralValue sp = half_line(spec, z.sigma, z.w, OscMode::sin, settings);
    const IntegralValue sm = half_line(spec, -z.sigma, z.w, OscMode::sin, settings);
    return {cp.value + cm.value, sp.value - sm.value,
            cp.error_estimate + cm.error_estimate + sp.error_estimate + sm.error_estimate};
}

ComplexValue cft_approx(const KernelSpec& spec, int n, ComplexPoint z,
                        const QuadratureSettings& settings) {
    const ApproximantParams params = make_approximant(spec, n);
    if (z.sigma == 0.0) {
        const IntegralValue I = half_line_compact(spec, params, 0.0, z.w, OscMode::cos, settings);
        return {2.0 * I.value, 0.0, 2.0 * I.error_estimate};
    }
    const IntegralValue cp = half_line_compact(spec, params, z.sigma, z.w, OscMode::cos, settings);
    const IntegralValue cm = half_line_compact(spec, params, -z.sigma, z.w, OscMode::cos, settings);
    const IntegralValue sp = half_line_compact(spec, params, z.sigma, z.w, OscMode::sin, settings);
    const IntegralValue sm = half_line_compact(spec, params, -z.sigma, z.w, OscMode::sin, settings);
    return {cp.value + cm.value, sp.value - sm.value,
            cp.error_estimate + cm.error_estimate + sp.error_estimate + sm.error_estimate};
}

ComplexValue f2k(int k, ComplexPoint z, const QuadratureSettings& settings) {
    if (k < 2) raise(errc::invalid_argument, "f2k requires k >= 2");
    return cft(KernelSpec::parametric(1.0, k), z, settings);
}

ComplexValue hn(const KernelSpec& spec, int n, ComplexPoint z,
                const QuadratureSettings& settings) {
    return complex_mul(cft_approx(spec, n, z, settings), f2k(2, z, settings));
}

double convolve_kernels(const ExtendedKernel& ext, double t, const QuadratureSettings& settings) {
    if (ext.components.size() != 2)
        raise(errc::invalid_argument, "convolve_kernels takes exactly two components");
    const KernelSpec& q1 = ext.components[0];
    const KernelSpec& q2 = ext.components[1];
    const double tt = std::abs(t); // even in t, exactly
    auto f = [&](double v) {
        return std::exp(-q_eval(q1, v)) *
               (std::exp(-q_eval(q2, tt - v)) + std::exp(-q_eval(q2, tt + v)));
    };
    // exp(-q2) <= 1, so q1 alone majorizes the tail
    auto decay = [&q1](double v) { return q_eval(q1, v) - 0.6931471805599453; };
    return integrate_decaying(f, decay, 0.0, 0.0, OscMode::cos, settings).value;
}

ComplexValue cft_extended(const ExtendedKernel& ext, ComplexPoint z,
                          const QuadratureSettings& settings) {
    if (ext.components.empty())
        raise(errc::invalid_argument, "extended kernel needs at least one component");
    ComplexValue v = cft(ext.components.front(), z, settings);
    for (size_t i = 1; i < ext.components.size(); ++i)
        v = complex_mul(v, cft(ext.components[i], z, settings));
    return v;
}

} // namespace lpfz
