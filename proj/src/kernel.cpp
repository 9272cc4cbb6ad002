#include "lpfz/kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lpfz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x^p by squaring, p >= 0; odd p keeps the sign of x.
double pow_int(double x, int p) {
    double r = 1.0, b = x;
    for (int e = p; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

double saturate(double v) { return std::isfinite(v) ? v : kInf; }

} // namespace

KernelSpec KernelSpec::parametric(double k, int m, double mu, std::vector<double> betas) {
    KernelSpec s;
    s.form = KernelForm::parametric;
    s.k = k;
    s.m = m;
    s.mu = mu;
    s.betas = std::move(betas);
    return s;
}

KernelSpec KernelSpec::cosh_example(double a) {
    KernelSpec s;
    s.form = KernelForm::cosh_example;
    s.a = a;
    return s;
}

KernelSpec validate(const KernelSpec& spec) {
    if (spec.form == KernelForm::cosh_example) {
        if (!(spec.a > 0.0) || !std::isfinite(spec.a))
            raise(errc::invalid_argument, "cosh amplitude a must be positive and finite");
        return spec;
    }
    if (!(spec.k > 0.0) || !std::isfinite(spec.k))
        raise(errc::non_positive_k, "leading coefficient k must be positive");
    if (spec.m < 1) raise(errc::zero_m, "vanishing half-order m must be >= 1");
    if (!(spec.mu >= 0.0) || !std::isfinite(spec.mu))
        raise(errc::negative_mu, "Gaussian exponent mu must be >= 0");
    for (double b : spec.betas)
        if (!(b > 0.0) || !std::isfinite(b))
            raise(errc::non_positive_beta, "root magnitudes beta_n must be positive");
    if (spec.m == 1 && spec.mu == 0.0 && spec.betas.empty())
        raise(errc::growth_too_slow,
              "pure t^2 kernel: no nonzero t^4-or-higher series term");
    return spec;
}

double q_eval(const KernelSpec& spec, double t) {
    if (spec.form == KernelForm::cosh_example) {
        // a(cosh t - 1) = 2a sinh^2(t/2): exact at 0, even via |t|
        const double s = std::sinh(0.5 * std::abs(t));
        return saturate(2.0 * spec.a * s * s);
    }
    const double t2 = t * t;
    double v = spec.k * pow_int(t2, spec.m) * std::exp(spec.mu * t2);
    for (double b : spec.betas) v *= 1.0 + t2 / (b * b);
    return saturate(v);
}

double q_prime(const KernelSpec& spec, double t) {
    if (spec.form == KernelForm::cosh_example) return saturate(spec.a * std::sinh(t));
    const double t2 = t * t;
    double v = spec.k * pow_int(t, 2 * spec.m - 1) * std::exp(spec.mu * t2);
    double bracket = 2.0 * spec.m + 2.0 * spec.mu * t2;
    for (double b : spec.betas) {
        const double b2 = b * b;
        v *= 1.0 + t2 / b2;
        bracket += 2.0 * t2 / (b2 + t2);
    }
    v *= bracket;
    if (std::isfinite(v)) return v;
    return t > 0 ? kInf : -kInf;
}

double lambda_n(const KernelSpec& spec, int n, double tol) {
    if (n < 1) raise(errc::invalid_argument, "lambda_n requires n >= 1");
    if (!(tol > 0.0)) raise(errc::invalid_argument, "lambda_n tolerance must be positive");
    const double target = static_cast<double>(n);

    double lo = 0.0, hi = 1.0;
    while (q_eval(spec, hi) < target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (q_eval(spec, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) { // Newton polish inside the bracket
        const double dq = q_prime(spec, x);
        if (!(dq > 0.0) || !std::isfinite(dq)) break;
        const double step = (q_eval(spec, x) - target) / dq;
        const double xn = x - step;
        if (!(xn > lo) || !(xn < hi)) break;
        x = xn;
        if (std::abs(step) < 0.125 * tol) break;
    }
    return x;
}

GrowthWitness growth_witness(const KernelSpec& spec) {
    const double alpha = 1.0;
    double a_low, p; // monomial lower bound a_low * t^p <= q(t), p >= 4
    if (spec.form == KernelForm::cosh_example) {
        a_low = spec.a / 24.0; // cosh(t) - 1 >= t^4/24
        p = 4.0;
    } else if (spec.m >= 2) {
        a_low = spec.k; // exp and product factors are >= 1
        p = 2.0 * spec.m;
    } else {
        double s = spec.mu;
        for (double b : spec.betas) s += 1.0 / (b * b);
        a_low = spec.k * s; // the exact t^4 series coefficient for m = 1
        p = 4.0;
    }
    double T = std::pow(1.0 / a_low, 1.0 / (p - 2.0 - alpha));
    T = T * (1.0 + 1e-9) + 1e-12; // strict inequality at the left end
    return {T, alpha};
}

} // namespace lpfz
