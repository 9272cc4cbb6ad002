#include "lpfz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace lpfz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15).
// Odd-index abscissae (and the centre) carry the embedded Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a; // deterministic tie-break
    }
};

double checked(double v, double t) {
    if (!std::isfinite(v))
        raise(errc::non_finite, "integrand returned " + std::to_string(v) + " at t = " +
                                    std::to_string(t));
    return v;
}

Panel gk15(const RealFn1& g, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = checked(g(c), c);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double f1 = checked(g(c - dx), c - dx);
        const double f2 = checked(g(c + dx), c + dx);
        k15 += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) g7 += kWg[i / 2] * (f1 + f2);
        resabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
    }
    k15 *= h;
    g7 *= h;
    resabs *= std::abs(h);
    const double err = std::abs(k15 - g7) + 50.0 * kEps * resabs;
    return {a, b, k15, err};
}

IntegralValue adaptive(const RealFn1& g, double lo, double hi,
                       double osc_w, const QuadratureSettings& s, double extra_error) {
    if (!(s.rel_tol > 0.0) || !(s.abs_tol > 0.0) || s.max_subdivisions < 1)
        raise(errc::invalid_argument, "quadrature settings must be positive");
    if (!(lo < hi)) raise(errc::invalid_argument, "integration bounds must satisfy lo < hi");

    // initial panels no wider than half an oscillation period
    const double wmax = kPi / std::max(std::abs(osc_w), 1.0);
    int n0 = static_cast<int>(std::ceil((hi - lo) / wmax));
    n0 = std::clamp(n0, 1, s.max_subdivisions);

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    double sum_v = 0.0, sum_e = 0.0;
    for (int j = 0; j < n0; ++j) {
        const double a = lo + (hi - lo) * j / n0;
        const double b = (j + 1 == n0) ? hi : lo + (hi - lo) * (j + 1) / n0;
        Panel p = gk15(g, a, b);
        sum_v += p.value;
        sum_e += p.error;
        queue.push(p);
    }

    int panels = n0;
    int stalls = 0;
    while (sum_e > std::max(s.abs_tol, s.rel_tol * std::abs(sum_v))) {
        const Panel worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a) || !(mid < worst.b)) break; // width at rounding limit
        if (panels + 1 > s.max_subdivisions)
            raise(errc::max_subdivisions_exceeded,
                  "needed more than " + std::to_string(s.max_subdivisions) + " panels");
        queue.pop();
        Panel p1 = gk15(g, worst.a, mid);
        Panel p2 = gk15(g, mid, worst.b);
        sum_v += p1.value + p2.value - worst.value;
        sum_e += p1.error + p2.error - worst.error;
        queue.push(p1);
        queue.push(p2);
        ++panels;
        stalls = (p1.error + p2.error >= worst.error) ? stalls + 1 : 0;
        if (stalls > 64) break; // refinement no longer reduces the estimate
    }

    // deterministic final summation in interval order
    std::vector<Panel> all;
    all.reserve(static_cast<size_t>(panels));
    while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0, error = extra_error;
    for (const Panel& p : all) {
        value += p.value;
        error += p.error;
    }
    return {value, error, hi};
}

} // namespace

double truncation_point(const RealFn1& decay, double tail_budget) {
    if (!(tail_budget > 0.0)) raise(errc::invalid_argument, "tail budget must be positive");
    double t_prev = 0.25;
    double d_prev = decay(t_prev);
    for (double t = 0.5; t < 2.0e7; t *= 1.25) {
        const double d = decay(t);
        if (std::isnan(d) || std::isnan(d_prev))
            raise(errc::non_finite, "decay function returned NaN");
        if (std::isinf(d_prev) && std::isinf(d)) return t; // integrand fully underflowed
        const double c = (d - d_prev) / (t - t_prev);
        if (c > 0.0) {
            // exp(-decay(s)) <= exp(-d - c (s - t)) for s >= t (convex decay)
            const double tail = std::exp(-d) / c;
            if (tail <= tail_budget) return t;
        }
        t_prev = t;
        d_prev = d;
    }
    raise(errc::no_decay, "decay not eventually increasing within the search range");
}

IntegralValue integrate_decaying(const RealFn1& f, double sigma, double w, OscMode mode,
                                 const QuadratureSettings& settings) {
    auto decay = [&f, sigma](double t) {
        const double v = std::abs(f(t));
        return (v > 0.0) ? -std::log(v) - sigma * t
                         : std::numeric_limits<double>::infinity();
    };
    return integrate_decaying(f, decay, sigma, w, mode, settings);
}

IntegralValue integrate_decaying(const RealFn1& f, const RealFn1& decay, double sigma,
                                 double w, OscMode mode, const QuadratureSettings& settings) {
    const double budget = 0.5 * settings.abs_tol;
    const double T = truncation_point(decay, budget);
    auto g = [&f, sigma, w, mode](double t) {
        const double osc = (mode == OscMode::cos) ? std::cos(w * t) : std::sin(w * t);
        return f(t) * std::exp(sigma * t) * osc;
    };
    IntegralValue r = adaptive(g, 0.0, T, w, settings, budget);
    r.truncation_point = T;
    return r;
}

IntegralValue integrate_finite(const RealFn1& f, double lo, double hi, double w, OscMode mode,
                               const QuadratureSettings& settings) {
    auto g = [&f, w, mode](double t) {
        const double osc = (mode == OscMode::cos) ? std::cos(w * t) : std::sin(w * t);
        return f(t) * osc;
    };
    return adaptive(g, lo, hi, w, settings, 0.0);
}

} // namespace lpfz
