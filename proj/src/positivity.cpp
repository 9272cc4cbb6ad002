#include "lpfz/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "lpfz/util.hpp"

namespace lpfz {

namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Coefficients of P(u + w) from the full-degree coefficients of P (Ruffini
// repeated synthetic division).
std::vector<double> taylor_shift(std::vector<double> a, double w) {
    const int d = static_cast<int>(a.size()) - 1;
    for (int k = 0; k < d; ++k)
        for (int j = d - 1; j >= k; --j) a[static_cast<size_t>(j)] += w * a[static_cast<size_t>(j) + 1];
    return a;
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

struct RingEstimate {
    double value;
    double band;
};

RingEstimate ring_coefficient(const ComplexEvaluator& G, int m, double w, double rho, int K) {
    const std::vector<std::pair<std::complex<double>, double>> samples =
        parallel_map<std::pair<std::complex<double>, double>>(K, [&](int k) {
            const double th = 2.0 * kPi * k / K;
            const std::complex<double> u = std::polar(rho, th);
            const ComplexValue g1 = G(ComplexPoint::from_std(w + u));
            const ComplexValue g2 = G(ComplexPoint::from_std(w - u));
            const std::complex<double> phi = g1.value() * g2.value();
            const double err = g1.abs() * g2.error_estimate + g2.abs() * g1.error_estimate +
                               g1.error_estimate * g2.error_estimate;
            return std::make_pair(phi * std::polar(1.0, -2.0 * m * th), err);
        });
    std::complex<double> acc(0.0, 0.0);
    double errs = 0.0;
    for (const auto& s : samples) {
        acc += s.first;
        errs += s.second;
    }
    const double scale = 1.0 / (K * std::pow(rho, 2 * m));
    const std::complex<double> c2m = acc * scale;
    const double delta = errs * scale;
    const double fac2m = factorial(2 * m);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    // B = (-1)^m 2 (2m)! c_{2m}; a nonzero imaginary part is itself noise
    return {sign * 2.0 * fac2m * c2m.real(),
            2.0 * fac2m * (delta + std::abs(c2m.imag()))};
}

} // namespace

double EvenPolynomial::eval(double w) const {
    const double w2 = w * w;
    double v = 0.0;
    for (size_t j = coeffs.size(); j-- > 0;) v = v * w2 + coeffs[j];
    return v;
}

std::complex<double> EvenPolynomial::eval(std::complex<double> z) const {
    const std::complex<double> z2 = z * z;
    std::complex<double> v(0.0, 0.0);
    for (size_t j = coeffs.size(); j-- > 0;) v = v * z2 + coeffs[j];
    return v;
}

EvenPolynomial EvenPolynomial::from_coeffs(std::vector<double> coeffs) {
    if (coeffs.empty()) raise(errc::invalid_argument, "even polynomial needs coefficients");
    EvenPolynomial p;
    p.coeffs = std::move(coeffs);
    return p;
}

EvenPolynomial EvenPolynomial::from_real_zeros(double c, std::vector<double> zeros) {
    if (c == 0.0 || !std::isfinite(c))
        raise(errc::invalid_argument, "constant must be nonzero and finite");
    std::sort(zeros.begin(), zeros.end());
    for (double a : zeros)
        if (!(a > 0.0)) raise(errc::invalid_argument, "zeros must be positive");
    EvenPolynomial p;
    p.real_rooted = true;
    p.c = c;
    p.zeros = std::move(zeros);
    p.coeffs = {c};
    for (double a : p.zeros) p.coeffs = convolve(p.coeffs, {1.0, -1.0 / (a * a)});
    return p;
}

EvenPolynomial EvenPolynomial::from_product(const ProductRep& rep) {
    return from_real_zeros(rep.c, rep.zeros);
}

double t_coeff_exact(const EvenPolynomial& P, int m, double w) {
    if (m < 0) raise(errc::invalid_argument, "m must be >= 0");
    const int N = P.degree_half();
    if (m > 2 * N) return 0.0; // Q has degree 4N in u

    if (P.real_rooted) {
        // Q(iu) factors per zero into u^2-polynomials with nonnegative
        // coefficients {A^2, (2/a^2)(1 + w^2/a^2), 1/a^4}; only nonnegative
        // products and sums follow, so the result is >= 0 exactly.
        std::vector<double> poly = {P.c * P.c};
        for (double alpha : P.zeros) {
            const double s = alpha * alpha;
            const double A = 1.0 - w * w / s;
            poly = convolve(poly, {A * A, (2.0 / s) * (1.0 + w * w / s), 1.0 / (s * s)});
        }
        const double qm = (static_cast<size_t>(m) < poly.size()) ? poly[static_cast<size_t>(m)] : 0.0;
        return 2.0 * factorial(2 * m) * qm;
    }

    // general coefficient route: A(u) = P(u+w), Q(u) = A(u) A(-u)
    std::vector<double> full(static_cast<size_t>(2 * N) + 1, 0.0);
    for (int j = 0; j <= N; ++j) full[static_cast<size_t>(2 * j)] = P.coeffs[static_cast<size_t>(j)];
    const std::vector<double> a = taylor_shift(full, w);
    const int d = 2 * N;
    double s = 0.0;
    for (int j = std::max(0, 2 * m - d); j <= std::min(d, 2 * m); ++j) {
        const double term = a[static_cast<size_t>(j)] * a[static_cast<size_t>(2 * m - j)];
        s += (j % 2 == 0) ? term : -term;
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * 2.0 * factorial(2 * m) * s;
}

BCoeff b_coeff(const ComplexEvaluator& G, int m, double w, double ring_radius,
               int ring_samples) {
    if (m < 0 || !(ring_radius > 0.0))
        raise(errc::invalid_argument, "b_coeff needs m >= 0 and ring_radius > 0");
    const int K = next_pow2(std::max({ring_samples, 4 * m + 8, 8}));

    // re-try the ring doubled/halved when the coefficient-to-error ratio is
    // poor; the first conclusive estimate wins
    const double candidates[4] = {ring_radius, 2.0 * ring_radius, 0.5 * ring_radius,
                                  4.0 * ring_radius};
    BCoeff best;
    double best_margin = -std::numeric_limits<double>::infinity();
    for (double rho : candidates) {
        const RingEstimate est = ring_coefficient(G, m, w, rho, K);
        const bool conclusive = std::abs(est.value) > 3.0 * est.band;
        if (conclusive) return {est.value, est.band, true};
        const double margin = (est.band > 0.0) ? std::abs(est.value) / est.band
                                               : std::abs(est.value);
        if (margin > best_margin) {
            best_margin = margin;
            best = {est.value, est.band, false};
        }
    }
    return best;
}

CoefficientTable b_table(const ComplexEvaluator& G, double w, int max_m, double ring_radius,
                         int ring_samples) {
    if (max_m < 0) raise(errc::invalid_argument, "b_table needs max_m >= 0");
    CoefficientTable tab;
    tab.w = w;
    tab.max_m = max_m;
    for (int m = 0; m <= max_m; ++m) {
        const BCoeff bc = b_coeff(G, m, w, ring_radius, ring_samples);
        tab.values.push_back(bc.value);
        tab.error_bands.push_back(bc.error_band);
        tab.conclusive.push_back(bc.conclusive);
    }
    return tab;
}

double series_reconstruct(const CoefficientTable& table, double sigma, double tail_rel_tol) {
    if (table.values.empty()) raise(errc::invalid_argument, "empty coefficient table");
    const double sigma2 = sigma * sigma; // even in sigma, exactly
    std::vector<double> terms;
    for (size_t m = 0; m < table.values.size(); ++m)
        terms.push_back(std::pow(sigma2, static_cast<double>(m)) /
                        factorial(2 * static_cast<int>(m)) * table.values[m]);
    double sum = 0.0;
    for (double t : terms) sum += t;
    sum *= 0.5;

    if (sigma != 0.0 && terms.size() >= 2) {
        const double last = std::abs(terms.back());
        const double prev = std::abs(terms[terms.size() - 2]);
        const double ratio = last / std::max(prev, 1e-300);
        const double scale = std::max(std::abs(sum), 1e-300);
        if (ratio >= 1.0)
            raise(errc::tail_not_converged, "series terms are not decreasing at the tail");
        const double tail = last * ratio / (1.0 - ratio);
        if (tail > tail_rel_tol * scale)
            raise(errc::tail_not_converged,
                  "estimated tail " + fmt_double(tail) + " exceeds tolerance");
    }
    return std::max(sum, 0.0);
}

MonotonicityReport monotonicity_scan(const ComplexEvaluator& F, const std::vector<double>& w_grid,
                                     const std::vector<double>& sigma_grid) {
    if (w_grid.empty() || sigma_grid.empty())
        raise(errc::invalid_argument, "monotonicity_scan needs nonempty grids");
    if (sigma_grid.front() != 0.0)
        raise(errc::invalid_argument, "sigma grid must start at 0");
    for (size_t i = 1; i < sigma_grid.size(); ++i)
        if (!(sigma_grid[i] > sigma_grid[i - 1]))
            raise(errc::invalid_argument, "sigma grid must increase");

    const int nw = static_cast<int>(w_grid.size());
    const int ns = static_cast<int>(sigma_grid.size());
    const std::vector<MonotonicityEntry> entries =
        parallel_map<MonotonicityEntry>(nw * ns, [&](int idx) {
            const double w = w_grid[static_cast<size_t>(idx / ns)];
            const double sg = sigma_grid[static_cast<size_t>(idx % ns)];
            const ComplexValue v = F({w, sg});
            const double sq = v.re * v.re + v.im * v.im;
            const double err = 2.0 * v.abs() * v.error_estimate +
                               v.error_estimate * v.error_estimate;
            return MonotonicityEntry{w, sg, sq, err};
        });

    MonotonicityReport rep;
    rep.entries = entries;
    for (int iw = 0; iw < nw; ++iw) {
        for (int is = 0; is + 1 < ns; ++is) {
            const MonotonicityEntry& lo = entries[static_cast<size_t>(iw * ns + is)];
            const MonotonicityEntry& hi = entries[static_cast<size_t>(iw * ns + is + 1)];
            const double drop = lo.value - hi.value - (lo.error + hi.error);
            if (drop > 0.0)
                rep.violations.push_back({lo.w, lo.sigma, hi.sigma, drop});
        }
    }
    return rep;
}

} // namespace lpfz
