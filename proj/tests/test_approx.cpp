#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lpfz/approx.hpp"
#include "lpfz/transform.hpp"
#include "oracles.hpp"

using namespace lpfz;

namespace {
const KernelSpec kT4 = KernelSpec::parametric(1.0, 2);
const QuadratureSettings kSet;

std::vector<KernelSpec> corpus() {
    return {kT4,
            KernelSpec::parametric(1.0, 3),
            KernelSpec::parametric(1.0, 2, 1.0),
            KernelSpec::parametric(1.0, 2, 0.0, {2.0}),
            KernelSpec::parametric(0.7, 1, 0.4, {1.5, 3.0}),
            KernelSpec::cosh_example(0.5),
            KernelSpec::cosh_example(1.0),
            KernelSpec::cosh_example(2.0)};
}
} // namespace

TEST_CASE("g_n closed-form values") {
    const ApproximantParams p3 = make_approximant(kT4, 3);
    CHECK(g_n_eval(kT4, p3, 0.0) == doctest::Approx(0.75).epsilon(1e-15));

    const ApproximantParams p16 = make_approximant(kT4, 16);
    CHECK(g_n_eval(kT4, p16, 2.0) == 0.0);  // boundary: q(2) = 16 = n
    CHECK(g_n_eval(kT4, p16, 3.0) == 0.0);  // outside the support
    CHECK(g_n_eval(kT4, p16, -3.0) == 0.0);

    const ApproximantParams p4 = make_approximant(kT4, 4);
    CHECK(g_n_eval(kT4, p4, 1.0) == doctest::Approx(0.8 * std::pow(0.75, 5)).epsilon(1e-14));
}

TEST_CASE("g_n is even exactly") {
    const ApproximantParams p = make_approximant(kT4, 7);
    for (double t : {0.12, 0.7, 1.1, 1.3, 2.0})
        CHECK(g_n_eval(kT4, p, t) == g_n_eval(kT4, p, -t));
}

TEST_CASE("envelope examples") {
    const ApproximantParams p4 = make_approximant(kT4, 4);
    CHECK(g_n_eval(kT4, p4, 1.0) <= std::exp(-1.0));
    CHECK(envelope_check(kT4, p4, 1.0));
    CHECK(envelope_check(kT4, p4, 5.0)); // beyond the support: 0 <= 0 <= e^{-q}
    CHECK(envelope_check(kT4, p4, 0.0)); // n/(n+1) <= 1
}

TEST_CASE("envelope property: 1000 randomized trials") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> pick_n(1, 200);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<KernelSpec> specs = corpus();
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const KernelSpec& spec = specs[i % specs.size()];
        const int n = pick_n(rng);
        const ApproximantParams params = make_approximant(spec, n);
        const double t = (2.0 * unit(rng) - 1.0) * 1.3 * params.lambda;
        if (!envelope_check(spec, params, t)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("difference e^{-q} - g_n decreases on [0, lambda_n]") {
    for (int n : {2, 10, 50}) {
        const ApproximantParams p = make_approximant(kT4, n);
        double prev = 1.0 / (n + 1.0); // d_n(0)
        for (int i = 1; i <= 200; ++i) {
            const double t = p.lambda * i / 200.0;
            const double d = std::exp(-q_eval(kT4, t)) - g_n_eval(kT4, p, t);
            CHECK(d <= prev + 1e-12);
            prev = d;
        }
    }
}

TEST_CASE("jn_bound formula and errors") {
    CHECK(jn_bound(kT4, 1.0, 1.0, 100) ==
          doctest::Approx(2.0 * std::exp(1.0) / 100.0).epsilon(1e-15));
    CHECK(jn_bound(kT4, 1.0, 1.0, 200) ==
          doctest::Approx(0.5 * jn_bound(kT4, 1.0, 1.0, 100)).epsilon(1e-15));
    CHECK(jn_bound(kT4, 2.0, 0.5, 10) == doctest::Approx(std::exp(1.0) / 10.0).epsilon(1e-15));
    // q(2) = 16 >= 10:
    CHECK_THROWS_AS(jn_bound(kT4, 1.0, 2.0, 10), Error);
    try {
        jn_bound(kT4, 1.0, 2.0, 10);
    } catch (const Error& e) {
        CHECK(e.code() == errc::n_too_small);
    }
}

TEST_CASE("kn_bound values, majorant sandwich and monotonicity") {
    const double k3 = kn_bound(kT4, 1.0, 3.0, kSet);
    CHECK(k3 < 1e-30);
    // exp(-t^4 + t) <= exp(-78 - 100 (t-3)) on [3, inf): slope of t^4 - t at 3 is 107
    CHECK(k3 <= 2.0 * std::exp(-78.0) / 100.0);
    CHECK(k3 >= 2.0 * std::exp(-78.0) / 107.0 * 0.9);

    const double k1 = kn_bound(kT4, 1.0, 1.0, kSet);
    const double k2 = kn_bound(kT4, 1.0, 2.0, kSet);
    CHECK(k1 > 0.0);
    CHECK(std::isfinite(k1));
    CHECK(k2 < k1);
    CHECK(k3 < k2);
}

TEST_CASE("n_for_epsilon self-consistency") {
    const ConvergenceBound cb = n_for_epsilon(kT4, 1.0, 1e-3, kSet);
    CHECK(cb.Jn_bound < 0.5e-3);
    CHECK(cb.Kn_bound < 0.5e-3);
    CHECK(cb.n_min > q_eval(kT4, cb.t1));
    CHECK(jn_bound(kT4, cb.M, cb.t1, cb.n_min) < 0.5 * cb.epsilon);
    CHECK(kn_bound(kT4, cb.M, cb.t1, kSet) < 0.5 * cb.epsilon);

    const ConvergenceBound tighter = n_for_epsilon(kT4, 1.0, 1e-4, kSet);
    CHECK(tighter.n_min >= cb.n_min);
    const ConvergenceBound wider = n_for_epsilon(kT4, 2.0, 1e-3, kSet);
    CHECK(wider.n_min >= cb.n_min);
}

TEST_CASE("empirical_gap: degenerate disc and decreasing trend") {
    const double at0 = empirical_gap(kT4, 20, 0.0, 1, kSet);
    const double direct =
        std::abs(cft(kT4, {0.0, 0.0}, kSet).re - cft_approx(kT4, 20, {0.0, 0.0}, kSet).re);
    CHECK(at0 == doctest::Approx(direct).epsilon(1e-12));
    CHECK(at0 >= 0.0);

    double prev = 1e9;
    for (int n : {10, 20, 40, 80}) {
        const double gap = empirical_gap(kT4, n, 1.0, 3, kSet);
        CHECK(gap <= prev + 2e-9);
        prev = gap;
    }
}

TEST_CASE("uniform convergence at the prescribed (M, epsilon) pairs") {
    for (auto [M, eps] : std::vector<std::pair<double, double>>{{1.0, 1e-2}, {2.0, 1e-2}}) {
        const ConvergenceBound cb = n_for_epsilon(kT4, M, eps, kSet);
        CHECK(empirical_gap(kT4, cb.n_min, M, 5, kSet) < eps);
    }
}
