#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "lpfz/kernel.hpp"
#include "oracles.hpp"

using namespace lpfz;

namespace {
const KernelSpec kT4 = KernelSpec::parametric(1.0, 2);
const KernelSpec kT6 = KernelSpec::parametric(1.0, 3);
const KernelSpec kT4Exp = KernelSpec::parametric(1.0, 2, 1.0);
const KernelSpec kT4Beta = KernelSpec::parametric(1.0, 2, 0.0, {2.0});
const KernelSpec kCosh1 = KernelSpec::cosh_example(1.0);

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return errc::io_error; // sentinel: nothing thrown
}
} // namespace

TEST_CASE("validate accepts admissible kernels") {
    CHECK_NOTHROW(validate(kT4));
    CHECK_NOTHROW(validate(kT6));
    CHECK_NOTHROW(validate(kT4Exp));
    CHECK_NOTHROW(validate(kT4Beta));
    CHECK_NOTHROW(validate(KernelSpec::cosh_example(1.0)));
    CHECK_NOTHROW(validate(KernelSpec::parametric(1.0, 1, 0.5)));        // mu rescues m=1
    CHECK_NOTHROW(validate(KernelSpec::parametric(1.0, 1, 0.0, {2.0}))); // beta rescues m=1
}

TEST_CASE("validate rejects each invariant violation with its own code") {
    CHECK(code_of([] { validate(KernelSpec::parametric(0.0, 2)); }) == errc::non_positive_k);
    CHECK(code_of([] { validate(KernelSpec::parametric(-1.0, 2)); }) == errc::non_positive_k);
    CHECK(code_of([] { validate(KernelSpec::parametric(1.0, 0)); }) == errc::zero_m);
    CHECK(code_of([] { validate(KernelSpec::parametric(1.0, 2, -0.5)); }) == errc::negative_mu);
    CHECK(code_of([] { validate(KernelSpec::parametric(1.0, 2, 0.0, {1.0, -2.0})); }) ==
          errc::non_positive_beta);
    // pure t^2 kernel: no t^4-or-higher term
    CHECK(code_of([] { validate(KernelSpec::parametric(1.0, 1)); }) == errc::growth_too_slow);
    CHECK(code_of([] { validate(KernelSpec::cosh_example(0.0)); }) == errc::invalid_argument);
}

TEST_CASE("q_eval closed-form values") {
    CHECK(q_eval(kT4, 2.0) == 16.0);
    CHECK(q_eval(kT4, -2.0) == 16.0);
    CHECK(q_eval(KernelSpec::cosh_example(2.0), 0.0) == 0.0);
    CHECK(q_eval(kT4, 0.0) == 0.0);
    CHECK(q_eval(kT4Beta, 2.0) == doctest::Approx(32.0).epsilon(1e-15));
    // overflow saturates; exp(-q) is then exactly 0
    const double q_big = q_eval(kT4Exp, 60.0);
    CHECK(std::isinf(q_big));
    CHECK(std::exp(-q_big) == 0.0);
}

TEST_CASE("q_eval evenness and monotonicity properties") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 50.0);
    for (const KernelSpec& spec : {kT4, kT6, kT4Exp, kT4Beta, kCosh1}) {
        for (int i = 0; i < 100; ++i) {
            const double t = dist(rng);
            CHECK(q_eval(spec, t) == q_eval(spec, -t)); // exact
            const double lo = 1e-3 + t * 0.5;
            const double hi = lo + 0.1 + t;
            if (std::isinf(q_eval(spec, hi))) continue;
            CHECK(q_eval(spec, lo) < q_eval(spec, hi));
        }
    }
}

TEST_CASE("q_prime values and finite-difference agreement") {
    CHECK(q_prime(kT4, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(q_prime(kT4, 0.0) == 0.0);
    CHECK(q_prime(kCosh1, 1.0) == doctest::Approx(oracle::sinh_series(1.0)).epsilon(1e-12));
    CHECK(q_prime(kCosh1, 1.0) == doctest::Approx(1.1752011936).epsilon(1e-9));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.1, 10.0);
    for (const KernelSpec& spec : {kT4, kT6, kT4Exp, kT4Beta, kCosh1}) {
        for (int i = 0; i < 100; ++i) {
            const double t = dist(rng);
            if (q_eval(spec, t * 1.01) > 1e12) continue; // stay in well-conditioned range
            const double h = 1e-6 * std::max(1.0, t);
            const double fd = (q_eval(spec, t + h) - q_eval(spec, t - h)) / (2.0 * h);
            CHECK(q_prime(spec, t) == doctest::Approx(fd).epsilon(1e-6));
        }
        CHECK(q_prime(spec, -1.25) == doctest::Approx(-q_prime(spec, 1.25)).epsilon(1e-15));
    }
}

TEST_CASE("lambda_n solves q(lambda) = n") {
    CHECK(lambda_n(kT4, 16) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(lambda_n(kT4, 1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(lambda_n(kCosh1, 1) == doctest::Approx(oracle::acosh_bisect(2.0)).epsilon(1e-13));
    CHECK(lambda_n(kCosh1, 1) == doctest::Approx(1.3169578969).epsilon(1e-10));
    CHECK_THROWS_AS(lambda_n(kT4, 0), Error);
}

TEST_CASE("lambda_n consistency and monotonicity up to n = 200") {
    for (const KernelSpec& spec : {kT4, kT6, kT4Exp, kCosh1}) {
        double prev = 0.0;
        for (int n = 1; n <= 200; ++n) {
            const double lam = lambda_n(spec, n);
            CHECK(lam > prev);
            prev = lam;
            CHECK(std::abs(q_eval(spec, lam) - n) <= 1e-10 * std::max(1.0, double(n)));
        }
    }
}

TEST_CASE("growth_witness recipe values") {
    const GrowthWitness w4 = growth_witness(kT4);
    CHECK(w4.alpha == 1.0);
    CHECK(w4.T > 1.0);
    CHECK(w4.T < 1.0001);

    const GrowthWitness we = growth_witness(kT4Exp);
    CHECK(we.alpha == 1.0);
    CHECK(we.T <= 1.01);

    // cosh series: a4 = a/24, T = (1/a4)^{1/(2-alpha)} = 24 for a = 1
    const GrowthWitness wc = growth_witness(kCosh1);
    CHECK(wc.alpha == 1.0);
    CHECK(wc.T == doctest::Approx(24.0).epsilon(1e-6));
}

TEST_CASE("growth_witness bound holds on a grid") {
    for (const KernelSpec& spec :
         {kT4, kT6, kT4Exp, kT4Beta, kCosh1, KernelSpec::parametric(0.5, 1, 0.25, {3.0})}) {
        const GrowthWitness w = growth_witness(spec);
        for (int i = 0; i < 200; ++i) {
            const double t = w.T + 9.0 * w.T * i / 199.0;
            CHECK(q_eval(spec, t) > std::pow(t, 2.0 + w.alpha));
        }
    }
}
