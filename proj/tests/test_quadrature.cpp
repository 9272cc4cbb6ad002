#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "lpfz/quadrature.hpp"
#include "oracles.hpp"

using namespace lpfz;

namespace {

struct CorpusItem {
    const char* name;
    std::function<IntegralValue(const QuadratureSettings&)> compute;
    double exact;
};

// Ten closed-form integrals covering Gaussian/gamma decay, shifts and
// polynomial-times-cosine oscillation.
std::vector<CorpusItem> corpus() {
    auto gauss = [](double t) { return std::exp(-t * t); };
    auto quart = [](double t) { return std::exp(-t * t * t * t); };
    auto expo = [](double t) { return std::exp(-t); };
    auto one = [](double) { return 1.0; };
    auto para = [](double t) { return 1.0 - t * t; };
    return {
        {"gauss w0", [=](const QuadratureSettings& s) {
             return integrate_decaying(gauss, 0.0, 0.0, OscMode::cos, s);
         }, 0.5 * std::sqrt(M_PI)},
        {"quartic w0", [=](const QuadratureSettings& s) {
             return integrate_decaying(quart, 0.0, 0.0, OscMode::cos, s);
         }, oracle::gamma_fn(1.25)},
        {"gauss cos2", [=](const QuadratureSettings& s) {
             return integrate_decaying(gauss, 0.0, 2.0, OscMode::cos, s);
         }, oracle::gauss_cos(2.0)},
        {"gauss sin2", [=](const QuadratureSettings& s) {
             return integrate_decaying(gauss, 0.0, 2.0, OscMode::sin, s);
         }, oracle::kDawsonInt},
        {"exp cos10", [=](const QuadratureSettings& s) {
             return integrate_decaying(expo, 0.0, 10.0, OscMode::cos, s);
         }, 1.0 / 101.0},
        {"gauss shifted", [=](const QuadratureSettings& s) {
             return integrate_decaying(gauss, 1.0, 0.0, OscMode::cos, s);
         }, oracle::kGaussShift},
        {"unit box w0", [=](const QuadratureSettings& s) {
             return integrate_finite(one, 0.0, 1.0, 0.0, OscMode::cos, s);
         }, 1.0},
        {"unit box w5", [=](const QuadratureSettings& s) {
             return integrate_finite(one, 0.0, 1.0, 5.0, OscMode::cos, s);
         }, std::sin(5.0) / 5.0},
        {"parabola cos2", [=](const QuadratureSettings& s) {
             return integrate_finite(para, -1.0, 1.0, 2.0, OscMode::cos, s);
         }, oracle::parabola_cos(2.0)},
        {"parabola cos37", [=](const QuadratureSettings& s) {
             return integrate_finite(para, -1.0, 1.0, 37.0, OscMode::cos, s);
         }, oracle::parabola_cos(37.0)},
    };
}

const std::vector<QuadratureSettings> kLevels = {
    {1e-6, 1e-12, 2000}, {1e-8, 1e-13, 2000}, {1e-10, 1e-14, 2000}, {1e-12, 1e-15, 2000}};

} // namespace

TEST_CASE("truncation_point: quartic decay with tiny budget") {
    auto decay = [](double t) { return t * t * t * t; };
    const double T = truncation_point(decay, 1e-16);
    // independent oracle: solve exp(-T^4)/(4T^3) = 1e-16 by bisection
    auto bound = [](double T) { return std::exp(-T * T * T * T) / (4.0 * T * T * T); };
    double lo = 1.0, hi = 5.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bound(mid) > 1e-16 ? lo : hi) = mid;
    }
    const double T_oracle = 0.5 * (lo + hi); // about 2.36
    CHECK(T >= T_oracle - 0.05);
    CHECK(T <= T_oracle + 1.5);
    // true tail is then certainly below budget
    CHECK(oracle::simpson([](double t) { return std::exp(-t * t * t * t); }, T, T + 3.0) <=
          1e-16);
}

TEST_CASE("truncation_point: loose budget stops before t = 1") {
    auto decay = [](double t) { return t * t; };
    const double T = truncation_point(decay, 0.5);
    CHECK(T <= 1.0);
    CHECK(0.5 * std::sqrt(M_PI) * std::erfc(T) <= 0.5); // erfc oracle for the true tail
}

TEST_CASE("truncation_point: eventually increasing decay is enough") {
    auto decay = [](double t) { return t * t * t * t - 3.0 * t; };
    CHECK(truncation_point(decay, 1e-12) > 0.0);
    CHECK(std::isfinite(truncation_point(decay, 1e-12)));
}

TEST_CASE("truncation_point: no decay raises") {
    CHECK_THROWS_AS(truncation_point([](double t) { return std::sin(t); }, 1e-20), Error);
    CHECK_THROWS_AS(truncation_point([](double t) { return -t; }, 1e-6), Error);
    try {
        truncation_point([](double t) { return -t; }, 1e-6);
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_decay);
    }
}

TEST_CASE("corpus: reported error bounds true error at every settings level") {
    for (const CorpusItem& item : corpus()) {
        INFO(item.name);
        for (const QuadratureSettings& s : kLevels) {
            const IntegralValue r = item.compute(s);
            CHECK(std::abs(r.value - item.exact) <= r.error_estimate);
            CHECK(r.error_estimate >= 0.0);
        }
    }
}

TEST_CASE("corpus: tightening rel_tol never worsens the true error") {
    for (const CorpusItem& item : corpus()) {
        INFO(item.name);
        double prev = -1.0;
        for (const QuadratureSettings& s : kLevels) {
            const double err = std::abs(item.compute(s).value - item.exact);
            if (prev >= 0.0) {
                // allow roundoff-floor noise once both are essentially exact
                CHECK(err <= prev + 2e-15 * std::max(1.0, std::abs(item.exact)));
            }
            prev = err;
        }
    }
}

TEST_CASE("linearity within combined error estimates") {
    auto f = [](double t) { return std::exp(-t * t); };
    auto g = [](double t) { return std::exp(-t * t * t * t); };
    const double a = 2.5, b = -1.3;
    auto combined = [&](double t) { return a * f(t) + b * g(t); };
    const QuadratureSettings s;
    const IntegralValue If = integrate_decaying(f, 0.0, 3.0, OscMode::cos, s);
    const IntegralValue Ig = integrate_decaying(g, 0.0, 3.0, OscMode::cos, s);
    // |b| e^{-t^4} dominates near 0 but a e^{-t^2} controls the tail, so the
    // automatic -log|f| decay stays valid for the combination
    const IntegralValue Ic = integrate_decaying(combined, 0.0, 3.0, OscMode::cos, s);
    const double tol = std::abs(a) * If.error_estimate + std::abs(b) * Ig.error_estimate +
                       Ic.error_estimate;
    CHECK(std::abs(Ic.value - (a * If.value + b * Ig.value)) <= tol);
}

TEST_CASE("oscillation robustness up to w = 200") {
    const QuadratureSettings s;
    for (double w : {25.0, 50.0, 100.0, 200.0}) {
        const IntegralValue box =
            integrate_finite([](double) { return 1.0; }, 0.0, 1.0, w, OscMode::cos, s);
        CHECK(std::abs(box.value - std::sin(w) / w) <= box.error_estimate);
        const IntegralValue para = integrate_finite([](double t) { return 1.0 - t * t; }, -1.0,
                                                    1.0, w, OscMode::cos, s);
        CHECK(std::abs(para.value - oracle::parabola_cos(w)) <= para.error_estimate);
        // Gaussian at w = 200: true value underflows; the estimate must cover it
        const IntegralValue gw = integrate_decaying([](double t) { return std::exp(-t * t); },
                                                    0.0, w, OscMode::cos, s);
        CHECK(std::abs(gw.value - oracle::gauss_cos(w)) <= gw.error_estimate);
    }
}

TEST_CASE("integrate_finite: boxed examples") {
    const QuadratureSettings s;
    CHECK(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, 0.0, OscMode::cos, s).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    const IntegralValue at_pi =
        integrate_finite([](double) { return 1.0; }, 0.0, 1.0, M_PI, OscMode::cos, s);
    CHECK(std::abs(at_pi.value) <= std::max(s.abs_tol, at_pi.error_estimate));
    const IntegralValue para =
        integrate_finite([](double t) { return 1.0 - t * t; }, -1.0, 1.0, 2.0, OscMode::cos, s);
    CHECK(para.value == doctest::Approx(oracle::parabola_cos(2.0)).epsilon(1e-12));
}

TEST_CASE("sin mode over a finite box") {
    const QuadratureSettings s;
    // int_0^pi sin(t) dt = 2
    CHECK(integrate_finite([](double) { return 1.0; }, 0.0, M_PI, 1.0, OscMode::sin, s).value ==
          doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("error paths: subdivision cap and non-finite integrands") {
    QuadratureSettings tiny;
    tiny.max_subdivisions = 3;
    CHECK_THROWS_AS(integrate_decaying([](double t) { return std::exp(-t * t); }, 0.0, 50.0,
                                       OscMode::cos, tiny),
                    Error);
    try {
        integrate_decaying([](double t) { return std::exp(-t * t); }, 0.0, 50.0, OscMode::cos,
                           tiny);
    } catch (const Error& e) {
        CHECK(e.code() == errc::max_subdivisions_exceeded);
    }

    auto bad = [](double t) { return t < 1.0 ? 1.0 : std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(integrate_finite(bad, 0.0, 2.0, 0.0, OscMode::cos, QuadratureSettings{}),
                    Error);
    try {
        integrate_finite(bad, 0.0, 2.0, 0.0, OscMode::cos, QuadratureSettings{});
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_finite);
    }
}

TEST_CASE("truncation point is recorded") {
    const IntegralValue r = integrate_decaying([](double t) { return std::exp(-t * t); }, 0.0,
                                               0.0, OscMode::cos, QuadratureSettings{});
    CHECK(r.truncation_point > 1.0);
    CHECK(r.truncation_point < 20.0);
}
