#include "lpfz/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpfz/util.hpp"

namespace lpfz {

namespace {

constexpr double kPi = 3.14159265358979323846;

int certified_sign(const RealValue& v) {
    if (std::abs(v.value) <= v.error_estimate) return 0;
    return v.value > 0.0 ? 1 : -1;
}

} // namespace

double default_scan_step(const std::vector<KernelSpec>& components) {
    if (components.empty()) raise(errc::invalid_argument, "need at least one component");
    double t_eff_sum = 0.0;
    for (const KernelSpec& spec : components) {
        auto decay = [&spec](double t) { return q_eval(spec, t); };
        t_eff_sum += truncation_point(decay, 1e-16);
    }
    return kPi / (4.0 * t_eff_sum);
}

std::vector<Bracket> scan_real_zeros(const RealEvaluator& f, double R, double step) {
    if (!(R > 0.0) || !(step > 0.0))
        raise(errc::invalid_argument, "scan needs R > 0 and step > 0");
    const int n = static_cast<int>(std::ceil(R / step)) + 1;
    std::vector<double> ts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ts[static_cast<size_t>(i)] = std::min(i * step, R);
    const std::vector<RealValue> vals =
        parallel_map<RealValue>(n, [&](int i) { return f(ts[static_cast<size_t>(i)]); });
    for (int i = 0; i < n; ++i)
        if (certified_sign(vals[static_cast<size_t>(i)]) == 0)
            raise(errc::inconclusive_sample,
                  "|f| within error band at t = " + fmt_double(ts[static_cast<size_t>(i)]));
    std::vector<Bracket> brackets;
    for (int i = 0; i + 1 < n; ++i) {
        if (ts[static_cast<size_t>(i)] == ts[static_cast<size_t>(i + 1)]) continue;
        if (certified_sign(vals[static_cast<size_t>(i)]) !=
            certified_sign(vals[static_cast<size_t>(i + 1)]))
            brackets.push_back({ts[static_cast<size_t>(i)], ts[static_cast<size_t>(i + 1)]});
    }
    return brackets;
}

double refine_zero(const RealEvaluator& f, Bracket bracket, double tol) {
    if (!(tol > 0.0)) raise(errc::invalid_argument, "refine_zero needs tol > 0");
    double a = bracket.a, b = bracket.b;
    if (!(a < b)) raise(errc::invalid_argument, "degenerate bracket");
    const int sa0 = certified_sign(f(a));
    const int sb0 = certified_sign(f(b));
    if (sa0 == 0 || sb0 == 0 || sa0 == sb0)
        raise(errc::lost_bracket, "bracket endpoints lack certified opposite signs");
    int sa = sa0;
    while (b - a > 2.0 * tol) {
        const double mid = 0.5 * (a + b);
        if (!(mid > a) || !(mid < b)) break;
        const int sm = certified_sign(f(mid));
        if (sm == 0)
            raise(errc::lost_bracket,
                  "sign undecidable within error band at t = " + fmt_double(mid));
        if (sm == sa)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

int winding_count(const ComplexEvaluator& F, Rectangle rect, int samples_per_side) {
    if (!(rect.R > 0.0) || !(rect.Y > 0.0))
        raise(errc::invalid_argument, "rectangle must have positive half-sizes");
    if (samples_per_side < 2) raise(errc::invalid_argument, "need at least 2 samples per side");

    // counterclockwise boundary of [-R, R] x [-Y, Y] in z = x + iy
    const double R = rect.R, Y = rect.Y;
    const double cx[5] = {R, R, -R, -R, R};
    const double cy[5] = {-Y, Y, Y, -Y, -Y};
    const int S = samples_per_side;
    const int total = 4 * S;
    std::vector<ComplexPoint> pts(static_cast<size_t>(total));
    for (int side = 0; side < 4; ++side) {
        for (int j = 0; j < S; ++j) {
            const double u = static_cast<double>(j) / S; // start included, end excluded
            const double x = cx[side] + u * (cx[side + 1] - cx[side]);
            const double y = cy[side] + u * (cy[side + 1] - cy[side]);
            pts[static_cast<size_t>(side * S + j)] = {x, -y};
        }
    }

    const std::vector<ComplexValue> vals =
        parallel_map<ComplexValue>(total, [&](int i) { return F(pts[static_cast<size_t>(i)]); });
    for (int i = 0; i < total; ++i) {
        const ComplexValue& v = vals[static_cast<size_t>(i)];
        if (v.abs() <= 3.0 * v.error_estimate)
            raise(errc::zero_on_contour, "|F| <= 3x error estimate at contour sample " +
                                             std::to_string(i));
    }

    double totalPhase = 0.0;
    double prev = std::atan2(vals[0].im, vals[0].re);
    for (int i = 1; i <= total; ++i) {
        const ComplexValue& v = vals[static_cast<size_t>(i % total)];
        const double th = std::atan2(v.im, v.re);
        const double d = std::remainder(th - prev, 2.0 * kPi);
        if (std::abs(d) >= 0.5 * kPi)
            raise(errc::phase_jump_too_large,
                  "phase step " + fmt_double(d) + " at contour sample " + std::to_string(i));
        totalPhase += d;
        prev = th;
    }
    const double wind = totalPhase / (2.0 * kPi);
    const long rounded = std::lround(wind);
    if (std::abs(wind - static_cast<double>(rounded)) > 0.25)
        raise(errc::phase_jump_too_large,
              "winding sum " + fmt_double(wind) + " is not close to an integer");
    if (rounded < 0)
        raise(errc::invalid_argument, "negative winding count: contour orientation broken");
    return static_cast<int>(rounded);
}

ZeroReport certify_transform(const ComplexEvaluator& F, double R, double Y, double scan_step,
                             double refine_tol, int initial_samples_per_side) {
    if (!(scan_step > 0.0)) raise(errc::invalid_argument, "certify needs scan_step > 0");
    auto f_real = [&F](double w) -> RealValue {
        const ComplexValue v = F({w, 0.0});
        return {v.re, v.error_estimate};
    };

    ZeroReport rep;
    rep.scan_R = R;
    rep.refine_tol = refine_tol;
    rep.rectangle = {R, Y};
    rep.zero_at_origin = false; // the scan certifies f(0) != 0 or throws

    double step = scan_step;
    for (int attempt = 0;; ++attempt) {
        rep.scan_step = step;
        const std::vector<Bracket> brackets = scan_real_zeros(f_real, R, step);
        rep.real_zeros.clear();
        for (const Bracket& br : brackets)
            rep.real_zeros.push_back(refine_zero(f_real, br, refine_tol));

        int samples = initial_samples_per_side;
        for (;;) {
            try {
                rep.winding_count = winding_count(F, rep.rectangle, samples);
                break;
            } catch (const Error& e) {
                if (e.code() == errc::phase_jump_too_large && samples < 16384)
                    samples *= 2;
                else
                    throw;
            }
        }

        const int expect = 2 * static_cast<int>(rep.real_zeros.size()) +
                           (rep.zero_at_origin ? 1 : 0);
        if (rep.winding_count == expect || attempt >= 2) break;
        if (rep.winding_count > expect) {
            step *= 0.25; // the scan may have missed a narrow crossing pair
        } else {
            break; // fewer contour zeros than real ones found: report as-is
        }
    }

    const int expect = 2 * static_cast<int>(rep.real_zeros.size()) +
                       (rep.zero_at_origin ? 1 : 0);
    rep.certified = (rep.winding_count == expect);
    if (!rep.certified)
        rep.note = "winding count " + std::to_string(rep.winding_count) + " != " +
                   std::to_string(expect) +
                   " from real zeros: non-real zeros or an unresolved real pair";
    return rep;
}

ZeroReport certify_real_zeros(const KernelSpec& spec, double R, double Y,
                              const QuadratureSettings& settings, double step,
                              double refine_tol) {
    if (step <= 0.0) step = default_scan_step({spec});
    auto F = [spec, settings](ComplexPoint z) { return cft(spec, z, settings); };
    return certify_transform(F, R, Y, step, refine_tol);
}

ZeroReport certify_real_zeros(const ExtendedKernel& ext, double R, double Y,
                              const QuadratureSettings& settings, double step,
                              double refine_tol) {
    if (ext.components.empty())
        raise(errc::invalid_argument, "extended kernel needs at least one component");
    if (step <= 0.0) step = default_scan_step(ext.components);
    auto F = [ext, settings](ComplexPoint z) { return cft_extended(ext, z, settings); };
    return certify_transform(F, R, Y, step, refine_tol);
}

double estimate_order(const ComplexEvaluator& F, const std::vector<double>& radii) {
    if (radii.size() < 3) raise(errc::invalid_argument, "need at least 3 radii");
    for (size_t i = 0; i < radii.size(); ++i)
        if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1])))
            raise(errc::invalid_argument, "radii must be positive and increasing");

    constexpr int kSamples = 64;
    std::vector<double> xs, ys;
    for (double r : radii) {
        const std::vector<double> mods = parallel_map<double>(kSamples, [&](int i) {
            const double th = 2.0 * kPi * i / kSamples;
            return F({r * std::cos(th), -r * std::sin(th)}).abs();
        });
        const double mx = *std::max_element(mods.begin(), mods.end());
        if (!(mx > 1.0))
            raise(errc::non_finite, "max modulus <= 1 on |z| = " + fmt_double(r) +
                                        "; log log is undefined");
        xs.push_back(std::log(r));
        ys.push_back(std::log(std::log(mx)));
    }
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) raise(errc::invalid_argument, "degenerate radii for the fit");
    return (n * sxy - sx * sy) / denom;
}

} // namespace lpfz
