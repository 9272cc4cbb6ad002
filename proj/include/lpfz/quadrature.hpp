#pragma once

#include <functional>

#include "lpfz/errors.hpp"

namespace lpfz {

struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
};

struct IntegralValue {
    double value = 0.0;
    double error_estimate = 0.0;
    double truncation_point = 0.0; // upper end actually integrated to
};

enum class OscMode { cos, sin };

using RealFn1 = std::function<double(double)>;

/// Returns T such that int_T^inf exp(-decay(t)) dt <= tail_budget.
///
/// Walks a geometric grid t_{j+1} = 1.25 t_j; at each step the secant slope
/// c over [t_{j-1}, t_j] gives the majorant exp(-decay(t_j) - c (t - t_j)),
/// valid for convex decay, so the tail is bounded by exp(-decay(t_j))/c.
/// Throws no_decay if no such point is found within the search range.
double truncation_point(const RealFn1& decay, double tail_budget);

/// int_0^inf f(t) * exp(sigma t) * {cos,sin}(w t) dt for super-exponentially
/// decaying f.  The integration range is cut at truncation_point() of
/// decay(t) = -log|f(t)| - sigma t with tail budget abs_tol/2; the budget is
/// added to the reported error estimate.  Adaptive Gauss-Kronrod 7/15 panels,
/// initial width capped at the half oscillation period pi/max(|w|, 1).
IntegralValue integrate_decaying(const RealFn1& f, double sigma, double w,
                                 OscMode mode, const QuadratureSettings& settings = {});

/// Same, with the decay majorant supplied explicitly (exact exponents avoid
/// the -log(f) roundtrip and stay valid where f underflows).
IntegralValue integrate_decaying(const RealFn1& f, const RealFn1& decay,
                                 double sigma, double w, OscMode mode,
                                 const QuadratureSettings& settings = {});

/// int_lo^hi f(t) * {cos,sin}(w t) dt, same adaptive scheme, no truncation.
IntegralValue integrate_finite(const RealFn1& f, double lo, double hi, double w,
                               OscMode mode, const QuadratureSettings& settings = {});

} // namespace lpfz
