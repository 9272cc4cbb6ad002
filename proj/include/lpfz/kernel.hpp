#pragma once

#include <vector>

#include "lpfz/errors.hpp"

namespace lpfz {

enum class KernelForm { parametric, cosh_example };

/// Kernel exponent q(t).  Parametric form:
///   q(t) = k * t^{2m} * exp(mu*t^2) * prod_n (1 + t^2/beta_n^2)
/// Cosh form (closed-form member with an infinite root product):
///   q(t) = a * (cosh(t) - 1)
struct KernelSpec {
    KernelForm form = KernelForm::parametric;
    double k = 1.0;
    int m = 1;
    double mu = 0.0;
    std::vector<double> betas;
    double a = 1.0; // cosh amplitude, cosh_example only

    static KernelSpec parametric(double k, int m, double mu = 0.0,
                                 std::vector<double> betas = {});
    static KernelSpec cosh_example(double a);
};

/// Witness for the super-quadratic growth condition:
/// q(t) > t^{2+alpha} for all t >= T, with alpha in (0, 2).
struct GrowthWitness {
    double T;
    double alpha;
};

/// Checks all KernelSpec invariants and returns the spec unchanged.
/// Pure-t^2 kernels (m = 1, mu = 0, no betas) grow too slowly and are
/// rejected: the class needs a nonzero t^4-or-higher series term.
KernelSpec validate(const KernelSpec& spec);

/// q(t); even in t by construction, q(0) = 0.  Saturates to +infinity on
/// overflow (callers treat exp(-inf) as exactly 0).
double q_eval(const KernelSpec& spec, double t);

/// dq/dt; odd in t, zero at t = 0, strictly positive for t > 0.
double q_prime(const KernelSpec& spec, double t);

/// The unique lambda > 0 with q(lambda) = n, to absolute tolerance tol.
/// Bracketed bisection (doubling from t = 1) plus a Newton polish.
double lambda_n(const KernelSpec& spec, int n, double tol = 1e-12);

/// (T, alpha) such that q(t) > t^{2+alpha} on [T, inf), built from a
/// monomial lower bound a*t^p <= q(t) with p >= 4; alpha is fixed at 1.
GrowthWitness growth_witness(const KernelSpec& spec);

} // namespace lpfz
