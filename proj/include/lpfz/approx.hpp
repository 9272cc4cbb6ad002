#pragma once

#include "lpfz/kernel.hpp"
#include "lpfz/quadrature.hpp"

namespace lpfz {

/// Index n together with the cached support half-width lambda_n.
struct ApproximantParams {
    int n;
    double lambda;
};

ApproximantParams make_approximant(const KernelSpec& spec, int n, double tol = 1e-12);

/// g_n(t): 0 outside [-lambda_n, lambda_n], else (n/(n+1))(1 - q(t)/n)^{n+1}.
/// Always within [0, exp(-q(t))].
double g_n_eval(const KernelSpec& spec, const ApproximantParams& params, double t);

/// True iff 0 <= g_n(t) <= exp(-q(t)); exposed as a property-test hook,
/// the contract is that it never returns false.
bool envelope_check(const KernelSpec& spec, const ApproximantParams& params, double t);

/// Everything needed for |G(z) - G_n(z)| < epsilon on the disc |z| <= M:
/// split point t1, the n threshold, and the two bound values at n_min.
struct ConvergenceBound {
    double M;
    double t1;
    int n_min;
    double epsilon;
    double Jn_bound;
    double Kn_bound;
};

/// 2 int_{t1}^inf exp(-q(t) + M t) dt -- the n-independent tail bound K_n.
double kn_bound(const KernelSpec& spec, double M, double t1,
                const QuadratureSettings& settings = {});

/// The closed-form bound 2 exp(M t1) / (M n), valid once n > q(t1);
/// throws n_too_small otherwise.
double jn_bound(const KernelSpec& spec, double M, double t1, int n);

/// Chooses t1 by doubling until kn_bound < epsilon/2, then
/// n_min = floor(max(q(t1), 4 exp(M t1)/(M epsilon))) + 1.
ConvergenceBound n_for_epsilon(const KernelSpec& spec, double M, double epsilon,
                               const QuadratureSettings& settings = {});

/// max |G(z) - G_n(z)| over a polar grid (grid_size radii x grid_size angles,
/// boundary included) of the disc |z| <= M.  M = 0 degenerates to z = 0.
double empirical_gap(const KernelSpec& spec, int n, double M, int grid_size,
                     const QuadratureSettings& settings = {});

} // namespace lpfz
