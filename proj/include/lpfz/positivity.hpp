#pragma once

#include <complex>
#include <vector>

#include "lpfz/factorization.hpp"
#include "lpfz/zeros.hpp"

namespace lpfz {

/// Even polynomial P(z) = sum_j coeffs[j] z^{2j}.  When built from real
/// zeros the factored form (c, zeros) is kept and used for exact
/// positivity arithmetic.
struct EvenPolynomial {
    std::vector<double> coeffs;
    bool real_rooted = false;
    double c = 1.0;
    std::vector<double> zeros; // positive zeros alpha_r, factored form only

    int degree_half() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double w) const;
    std::complex<double> eval(std::complex<double> z) const;

    static EvenPolynomial from_coeffs(std::vector<double> coeffs);
    static EvenPolynomial from_real_zeros(double c, std::vector<double> zeros);
    static EvenPolynomial from_product(const ProductRep& rep);
};

/// T_{N,m}(w) = (-1)^m 2 d^{2m}/du^{2m} [P(u+w) P(u-w)] at u = 0.
///
/// For a factored real-rooted P the computation runs over the per-zero
/// factor polynomials of Q(iu), whose coefficients are all nonnegative, so
/// the result is nonnegative exactly in floating point.  Otherwise the
/// coefficients of P(u+w) are formed by Taylor shift and convolved.
/// m > 2N returns exactly 0.
double t_coeff_exact(const EvenPolynomial& P, int m, double w);

struct BCoeff {
    double value = 0.0;
    double error_band = 0.0;
    bool conclusive = false; // |value| > 3 * error_band
};

/// B_{2m}(w) = (-1)^m 2 (2m)! c_{2m} with c_{2m} the Taylor coefficient of
/// Phi_w(u) = G(u+w) G(u-w) at u = 0, extracted by a discrete Cauchy ring
/// average over |u| = ring_radius (samples rounded up to a power of two,
/// at least 4m+8).  The radius is re-tried doubled/halved when the
/// coefficient-to-error ratio is poor; an entry whose magnitude stays inside
/// 3x its error band is returned with conclusive = false.
BCoeff b_coeff(const ComplexEvaluator& G, int m, double w,
               double ring_radius = 0.5, int ring_samples = 64);

struct CoefficientTable {
    double w = 0.0;
    int n_or_N = -1;  // caller-supplied label
    int max_m = 0;
    std::vector<double> values;
    std::vector<double> error_bands;
    std::vector<bool> conclusive;
};

CoefficientTable b_table(const ComplexEvaluator& G, double w, int max_m,
                         double ring_radius = 0.5, int ring_samples = 64);

/// (1/2) sum_m sigma^{2m}/(2m)! * values[m]; equals |G(w - i sigma)|^2 when
/// the truncated tail (estimated from the last two terms' ratio) is inside
/// tail_rel_tol, else throws tail_not_converged.
double series_reconstruct(const CoefficientTable& table, double sigma,
                          double tail_rel_tol = 1e-8);

struct MonotonicityEntry {
    double w, sigma, value, error;
};
struct MonotonicityViolation {
    double w, sigma_lo, sigma_hi, drop;
};
struct MonotonicityReport {
    std::vector<MonotonicityEntry> entries;          // w-major order
    std::vector<MonotonicityViolation> violations;   // drops beyond error bands
    bool clean() const { return violations.empty(); }
};

/// |F(w - i sigma)|^2 along increasing sigma for each w; an adjacent
/// decrease exceeding the combined error bands is a falsification finding.
/// sigma_grid must start at 0 and increase.
MonotonicityReport monotonicity_scan(const ComplexEvaluator& F,
                                     const std::vector<double>& w_grid,
                                     const std::vector<double>& sigma_grid);

} // namespace lpfz
