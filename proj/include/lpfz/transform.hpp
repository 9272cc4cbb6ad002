#pragma once

#include <complex>
#include <vector>

#include "lpfz/kernel.hpp"
#include "lpfz/quadrature.hpp"

namespace lpfz {

/// Evaluation coordinate z = w - i*sigma.
struct ComplexPoint {
    double w = 0.0;
    double sigma = 0.0;

    static ComplexPoint from_std(std::complex<double> z) { return {z.real(), -z.imag()}; }
    std::complex<double> to_std() const { return {w, -sigma}; }
};

struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
    double error_estimate = 0.0;

    std::complex<double> value() const { return {re, im}; }
    double abs() const { return std::abs(value()); }
};

ComplexValue complex_mul(const ComplexValue& a, const ComplexValue& b);

/// Convolution class member: the factors q_1, q_2, ... of an iterated
/// convolution of basis kernels.  A single component is the basis class.
struct ExtendedKernel {
    std::vector<KernelSpec> components;
};

/// G(z) = int_{-inf}^{inf} exp(-q(t)) exp(izt) dt, via the even-kernel
/// reduction  2 int_0^inf e^{-q} cosh(sigma t) cos(w t) dt
///        + 2i int_0^inf e^{-q} sinh(sigma t) sin(w t) dt,
/// so the imaginary part on the real axis is exactly zero.
ComplexValue cft(const KernelSpec& spec, ComplexPoint z,
                 const QuadratureSettings& settings = {});

/// G_n(z) = int_{-lambda_n}^{lambda_n} (n/(n+1)) (1 - q(t)/n)^{n+1} e^{izt} dt.
ComplexValue cft_approx(const KernelSpec& spec, int n, ComplexPoint z,
                        const QuadratureSettings& settings = {});

/// F_{2k}(z) = int exp(-y^{2k}) exp(izy) dy, k >= 2.
ComplexValue f2k(int k, ComplexPoint z, const QuadratureSettings& settings = {});

/// H_n(z) = G_n(z) * F_4(z).
ComplexValue hn(const KernelSpec& spec, int n, ComplexPoint z,
                const QuadratureSettings& settings = {});

/// c_{[q1,q2]}(t) = int exp(-q1(v)) exp(-q2(t-v)) dv for a two-component
/// extended kernel.  Even in t, strictly positive, strictly decreasing in |t|.
/// The v-range is truncated where q1 alone exhausts the tail budget
/// (exp(-q2) <= 1 majorant).
double convolve_kernels(const ExtendedKernel& ext, double t,
                        const QuadratureSettings& settings = {});

/// Product of the component transforms; by the convolution theorem this is
/// the transform of the iterated convolution.
ComplexValue cft_extended(const ExtendedKernel& ext, ComplexPoint z,
                          const QuadratureSettings& settings = {});

} // namespace lpfz
