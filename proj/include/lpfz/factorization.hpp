#pragma once

#include <string>
#include <vector>

#include "lpfz/zeros.hpp"

namespace lpfz {

/// Truncated product c * prod_r (1 - z^2/alpha_r^2); the zero list is
/// complete up to radius truncation_R.
struct ProductRep {
    double c = 0.0;
    std::vector<double> zeros;
    double truncation_R = 0.0;
};

/// c = F(0), zeros and truncation radius from a certified report.
/// Throws not_certified / non_positive_constant.
ProductRep build_product(const ComplexEvaluator& F, const ZeroReport& report);

/// Exact arithmetic on the stored truncated product (error_estimate 0;
/// truncation error is the caller's concern, see compare_product).
ComplexValue eval_product(const ProductRep& rep, ComplexPoint z);

/// max over a polar grid of |z| <= test_radius of
/// |F(z) - eval_product(z)| / (|F(z)| + |F(0)|).
double compare_product(const ComplexEvaluator& F, const ProductRep& rep,
                       double test_radius, int grid);

/// Multiset quotient realizing G_n = H_n / F_4: each divisor zero must match
/// an h zero within match_tol (else unmatched_divisor_zero); matched zeros
/// are removed and the constants divided.  When two h zeros lie within
/// match_tol of one divisor zero the ambiguity is appended to notes.
ProductRep divide_products(const ProductRep& h_rep, const ProductRep& f4_rep,
                           double match_tol, std::vector<std::string>* notes = nullptr);

} // namespace lpfz
