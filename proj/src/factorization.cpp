#include "lpfz/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpfz/util.hpp"

namespace lpfz {

ProductRep build_product(const ComplexEvaluator& F, const ZeroReport& report) {
    if (!report.certified)
        raise(errc::not_certified, "zero report is not certified; refusing to build a product");
    const double c = F({0.0, 0.0}).re;
    if (!(c > 0.0))
        raise(errc::non_positive_constant, "F(0) = " + fmt_double(c) + " must be positive");
    ProductRep rep;
    rep.c = c;
    rep.zeros = report.real_zeros;
    rep.truncation_R = report.rectangle.R;
    return rep;
}

ComplexValue eval_product(const ProductRep& rep, ComplexPoint z) {
    const std::complex<double> z2 = z.to_std() * z.to_std();
    std::complex<double> v(rep.c, 0.0);
    for (double alpha : rep.zeros) v *= 1.0 - z2 / (alpha * alpha);
    return {v.real(), v.imag(), 0.0};
}

double compare_product(const ComplexEvaluator& F, const ProductRep& rep, double test_radius,
                       int grid) {
    if (!(test_radius > 0.0) || grid < 1)
        raise(errc::invalid_argument, "compare_product needs test_radius > 0 and grid >= 1");
    const double f0 = F({0.0, 0.0}).abs();
    std::vector<ComplexPoint> pts;
    pts.push_back({0.0, 0.0});
    for (int i = 1; i <= grid; ++i) {
        const double r = test_radius * i / grid;
        for (int j = 0; j < grid; ++j) {
            const double th = 2.0 * 3.14159265358979323846 * j / grid;
            pts.push_back({r * std::cos(th), -r * std::sin(th)});
        }
    }
    const std::vector<double> devs =
        parallel_map<double>(static_cast<int>(pts.size()), [&](int i) {
            const ComplexPoint z = pts[static_cast<size_t>(i)];
            const ComplexValue fv = F(z);
            const ComplexValue pv = eval_product(rep, z);
            return std::abs(fv.value() - pv.value()) / (fv.abs() + f0);
        });
    return *std::max_element(devs.begin(), devs.end());
}

ProductRep divide_products(const ProductRep& h_rep, const ProductRep& f4_rep, double match_tol,
                           std::vector<std::string>* notes) {
    if (!(match_tol > 0.0)) raise(errc::invalid_argument, "match_tol must be positive");
    if (!(f4_rep.c > 0.0))
        raise(errc::non_positive_constant, "divisor constant must be positive");

    std::vector<bool> used(h_rep.zeros.size(), false);
    for (double beta : f4_rep.zeros) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        double second_d = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < h_rep.zeros.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(h_rep.zeros[i] - beta);
            if (d < best_d) {
                second_d = best_d;
                best_d = d;
                best = static_cast<int>(i);
            } else if (d < second_d) {
                second_d = d;
            }
        }
        if (best < 0 || best_d > match_tol)
            raise(errc::unmatched_divisor_zero,
                  "divisor zero " + fmt_double(beta) + " has no partner within " +
                      fmt_double(match_tol));
        if (second_d <= match_tol && notes)
            notes->push_back("ambiguous twin: two zeros within match_tol of " + fmt_double(beta));
        used[static_cast<size_t>(best)] = true;
    }

    ProductRep out;
    out.c = h_rep.c / f4_rep.c;
    for (size_t i = 0; i < h_rep.zeros.size(); ++i)
        if (!used[i]) out.zeros.push_back(h_rep.zeros[i]);
    out.truncation_R = std::min(h_rep.truncation_R, f4_rep.truncation_R);
    return out;
}

} // namespace lpfz
