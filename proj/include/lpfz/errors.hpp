#pragma once

#include <stdexcept>
#include <string>

namespace lpfz {

enum class errc {
    // kernel validation
    non_positive_k,
    zero_m,
    negative_mu,
    non_positive_beta,
    growth_too_slow,
    // quadrature
    no_decay,
    max_subdivisions_exceeded,
    non_finite,
    // approximation bounds
    n_too_small,
    // zero location / counting
    inconclusive_sample,
    lost_bracket,
    zero_on_contour,
    phase_jump_too_large,
    // factorization
    not_certified,
    non_positive_constant,
    unmatched_divisor_zero,
    // positivity
    tail_not_converged,
    // generic
    invalid_argument,
    io_error,
    parse_error,
};

const char* errc_name(errc c);

/// Library-wide exception; code() identifies the failure class.
class Error : public std::runtime_error {
public:
    Error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& what) { throw Error(c, what); }

} // namespace lpfz
