#include "lpfz/util.hpp"

#include <cstdio>
#include <cstdlib>

#include "lpfz/errors.hpp"

namespace lpfz {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_positive_k: return "NonPositiveK";
        case errc::zero_m: return "ZeroM";
        case errc::negative_mu: return "NegativeMu";
        case errc::non_positive_beta: return "NonPositiveBeta";
        case errc::growth_too_slow: return "GrowthTooSlow";
        case errc::no_decay: return "NoDecay";
        case errc::max_subdivisions_exceeded: return "MaxSubdivisionsExceeded";
        case errc::non_finite: return "NonFinite";
        case errc::n_too_small: return "NTooSmall";
        case errc::inconclusive_sample: return "InconclusiveSample";
        case errc::lost_bracket: return "LostBracket";
        case errc::zero_on_contour: return "ZeroOnContour";
        case errc::phase_jump_too_large: return "PhaseJumpTooLarge";
        case errc::not_certified: return "NotCertified";
        case errc::non_positive_constant: return "NonPositiveConstant";
        case errc::unmatched_divisor_zero: return "UnmatchedDivisorZero";
        case errc::tail_not_converged: return "TailNotConverged";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::io_error: return "IoError";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

int max_threads() {
    static const int cached = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw < 1) hw = 1;
        if (const char* env = std::getenv("LPFZ_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1 && v < 1024) hw = std::min<long>(hw, v);
        }
        return hw;
    }();
    return cached;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

} // namespace lpfz
