#pragma once

#include <string>

#include "lpfz/kernel.hpp"

namespace lpfz::cli {

/// Parses the flat key/value kernel-spec document:
///
///   # comment
///   form = parametric        (or: cosh)
///   k = 1.0                  (parametric; required)
///   m = 2                    (parametric; required)
///   mu = 0.0                 (parametric; optional, default 0)
///   betas = 1.0, 2.0         (parametric; optional, default empty)
///   a = 1.0                  (cosh; required)
///
/// Unknown or duplicate keys and malformed numbers are parse errors; the
/// result is validated before being returned.
KernelSpec parse_kernel_text(const std::string& text, const std::string& origin = "<string>");

/// Reads and parses a kernel-spec file; throws io_error when unreadable.
KernelSpec load_kernel_file(const std::string& path);

} // namespace lpfz::cli
