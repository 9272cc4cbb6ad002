#pragma once

#include <string>
#include <vector>

#include "lpfz/quadrature.hpp"

namespace lpfz::cli {

/// Resolved command configuration; every field lands in the report so runs
/// are reproducible from their own output.
struct RunConfig {
    std::string command;
    std::string kernel_path;
    std::string kernel2_path;
    std::string output_dir = ".";

    double R = 0.0;
    double Y = 1.0;
    double step = 0.0; // 0 = resolution heuristic
    double refine_tol = 1e-9;

    int n = 0;
    int k = 2;
    double M = 0.0;
    double epsilon = 0.0;
    int grid = 5;
    std::vector<int> factors = {1, 2, 4};

    std::vector<double> wgrid;
    double sigma_max = 1.0;
    double sigma_step = 0.05;
    bool control = false;
    int trials = 200;

    double w = 0.0;
    int max_m = 6;
    double ring_radius = 0.5;
    int ring_samples = 64;

    double tmax = 3.0;
    int points = 25;
    std::vector<double> radii = {4.0, 8.0, 16.0};
    std::string target = "g"; // g | gn | f4 | hn
    double test_radius = 0.0; // 0 = truncation_R / 3

    QuadratureSettings settings;
};

/// Exit codes: 0 success, 1 operational error, 2 falsification finding,
/// 64 usage error.
enum ExitCode { kOk = 0, kOperationalError = 1, kFalsified = 2, kUsage = 64 };

/// Parses argv (without the program name). Throws lpfz::Error with
/// code parse_error on usage problems (message carries the CLI11 text).
RunConfig parse_args(const std::vector<std::string>& args);

/// Dispatches a parsed config; writes report.json plus command-specific
/// CSV artifacts into output_dir.
int run(const RunConfig& config);

/// parse + run + error reporting; what main() calls.
int main_impl(const std::vector<std::string>& args);

} // namespace lpfz::cli
