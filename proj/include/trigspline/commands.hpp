#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trigspline/test_functions.hpp"

namespace trigspline {

/// Command implementations behind the CLI. Each prints human or CSV output
/// to the stream (or the --out path), returns the process exit code for
/// expected outcomes, and throws precondition_error / numerical_error for
/// invalid input or numerical failure (mapped to exit codes 2 and 3 by the
/// CLI shell).

struct GenOptions {
    std::string function;
    int N = 9;
    int variant = 0;
    int order = 1;
    std::string outPath;
};
int run_gen(const GenOptions& opt, std::ostream& out);

struct BuildOptions {
    std::string samplePath;
    double tol = 1e-12;
    std::string outPath;
};
int run_build(const BuildOptions& opt, std::ostream& out);

struct EvalOptions {
    std::string splinePath;
    std::vector<double> tList;  // used when resolution == 0
    int resolution = 0;
    int deriv = 0;
    double evalTol = 1e-12;
    std::string outPath;  // empty: CSV goes to `out`
};
int run_eval(const EvalOptions& opt, std::ostream& out);

struct VerifyOptions {
    std::string splinePath;
    std::string samplePath;
    double threshold = 1e-8;  // relative to the data scale
};
int run_verify(const VerifyOptions& opt, std::ostream& out);

struct ConvergeOptions {
    std::string function;
    std::vector<int> Ns;
    int order = 1;
    int variant = 0;
    int resolution = 1024;
    double tol = 1e-12;
    double evalTol = 1e-12;
    std::string outPath;
};
int run_converge(const ConvergeOptions& opt, std::ostream& out);

struct ConvergeRow {
    int N = 0;
    double maxError = 0.0;
};

/// Builds the spline of `order` from exact samples of fn for each N and
/// reports the max |spline - fn| over a uniform dense grid.
std::vector<ConvergeRow> convergence_errors(const TestFunction& fn,
                                            const std::vector<int>& Ns,
                                            int order, int variant,
                                            int resolution, double buildTol,
                                            double evalTol);

}  // namespace trigspline
