#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trigspline/grid.hpp"
#include "trigspline/series.hpp"

namespace trigspline {

/// Raw partial sum of the first M family terms plus a rigorous bracket of the
/// remainder: integral bounds for monotone families, first-omitted-term
/// bounds for alternating ones. The true sum lies in
/// [partial + tail_low, partial + tail_high].
struct BruteSum {
    double partial = 0.0;
    double tail_low = 0.0;
    double tail_high = 0.0;
};

BruteSum brute_sum(const LacunarySumSpec& spec, std::int64_t M);

/// Coefficients recovered by the dense collocation least-squares solve,
/// plus the solve diagnostics. Field layout mirrors HermiteSpline.
struct CollocationResult {
    double a00 = 0.0;
    std::vector<double> a0, a1, a2;
    std::vector<double> b0, b1, b2;
    double residual_norm = 0.0;
    int rank = 0;
};

/// Re-derives the first-order spline coefficients without the collapsed-sum
/// identities: every basis function (and its derivative) is evaluated at the
/// N nodes by truncated term-by-term summation, and the stacked
/// 2N x (4n + 1) system [values; first derivatives] = [f; df] is solved in
/// the least-squares sense. With centered df the system is consistent up to
/// one expected row dependency, so the residual norm doubles as a
/// consistency diagnostic. M is the base truncation level of the
/// Richardson-extrapolated partial sums; the extrapolation accuracy is
/// pinned against the Euler-Maclaurin constants in the unit tests.
CollocationResult collocation_solve_c1(const SampleSet& f, const SampleSet& df,
                                       const UniformGrid& grid,
                                       std::int64_t M = 2048);

/// Second-order analogue: 3N x (6n + 1) system with two expected
/// dependencies (centered df and d2f).
CollocationResult collocation_solve_c2(const SampleSet& f, const SampleSet& df,
                                       const SampleSet& d2f,
                                       const UniformGrid& grid,
                                       std::int64_t M = 2048);

/// Central difference (fn(t+h) - fn(t-h)) / (2h).
double fd_derivative(const std::function<double(double)>& fn, double t,
                     double h);

namespace detail {

/// Partial sums of sum_m w trig(freq t)/freq^e at geometric truncation levels
/// M, 2M, 4M, ..., extrapolated to the limit. The leading tail exponent is
/// detected from the partial sums themselves (the collapse identities are
/// never consulted), then three Richardson eliminations with consecutive
/// integer exponents are applied. Intended for node arguments, where the
/// tail has a clean power expansion in 1/M.
double extrapolated_series(bool is_sine, const FrequencyFamily& family, int e,
                           int N, int k, double t, std::int64_t baseM,
                           int levels = 5);

}  // namespace detail

}  // namespace trigspline
