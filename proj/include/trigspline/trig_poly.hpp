#pragma once

#include <vector>

#include "trigspline/grid.hpp"

namespace trigspline {

/// Coefficients of the trigonometric polynomial
///   T(t) = a0/2 + sum_{k=1..n} (a_k cos kt + b_k sin kt)
/// interpolating one sample set on its grid.
struct TrigPolyCoeffs {
    double a0 = 0.0;
    std::vector<double> a;
    std::vector<double> b;
    int derivOrder = 0;

    int n() const { return int(a.size()); }
};

/// Discrete Fourier coefficients of the interpolating polynomial:
///   a0 = (2/N) sum v_j,  a_k = (2/N) sum v_j cos(k t_j),
///   b_k = (2/N) sum v_j sin(k t_j).
/// Direct O(N^2) transform; exact interpolation at the source nodes follows
/// from discrete orthogonality on both grid variants.
TrigPolyCoeffs interp_coeffs(const SampleSet& samples);

/// Value of the polynomial (or of its first or second derivative) at t.
double eval_trig_poly(const TrigPolyCoeffs& coeffs, double t, int deriv = 0);

}  // namespace trigspline
