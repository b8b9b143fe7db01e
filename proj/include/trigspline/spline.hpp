#pragma once

#include <array>
#include <memory>
#include <vector>

#include "trigspline/grid.hpp"
#include "trigspline/series.hpp"
#include "trigspline/trig_poly.hpp"

namespace trigspline {

/// Means subtracted from the derivative samples during the build. They
/// contribute nothing to spline values, mu1 to first-derivative evaluations
/// and mu2 to second-derivative evaluations, so evaluation at the nodes
/// returns the original uncentered derivative samples.
struct MeanLedger {
    double mu1 = 0.0;
    double mu2 = 0.0;
};

/// Trigonometric Hermite spline of smoothness class C^order built on a
/// uniform grid. order 1 uses the Plus family (coefficients a0/b0) and the
/// Minus family (a1/b1) with value exponent 3; order 2 uses the three residue
/// families (a0/a1/a2, b0/b1/b2) with value exponent 4 and requires grid
/// variant 0. Immutable after construction and shareable across threads.
struct HermiteSpline {
    int order = 1;
    UniformGrid grid;
    double a00 = 0.0;
    std::vector<double> a0, a1, a2;
    std::vector<double> b0, b1, b2;
    MeanLedger ledger;
    std::shared_ptr<const SeriesTable> table;
    double buildTol = 1e-12;

    int sBase() const { return order == 1 ? 3 : 4; }
    int numFamilies() const { return order + 1; }
    int numSeries() const { return 2 * numFamilies() * grid.n; }

    const std::vector<double>& cosCoeff(int family) const {
        return family == 0 ? a0 : family == 1 ? a1 : a2;
    }
    const std::vector<double>& sinCoeff(int family) const {
        return family == 0 ? b0 : family == 1 ? b1 : b2;
    }
    /// Series family `i` of this spline, as evaluated away from the nodes
    /// (never alternating: the half-spacing grid variant changes only the
    /// collapsed node constants, not the basis series).
    FrequencyFamily family(int i) const {
        if (order == 1)
            return i == 0 ? FrequencyFamily::plus() : FrequencyFamily::minus();
        return FrequencyFamily::res(i);
    }
};

/// Builds the C^1 spline interpolating f and df at the nodes of `grid`
/// (variant 0 or 1). df is centered internally; its mean lands in the ledger.
/// Per harmonic k the coefficients solve, with gP3/gM3/gP2/gM2 the collapsed
/// constants of the Plus/Minus families at exponents 3 and 2:
///
///   cosine pair:  gP3 a0_k + gM3 a1_k = A0_k      sine pair:  gP3 b0_k - gM3 b1_k = B0_k
///                -gP2 a0_k + gM2 a1_k = B1_k                  gP2 b0_k + gM2 b1_k = A1_k
///
/// where (A0, B0) interpolate f and (A1, B1) the centered df.
/// Passing a prebuilt table (matching N/variant/order) skips reconstruction.
HermiteSpline build_c1(const SampleSet& f, const SampleSet& df,
                       const UniformGrid& grid, double tol,
                       std::shared_ptr<const SeriesTable> table = nullptr);

/// Builds the C^2 spline interpolating f, df and d2f on a variant-0 grid.
/// Per harmonic the cosine triple solves G(k) x = (A0_k, -B1_k, -A2_k) and
/// the sine triple G(k) x = (B0_k, A1_k, -B2_k), G(k) the 3x3 matrix of
/// residue-family constants with rows s = 4, 3, 2.
HermiteSpline build_c2(const SampleSet& f, const SampleSet& df,
                       const SampleSet& d2f, const UniformGrid& grid,
                       double tol,
                       std::shared_ptr<const SeriesTable> table = nullptr);

/// Spline value or derivative at arbitrary t, by truncated summation of the
/// basis series with a per-series tolerance budget of tol / numSeries()
/// (clamped to what the series exponent admits). Total error is bounded by
/// tol x (1 + sum |coefficients|), except on the capped s - deriv = 2 path
/// where eval_with_bound reports the achieved bound.
double eval(const HermiteSpline& spline, double t, int deriv, double tol);

/// Same as eval but also reports the accumulated truncation bound.
SeriesValue eval_with_bound(const HermiteSpline& spline, double t, int deriv,
                            double tol);

/// Value or derivative at grid node j (0-based) through the collapsed-sum
/// constants: exact up to the table accuracy, never the slow series path.
double eval_at_node(const HermiteSpline& spline, int j, int deriv);

struct ResidualReport {
    int order = 1;
    std::array<double, 3> maxAbs{};                 // per derivative order
    std::array<std::vector<double>, 3> perNode{};   // orders 0..order
};

/// Interpolation residuals |eval(t_j, q) - samples_q[j]| for q = 0..order.
ResidualReport node_residuals(const HermiteSpline& spline, const SampleSet& f,
                              const SampleSet& df,
                              const SampleSet* d2f = nullptr);

/// Values on the uniform dense grid t_i = 2pi i / resolution, i = 0..res-1.
/// Folds every series frequency into its residue class mod resolution, which
/// is exact on this grid, so the result matches pointwise eval within the
/// same tolerance at a fraction of the cost.
std::vector<double> dense_eval(const HermiteSpline& spline, int resolution,
                               int deriv, double tol);

}  // namespace trigspline
