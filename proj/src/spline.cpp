#include "trigspline/spline.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigspline/errors.hpp"

namespace trigspline {

namespace {

void check_samples(const SampleSet& s, const UniformGrid& grid, int order,
                   const char* name) {
    if (!(s.grid == grid))
        throw precondition_error(std::string(name) +
                                 " sampled on a different grid");
    if (s.derivOrder != order)
        throw precondition_error(std::string(name) + " has derivative order " +
                                 std::to_string(s.derivOrder) + ", expected " +
                                 std::to_string(order));
    if (int(s.values.size()) != grid.N)
        throw precondition_error(std::string(name) + " has wrong length");
}

void check_table(const SeriesTable& t, int N, int variant, int order) {
    if (t.N != N || t.gridVariant != variant || t.order != order)
        throw precondition_error("series table does not match the grid");
}

/// 3x3 solve by Gaussian elimination with partial pivoting.
std::array<double, 3> solve3(double G[3][3], std::array<double, 3> rhs, int k) {
    double A[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A[i][j] = G[i][j];
        A[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int i = col + 1; i < 3; ++i)
            if (std::abs(A[i][col]) > std::abs(A[piv][col])) piv = i;
        if (piv != col)
            for (int j = 0; j < 4; ++j) std::swap(A[col][j], A[piv][j]);
        if (A[col][col] == 0.0)
            throw numerical_error("singular per-harmonic system at k = " +
                                  std::to_string(k));
        for (int i = col + 1; i < 3; ++i) {
            const double f = A[i][col] / A[col][col];
            for (int j = col; j < 4; ++j) A[i][j] -= f * A[col][j];
        }
    }
    std::array<double, 3> x{};
    for (int i = 2; i >= 0; --i) {
        double v = A[i][3];
        for (int j = i + 1; j < 3; ++j) v -= A[i][j] * x[j];
        x[i] = v / A[i][i];
    }
    return x;
}

double series_tol_floor(int e) { return e >= 3 ? 1e-15 : 1e-8; }

double ledger_term(const HermiteSpline& sp, int deriv) {
    switch (deriv) {
        case 0: return sp.a00 / 2.0;
        case 1: return sp.ledger.mu1;
        default: return sp.ledger.mu2;
    }
}

}  // namespace

HermiteSpline build_c1(const SampleSet& f, const SampleSet& df,
                       const UniformGrid& grid, double tol,
                       std::shared_ptr<const SeriesTable> table) {
    check_samples(f, grid, 0, "f");
    check_samples(df, grid, 1, "df");
    if (!(tol >= 1e-15))
        throw precondition_error("build tolerance must be >= 1e-15");

    if (table)
        check_table(*table, grid.N, grid.variant, 1);
    else
        table = std::make_shared<const SeriesTable>(
            series_constants_c1(grid.N, grid.variant, tol));

    auto [dfc, mu1] = center_samples(df);
    const TrigPolyCoeffs cf = interp_coeffs(f);
    const TrigPolyCoeffs cdf = interp_coeffs(dfc);

    HermiteSpline sp;
    sp.order = 1;
    sp.grid = grid;
    sp.a00 = cf.a0;
    sp.ledger = {mu1, 0.0};
    sp.table = table;
    sp.buildTol = tol;
    const int n = grid.n;
    sp.a0.resize(n);
    sp.a1.resize(n);
    sp.b0.resize(n);
    sp.b1.resize(n);

    for (int k = 1; k <= n; ++k) {
        const double gP3 = table->plus(3, k), gM3 = table->minus(3, k);
        const double gP2 = table->plus(2, k), gM2 = table->minus(2, k);
        const double det = table->det(k);
        const double scale = std::hypot(gP3, gM3) * std::hypot(gP2, gM2);
        if (!(std::abs(det) > 1e-12 * scale))
            throw numerical_error("singular per-harmonic system at k = " +
                                  std::to_string(k));
        const double A0k = cf.a[k - 1], B0k = cf.b[k - 1];
        const double A1k = cdf.a[k - 1], B1k = cdf.b[k - 1];
        sp.a0[k - 1] = (A0k * gM2 - gM3 * B1k) / det;
        sp.a1[k - 1] = (gP3 * B1k + gP2 * A0k) / det;
        sp.b0[k - 1] = (B0k * gM2 + gM3 * A1k) / det;
        sp.b1[k - 1] = (gP3 * A1k - gP2 * B0k) / det;
    }
    return sp;
}

HermiteSpline build_c2(const SampleSet& f, const SampleSet& df,
                       const SampleSet& d2f, const UniformGrid& grid,
                       double tol, std::shared_ptr<const SeriesTable> table) {
    if (grid.variant != 0)
        throw precondition_error(
            "second-order splines are built on grid variant 0 only");
    check_samples(f, grid, 0, "f");
    check_samples(df, grid, 1, "df");
    check_samples(d2f, grid, 2, "d2f");
    if (!(tol >= 1e-15))
        throw precondition_error("build tolerance must be >= 1e-15");

    if (table)
        check_table(*table, grid.N, 0, 2);
    else
        table = std::make_shared<const SeriesTable>(
            series_constants_c2(grid.N, tol));

    auto [dfc, mu1] = center_samples(df);
    auto [d2fc, mu2] = center_samples(d2f);
    const TrigPolyCoeffs cf = interp_coeffs(f);
    const TrigPolyCoeffs c1 = interp_coeffs(dfc);
    const TrigPolyCoeffs c2 = interp_coeffs(d2fc);

    HermiteSpline sp;
    sp.order = 2;
    sp.grid = grid;
    sp.a00 = cf.a0;
    sp.ledger = {mu1, mu2};
    sp.table = table;
    sp.buildTol = tol;
    const int n = grid.n;
    for (auto* v : {&sp.a0, &sp.a1, &sp.a2, &sp.b0, &sp.b1, &sp.b2})
        v->resize(n);

    for (int k = 1; k <= n; ++k) {
        double G[3][3];
        for (int row = 0; row < 3; ++row)
            for (int r = 0; r < 3; ++r) G[row][r] = table->residue(r, 4 - row, k);

        const std::array<double, 3> rhsCos{cf.a[k - 1], -c1.b[k - 1],
                                           -c2.a[k - 1]};
        const std::array<double, 3> rhsSin{cf.b[k - 1], c1.a[k - 1],
                                           -c2.b[k - 1]};
        const auto ca = solve3(G, rhsCos, k);
        const auto cb = solve3(G, rhsSin, k);
        sp.a0[k - 1] = ca[0];
        sp.a1[k - 1] = ca[1];
        sp.a2[k - 1] = ca[2];
        sp.b0[k - 1] = cb[0];
        sp.b1[k - 1] = cb[1];
        sp.b2[k - 1] = cb[2];
    }
    return sp;
}

SeriesValue eval_with_bound(const HermiteSpline& sp, double t, int deriv,
                            double tol) {
    if (deriv < 0 || deriv > sp.order)
        throw precondition_error("derivative order exceeds the spline order");
    if (!(tol >= 1e-15))
        throw precondition_error("eval tolerance must be >= 1e-15");

    const int e = sp.sBase() - deriv;
    const double tolPer =
        std::max(tol / sp.numSeries(), series_tol_floor(e));

    SeriesValue out;
    out.value = ledger_term(sp, deriv);
    for (int i = 0; i < sp.numFamilies(); ++i) {
        const FrequencyFamily fam = sp.family(i);
        const auto& ac = sp.cosCoeff(i);
        const auto& bc = sp.sinCoeff(i);
        for (int k = 1; k <= sp.grid.n; ++k) {
            double tb = 0.0;
            out.value += detail::fused_pair_eval(ac[k - 1], bc[k - 1], fam,
                                                 sp.sBase(), sp.grid.N, k, t,
                                                 deriv, tolPer, &tb);
            out.tail_bound += (std::abs(ac[k - 1]) + std::abs(bc[k - 1])) * tb;
        }
    }
    return out;
}

double eval(const HermiteSpline& sp, double t, int deriv, double tol) {
    return eval_with_bound(sp, t, deriv, tol).value;
}

double eval_at_node(const HermiteSpline& sp, int j, int deriv) {
    if (j < 0 || j >= sp.grid.N)
        throw precondition_error("node index out of range");
    if (deriv < 0 || deriv > sp.order)
        throw precondition_error("derivative order exceeds the spline order");

    const int e = sp.sBase() - deriv;
    const double tj = sp.grid.nodes[j];
    double acc = ledger_term(sp, deriv);
    for (int i = 0; i < sp.numFamilies(); ++i) {
        const bool isMinus = sp.order == 1 && i == 1;
        const auto& ac = sp.cosCoeff(i);
        const auto& bc = sp.sinCoeff(i);
        const auto fromCos = detail::differentiate_term(false, deriv);
        const auto fromSin = detail::differentiate_term(true, deriv);
        for (int k = 1; k <= sp.grid.n; ++k) {
            const double g = sp.order == 1
                                 ? (i == 0 ? sp.table->plus(e, k)
                                           : sp.table->minus(e, k))
                                 : sp.table->residue(i, e, k);
            // Collapse: trig(freq t_j) = weight * trig(sigma k t_j) with
            // sigma = -1 for the Minus family (freq = mN - k), +1 otherwise;
            // the weight is already inside the table constant g.
            const double theta = (isMinus ? -1.0 : 1.0) * k * tj;
            const double ct = std::cos(theta), st = std::sin(theta);
            acc += ac[k - 1] * g * fromCos.sign * (fromCos.is_sine ? st : ct);
            acc += bc[k - 1] * g * fromSin.sign * (fromSin.is_sine ? st : ct);
        }
    }
    return acc;
}

ResidualReport node_residuals(const HermiteSpline& sp, const SampleSet& f,
                              const SampleSet& df, const SampleSet* d2f) {
    check_samples(f, sp.grid, 0, "f");
    check_samples(df, sp.grid, 1, "df");
    if (sp.order == 2) {
        if (!d2f)
            throw precondition_error(
                "second-order spline needs d2f samples to verify");
        check_samples(*d2f, sp.grid, 2, "d2f");
    }

    ResidualReport rep;
    rep.order = sp.order;
    for (int q = 0; q <= sp.order; ++q) {
        const SampleSet& ref = q == 0 ? f : q == 1 ? df : *d2f;
        auto& res = rep.perNode[q];
        res.resize(sp.grid.N);
        for (int j = 0; j < sp.grid.N; ++j) {
            res[j] = std::abs(eval_at_node(sp, j, q) - ref.values[j]);
            rep.maxAbs[q] = std::max(rep.maxAbs[q], res[j]);
        }
    }
    return rep;
}

std::vector<double> dense_eval(const HermiteSpline& sp, int resolution,
                               int deriv, double tol) {
    if (resolution < 2)
        throw precondition_error("dense resolution must be >= 2");
    if (deriv < 0 || deriv > sp.order)
        throw precondition_error("derivative order exceeds the spline order");
    if (!(tol >= 1e-15))
        throw precondition_error("eval tolerance must be >= 1e-15");

    const int e = sp.sBase() - deriv;
    const double tolPer =
        std::max(tol / sp.numSeries(), series_tol_floor(e));
    const std::int64_t cap = e <= 2 ? 1000000 : (std::int64_t(1) << 24);
    const int R = resolution;

    std::vector<double> cosBins(R, 0.0), sinBins(R, 0.0);
    for (int i = 0; i < sp.numFamilies(); ++i) {
        const FrequencyFamily fam = sp.family(i);
        const auto fromCos = detail::differentiate_term(false, deriv);
        const auto fromSin = detail::differentiate_term(true, deriv);
        const auto& ac = sp.cosCoeff(i);
        const auto& bc = sp.sinCoeff(i);
        for (int k = 1; k <= sp.grid.n; ++k) {
            const double a = fam.stride(sp.grid.N);
            const double b = fam.offset(sp.grid.N, k);
            const int m0 = fam.first_index();
            const std::int64_t M =
                detail::blind_term_count(a, b, e, m0, tolPer, cap);
            for (std::int64_t m = m0; m < m0 + M; ++m) {
                const std::int64_t freq = fam.frequency(m, sp.grid.N, k);
                double w = 1.0;
                for (int p = 0; p < e; ++p) w *= double(freq);
                w = 1.0 / w;
                const int bin = int(freq % R);
                const double ca = ac[k - 1] * fromCos.sign * w;
                const double cb = bc[k - 1] * fromSin.sign * w;
                (fromCos.is_sine ? sinBins : cosBins)[bin] += ca;
                (fromSin.is_sine ? sinBins : cosBins)[bin] += cb;
            }
        }
    }

    // Exact synthesis on the dense grid: trig(2 pi q i / R) depends only on
    // q*i mod R.
    constexpr double twoPi = 2.0 * std::numbers::pi;
    std::vector<double> cosLut(R), sinLut(R);
    for (int r = 0; r < R; ++r) {
        cosLut[r] = std::cos(twoPi * r / R);
        sinLut[r] = std::sin(twoPi * r / R);
    }
    const double base = ledger_term(sp, deriv);
    std::vector<double> out(R, base);
    for (int q = 0; q < R; ++q) {
        if (cosBins[q] == 0.0 && sinBins[q] == 0.0) continue;
        for (int i = 0; i < R; ++i) {
            const int r = int((std::int64_t(q) * i) % R);
            out[i] += cosBins[q] * cosLut[r] + sinBins[q] * sinLut[r];
        }
    }
    return out;
}

}  // namespace trigspline
