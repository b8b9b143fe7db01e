#include "trigspline/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

#include "trigspline/errors.hpp"

namespace trigspline {

namespace {

double ipow(double x, int e) {
    double r = x;
    for (int i = 1; i < e; ++i) r *= x;
    return r;
}

struct KahanAcc {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

BruteSum brute_sum(const LacunarySumSpec& spec, std::int64_t M) {
    spec.validate();
    if (M < 1) throw precondition_error("term count must be >= 1");

    const double a = spec.family.stride(spec.N);
    const double b = spec.family.offset(spec.N, spec.k);
    const int s = spec.exponent;
    const int m0 = spec.family.first_index();

    KahanAcc acc;
    for (std::int64_t m = m0; m < m0 + M; ++m)
        acc.add(spec.family.weight(m) / ipow(a * double(m) + b, s));

    BruteSum out;
    out.partial = acc.sum;
    const double A = double(m0) + double(M);  // first omitted index
    if (spec.family.alternating) {
        // Alternating with strictly decreasing magnitudes: the remainder lies
        // between 0 and its first term.
        const double first =
            spec.family.weight(m0 + M) / ipow(a * A + b, s);
        out.tail_low = std::min(0.0, first);
        out.tail_high = std::max(0.0, first);
    } else {
        // integral_A^inf f < tail < integral_{A-1}^inf f for decreasing f.
        out.tail_low = std::pow(a * A + b, 1.0 - s) / (a * (s - 1));
        out.tail_high = std::pow(a * (A - 1) + b, 1.0 - s) / (a * (s - 1));
    }
    return out;
}

namespace detail {

double extrapolated_series(bool is_sine, const FrequencyFamily& family, int e,
                           int N, int k, double t, std::int64_t baseM,
                           int levels) {
    if (baseM < 8 || levels < 3)
        throw precondition_error("extrapolation needs baseM >= 8, levels >= 3");

    const double a = family.stride(N);
    const double b = family.offset(N, k);
    const int m0 = family.first_index();

    // Partial sums at truncation levels baseM * 2^i, one continued pass.
    std::vector<double> S(levels);
    const double theta0 = (a * m0 + b) * t;
    double c = std::cos(theta0), sn = std::sin(theta0);
    const double dc = std::cos(a * t), ds = std::sin(a * t);
    KahanAcc acc;
    std::int64_t m = m0;
    for (int lvl = 0; lvl < levels; ++lvl) {
        const std::int64_t upto = m0 + (baseM << lvl);
        for (; m < upto; ++m) {
            const double w =
                family.weight(m) / ipow(a * double(m) + b, e);
            acc.add(w * (is_sine ? sn : c));
            const double cNext = c * dc - sn * ds;
            sn = sn * dc + c * ds;
            c = cNext;
        }
        S[lvl] = acc.sum;
    }

    // Converged already (typically a node where this trig kind vanishes).
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                         (1.0 + std::abs(S.back()));
    std::vector<double> d(levels - 1);
    double dmax = 0.0;
    for (int i = 0; i + 1 < levels; ++i) {
        d[i] = S[i + 1] - S[i];
        dmax = std::max(dmax, std::abs(d[i]));
    }
    if (dmax <= noise) return S.back();

    // Leading tail exponent q from the last clean difference ratio:
    // d_i ~ const * M_i^-q  =>  d_i / d_{i+1} = 2^q.
    int q = e - 1 >= 1 ? e - 1 : 1;  // analytic default
    const double lo = std::abs(d[levels - 2]);
    if (lo > noise) {
        const double ratio = std::abs(d[levels - 3] / d[levels - 2]);
        if (ratio > 1.2)
            q = std::min(8, std::max(1, int(std::lround(std::log2(ratio)))));
    }

    // Three eliminations with consecutive integer exponents q, q+1, q+2.
    std::vector<double> cur = S;
    for (int p = q; p < q + 3 && cur.size() > 1; ++p) {
        const double w = std::pow(2.0, p);
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            next[i] = (w * cur[i + 1] - cur[i]) / (w - 1.0);
        cur.swap(next);
    }
    return cur.back();
}

}  // namespace detail

namespace {

/// One collocation matrix column entry: the (rowDeriv)-th derivative of the
/// given basis series at node t, by extrapolated truncated summation.
double basis_entry(bool is_sine, const FrequencyFamily& fam, int sBase,
                   int rowDeriv, int N, int k, double t, std::int64_t M) {
    const auto term = detail::differentiate_term(is_sine, rowDeriv);
    return term.sign * detail::extrapolated_series(term.is_sine, fam,
                                                   sBase - rowDeriv, N, k, t,
                                                   M);
}

CollocationResult solve_collocation(const UniformGrid& grid, int order,
                                    const std::vector<const SampleSet*>& data,
                                    std::int64_t M) {
    const int N = grid.N;
    const int n = grid.n;
    const int numFam = order + 1;
    const int sBase = order == 1 ? 3 : 4;
    const int rows = (order + 1) * N;
    const int cols = 2 * numFam * n + 1;

    std::vector<FrequencyFamily> fams;
    if (order == 1) {
        fams.push_back(FrequencyFamily::plus());
        fams.push_back(FrequencyFamily::minus());
    } else {
        for (int r = 0; r < 3; ++r) fams.push_back(FrequencyFamily::res(r));
    }

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd rhs(rows);
    for (int q = 0; q <= order; ++q) {
        for (int j = 0; j < N; ++j) {
            const int row = q * N + j;
            const double t = grid.nodes[j];
            rhs(row) = data[q]->values[j];
            A(row, 0) = q == 0 ? 0.5 : 0.0;
            int col = 1;
            for (int fi = 0; fi < numFam; ++fi)
                for (int k = 1; k <= n; ++k, ++col)
                    A(row, col) =
                        basis_entry(false, fams[fi], sBase, q, N, k, t, M);
            for (int fi = 0; fi < numFam; ++fi)
                for (int k = 1; k <= n; ++k, ++col)
                    A(row, col) =
                        basis_entry(true, fams[fi], sBase, q, N, k, t, M);
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    const int rank = int(qr.rank());
    if (rank < cols)
        throw numerical_error(
            "collocation rank " + std::to_string(rank) + " below " +
            std::to_string(cols) +
            ": deficiency beyond the expected row dependency");
    const Eigen::VectorXd x = qr.solve(rhs);

    CollocationResult res;
    res.rank = rank;
    res.residual_norm = (A * x - rhs).norm();
    res.a00 = x(0);
    auto grab = [&](int block) {
        std::vector<double> v(n);
        for (int k = 0; k < n; ++k) v[k] = x(1 + block * n + k);
        return v;
    };
    res.a0 = grab(0);
    res.a1 = grab(1);
    if (order == 2) res.a2 = grab(2);
    res.b0 = grab(numFam);
    res.b1 = grab(numFam + 1);
    if (order == 2) res.b2 = grab(numFam + 2);
    return res;
}

void check_set(const SampleSet& s, const UniformGrid& grid, int order,
               const char* name) {
    if (!(s.grid == grid))
        throw precondition_error(std::string(name) +
                                 " sampled on a different grid");
    if (s.derivOrder != order)
        throw precondition_error(std::string(name) +
                                 " has unexpected derivative order");
}

}  // namespace

CollocationResult collocation_solve_c1(const SampleSet& f, const SampleSet& df,
                                       const UniformGrid& grid,
                                       std::int64_t M) {
    check_set(f, grid, 0, "f");
    check_set(df, grid, 1, "df");
    return solve_collocation(grid, 1, {&f, &df}, M);
}

CollocationResult collocation_solve_c2(const SampleSet& f, const SampleSet& df,
                                       const SampleSet& d2f,
                                       const UniformGrid& grid,
                                       std::int64_t M) {
    if (grid.variant != 0)
        throw precondition_error(
            "second-order collocation is defined on grid variant 0 only");
    check_set(f, grid, 0, "f");
    check_set(df, grid, 1, "df");
    check_set(d2f, grid, 2, "d2f");
    return solve_collocation(grid, 2, {&f, &df, &d2f}, M);
}

double fd_derivative(const std::function<double(double)>& fn, double t,
                     double h) {
    if (!(h > 0.0)) throw precondition_error("step must be positive");
    return (fn(t + h) - fn(t - h)) / (2.0 * h);
}

}  // namespace trigspline
