#include "trigspline/series.hpp"

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

/// Compensated accumulator; keeps summation error at a few eps regardless of
/// term count.
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

// Derivatives of f(x) = (a x + b)^-s.
double f_val(double a, double b, int s, double x) { return 1.0 / ipow(a * x + b, s); }
double f_d1(double a, double b, int s, double x) {
    return -s * a / ipow(a * x + b, s + 1);
}
double f_d3(double a, double b, int s, double x) {
    return -double(s) * (s + 1) * (s + 2) * a * a * a / ipow(a * x + b, s + 3);
}
double f_d5_mag(double a, double b, int s, double x) {
    return double(s) * (s + 1) * (s + 2) * (s + 3) * (s + 4) * ipow(a, 5) /
           ipow(a * x + b, s + 5);
}

/// Euler-Maclaurin value of sum_{m=A}^inf (a m + b)^-s through the second
/// Bernoulli correction term.
double em_tail(double a, double b, int s, double A) {
    double integral = std::pow(a * A + b, 1.0 - s) / (a * (s - 1));
    return integral + 0.5 * f_val(a, b, s, A) - f_d1(a, b, s, A) / 12.0 +
           f_d3(a, b, s, A) / 720.0;
}

/// Remainder bound for em_tail: magnitude of the next (B6) correction term.
/// Valid because f is completely monotone.
double em_tail_bound(double a, double b, int s, double A) {
    return f_d5_mag(a, b, s, A) / 30240.0;
}

/// Euler-Maclaurin value of sum_{i=0}^inf g(A + 2i), g(x) = f(x) - f(x+1),
/// i.e. the alternating tail sum_{m=A}^inf (-1)^(m-A) f(m) with leading
/// sign +. Step-2 EM on the paired monotone series; the telescoped integral
/// is just integral_A^{A+1} f.
double em_tail_alt(double a, double b, int s, double A) {
    double integral = (std::pow(a * A + b, 1.0 - s) -
                       std::pow(a * (A + 1) + b, 1.0 - s)) /
                      (a * (s - 1));
    double g0 = f_val(a, b, s, A) - f_val(a, b, s, A + 1);
    double g1 = f_d1(a, b, s, A) - f_d1(a, b, s, A + 1);
    double g3 = f_d3(a, b, s, A) - f_d3(a, b, s, A + 1);
    return 0.5 * integral + 0.5 * g0 - (2.0 / 12.0) * g1 + (8.0 / 720.0) * g3;
}

double em_tail_alt_bound(double a, double b, int s, double A) {
    return (64.0 / 30240.0) * f_d5_mag(a, b, s, A);
}

}  // namespace

void LacunarySumSpec::validate() const {
    if (N < 3 || N % 2 == 0)
        throw precondition_error("grid size must be odd and >= 3, got " +
                                 std::to_string(N));
    const int n = (N - 1) / 2;
    if (k < 1 || k > n)
        throw precondition_error("harmonic index " + std::to_string(k) +
                                 " outside 1.." + std::to_string(n));
    const int maxExp = family.order() == 1 ? 3 : 4;
    if (exponent < 2 || exponent > maxExp)
        throw precondition_error("exponent " + std::to_string(exponent) +
                                 " outside 2.." + std::to_string(maxExp) +
                                 " for this family");
    if (family.kind == FrequencyFamily::Kind::Residue &&
        (family.residue < 0 || family.residue > 2))
        throw precondition_error("residue class outside 0..2");
    if (family.kind == FrequencyFamily::Kind::Residue && family.alternating)
        throw precondition_error("alternating weights are first-order only");
}

double collapsed_sum(const LacunarySumSpec& spec, double tol) {
    spec.validate();
    if (!(tol >= 1e-15))
        throw precondition_error("collapsed_sum tolerance must be >= 1e-15");

    const double a = spec.family.stride(spec.N);
    const double b = spec.family.offset(spec.N, spec.k);
    const int s = spec.exponent;
    const int m0 = spec.family.first_index();
    const bool alt = spec.family.alternating;

    std::int64_t M = 32;
    const std::int64_t cap = std::int64_t(1) << 22;
    while (M < cap) {
        double A = double(m0) + double(M);
        double bound = alt ? em_tail_alt_bound(a, b, s, A)
                           : em_tail_bound(a, b, s, A);
        if (bound <= tol) break;
        M <<= 1;
    }

    KahanAcc acc;
    for (std::int64_t m = m0; m < m0 + M; ++m)
        acc.add(spec.family.weight(m) / ipow(a * double(m) + b, s));

    const double A = double(m0) + double(M);
    double tail = alt ? spec.family.weight(m0 + M) * em_tail_alt(a, b, s, A)
                      : em_tail(a, b, s, A);
    return acc.sum + tail;
}

namespace detail {

double integral_tail_bound(double a, double b, int e, double A) {
    if (e <= 1) return std::numeric_limits<double>::infinity();
    return std::pow(a * (A - 1) + b, 1.0 - e) / (a * (e - 1));
}

std::int64_t blind_term_count(double a, double b, int e, int m0, double tol,
                              std::int64_t cap) {
    std::int64_t M = 32;
    if (e <= 1) return cap;
    while (M < cap) {
        double A = double(m0) + double(M);
        double bound = f_val(a, b, e, A) + std::pow(a * A + b, 1.0 - e) / (a * (e - 1));
        if (bound <= tol) break;
        M <<= 1;
    }
    return std::min(M, cap);
}

double fused_pair_eval(double cosCoef, double sinCoef,
                       const FrequencyFamily& family, int s, int N, int k,
                       double t, int deriv, double tol, double* tail_bound) {
    LacunarySumSpec spec{family, s, N, k};
    spec.validate();
    if (deriv < 0 || deriv > 2)
        throw precondition_error("derivative order outside 0..2");
    const int e = s - deriv;
    if (e < 1)
        throw precondition_error("series would diverge: s - deriv < 1");
    if (e >= 3 && !(tol >= 1e-15))
        throw precondition_error("tolerance must be >= 1e-15");
    if (e == 2 && !(tol >= 1e-8))
        throw precondition_error("tolerance must be >= 1e-8 for s - deriv = 2");

    const double a = family.stride(N);
    const double b = family.offset(N, k);
    const int m0 = family.first_index();
    const std::int64_t cap = e <= 2 ? 1000000 : (std::int64_t(1) << 24);
    const std::int64_t M = blind_term_count(a, b, e, m0, tol, cap);

    // Rotation recurrence; per-step rounding is damped by the 1/freq^e factor,
    // so no re-anchoring is needed.
    const double theta0 = (a * m0 + b) * t;
    double c = std::cos(theta0), sn = std::sin(theta0);
    const double dc = std::cos(a * t), ds = std::sin(a * t);
    KahanAcc cosAcc, sinAcc;
    for (std::int64_t i = 0; i < M; ++i) {
        const std::int64_t m = m0 + i;
        const double w = family.weight(m) / ipow(a * double(m) + b, e);
        cosAcc.add(w * c);
        sinAcc.add(w * sn);
        const double cNext = c * dc - sn * ds;
        sn = sn * dc + c * ds;
        c = cNext;
    }

    if (tail_bound) {
        double A = double(m0) + double(M);
        *tail_bound = e <= 1 ? std::numeric_limits<double>::infinity()
                             : f_val(a, b, e, A) +
                                   std::pow(a * A + b, 1.0 - e) / (a * (e - 1));
    }

    const TrigTerm fromCos = differentiate_term(false, deriv);
    const TrigTerm fromSin = differentiate_term(true, deriv);
    double out = 0.0;
    out += cosCoef * fromCos.sign * (fromCos.is_sine ? sinAcc.sum : cosAcc.sum);
    out += sinCoef * fromSin.sign * (fromSin.is_sine ? sinAcc.sum : cosAcc.sum);
    return out;
}

}  // namespace detail

SeriesValue basis_eval(bool is_sine, const FrequencyFamily& family, int s,
                       int N, int k, double t, int deriv, double tol) {
    SeriesValue r;
    r.value = detail::fused_pair_eval(is_sine ? 0.0 : 1.0, is_sine ? 1.0 : 0.0,
                                      family, s, N, k, t, deriv, tol,
                                      &r.tail_bound);
    return r;
}

namespace {

void check_odd_grid(int N) {
    if (N < 3 || N % 2 == 0)
        throw precondition_error("grid size must be odd and >= 3, got " +
                                 std::to_string(N));
}

}  // namespace

SeriesTable series_constants_c1(int N, int gridVariant, double tol) {
    check_odd_grid(N);
    if (gridVariant != 0 && gridVariant != 1)
        throw precondition_error("grid variant must be 0 or 1");
    tol = std::min(std::max(tol, 1e-15), 1e-13);

    SeriesTable T;
    T.N = N;
    T.n = (N - 1) / 2;
    T.gridVariant = gridVariant;
    T.order = 1;
    T.p1_.resize(std::size_t(4) * T.n);
    T.det_.resize(T.n);

    const bool alt = gridVariant == 1;
    for (int k = 1; k <= T.n; ++k) {
        for (int s = 2; s <= 3; ++s) {
            T.p1_[T.idx1(0, s, k)] =
                collapsed_sum({FrequencyFamily::plus(alt), s, N, k}, tol);
            T.p1_[T.idx1(1, s, k)] =
                collapsed_sum({FrequencyFamily::minus(alt), s, N, k}, tol);
        }
        const double p3 = T.plus(3, k), m3 = T.minus(3, k);
        const double p2 = T.plus(2, k), m2 = T.minus(2, k);
        T.det_[k - 1] = p3 * m2 + m3 * p2;
        const double scale = std::hypot(p3, m3) * std::hypot(p2, m2);
        if (!(std::abs(T.det_[k - 1]) > 1e-12 * scale))
            throw numerical_error("singular per-harmonic system at k = " +
                                  std::to_string(k));
    }
    return T;
}

SeriesTable series_constants_c2(int N, double tol) {
    check_odd_grid(N);
    tol = std::min(std::max(tol, 1e-15), 1e-13);

    SeriesTable T;
    T.N = N;
    T.n = (N - 1) / 2;
    T.gridVariant = 0;
    T.order = 2;
    T.p2_.resize(std::size_t(9) * T.n);
    T.det_.resize(T.n);

    for (int k = 1; k <= T.n; ++k) {
        for (int r = 0; r < 3; ++r)
            for (int s = 2; s <= 4; ++s)
                T.p2_[T.idx2(r, s, k)] =
                    collapsed_sum({FrequencyFamily::res(r), s, N, k}, tol);

        // Rows ordered s = 4, 3, 2; columns r = 0, 1, 2.
        double G[3][3];
        for (int row = 0; row < 3; ++row)
            for (int r = 0; r < 3; ++r) G[row][r] = T.residue(r, 4 - row, k);
        const double det = G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1]) -
                           G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0]) +
                           G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
        T.det_[k - 1] = det;
        double scale = 1.0;
        for (int row = 0; row < 3; ++row)
            scale *= std::hypot(std::hypot(G[row][0], G[row][1]), G[row][2]);
        if (!(std::abs(det) > 1e-12 * scale))
            throw numerical_error(
                "numerically singular derivative system at k = " +
                std::to_string(k));
    }
    return T;
}

}  // namespace trigspline
