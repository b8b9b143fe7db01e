#pragma once

#include <cstdint>
#include <vector>

namespace trigspline {

/// Frequency family of a lacunary trigonometric series. The series run over
/// arithmetic progressions of frequencies:
///
///   Plus       :  m*N + k,         m = 0, 1, 2, ...   (m = 0 term is k itself)
///   Minus      :  m*N - k,         m = 1, 2, 3, ...   (all positive, k <= n < N)
///   Residue r  :  (3m + r)*N + k,  m = 0, 1, 2, ...   (first-order splines do
///                                                      not use these)
///
/// The alternating flag attaches weight (-1)^m to term m; it is only
/// meaningful for the half-spacing grid variant of first-order splines.
struct FrequencyFamily {
    enum class Kind { Plus, Minus, Residue };

    Kind kind = Kind::Plus;
    int residue = 0;          // 0..2, Residue kind only
    bool alternating = false;

    static FrequencyFamily plus(bool alternating = false) {
        return {Kind::Plus, 0, alternating};
    }
    static FrequencyFamily minus(bool alternating = false) {
        return {Kind::Minus, 0, alternating};
    }
    static FrequencyFamily res(int r) { return {Kind::Residue, r, false}; }

    /// Spline order this family belongs to (1 for Plus/Minus, 2 for Residue).
    int order() const { return kind == Kind::Residue ? 2 : 1; }

    /// First summation index m0.
    int first_index() const { return kind == Kind::Minus ? 1 : 0; }

    /// Frequency as an affine function of the term index: a*m + b.
    double stride(int N) const { return kind == Kind::Residue ? 3.0 * N : N; }
    double offset(int N, int k) const {
        switch (kind) {
            case Kind::Plus: return k;
            case Kind::Minus: return -k;
            default: return double(residue) * N + k;
        }
    }
    std::int64_t frequency(std::int64_t m, int N, int k) const {
        switch (kind) {
            case Kind::Plus: return m * N + k;
            case Kind::Minus: return m * N - k;
            default: return (3 * m + residue) * std::int64_t(N) + k;
        }
    }
    double weight(std::int64_t m) const {
        return (alternating && (m & 1)) ? -1.0 : 1.0;
    }

    bool operator==(const FrequencyFamily&) const = default;
};

/// One collapsed lacunary sum: sum over the family of weight(m)/frequency(m)^s.
struct LacunarySumSpec {
    FrequencyFamily family;
    int exponent = 2;  // s
    int N = 3;         // odd grid size, N = 2n + 1
    int k = 1;         // harmonic index, 1..n

    /// Throws precondition_error when any field is out of contract
    /// (s < 2 or s out of range for the family order, even or too-small N,
    /// k outside 1..n).
    void validate() const;
};

/// Sum of weight(m)/frequency(m)^s over the whole family, with absolute error
/// <= tol. Explicit partial sum plus an Euler-Maclaurin tail correction; for
/// alternating families consecutive terms are paired into a monotone series
/// before the same tail treatment. The term count is grown until the
/// closed-form remainder bound drops below tol.
double collapsed_sum(const LacunarySumSpec& spec, double tol);

/// Result of evaluating a truncated lacunary series: the partial sum plus the
/// oscillation-blind bound on the neglected tail that was actually achieved.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// Lacunary basis series evaluated anywhere, differentiated term by term.
///
///   is_sine = false :  sum w(m) cos(freq t) / freq^s
///   is_sine = true  :  sum w(m) sin(freq t) / freq^s
///
/// deriv in {0,1,2} differentiates term by term; the effective exponent is
/// e = s - deriv and must be >= 1. Truncation: M terms with tail bound
/// sum_{m>M} freq^-e <= tol. For e == 2 the term count is capped at 10^6 and
/// the achieved bound is reported instead (degraded accuracy, not an error);
/// for e == 1 the blind bound diverges, so the cap always applies and the
/// reported bound is infinite.
///
/// tol floors: 1e-15 for e >= 3, 1e-8 for e == 2.
SeriesValue basis_eval(bool is_sine, const FrequencyFamily& family, int s,
                       int N, int k, double t, int deriv, double tol);

/// Collapsed constants of every series a spline solve needs, plus the
/// per-harmonic system determinants. Immutable once built; shareable across
/// threads.
class SeriesTable {
public:
    int N = 0;
    int n = 0;            // (N - 1) / 2
    int gridVariant = 0;  // 0 or 1; alternating weights iff 1 (order 1 only)
    int order = 0;        // spline order p

    /// order 1 accessors: s in {2,3}, k in 1..n.
    double plus(int s, int k) const { return p1_[idx1(0, s, k)]; }
    double minus(int s, int k) const { return p1_[idx1(1, s, k)]; }

    /// order 2 accessor: r in {0,1,2}, s in {2,3,4}, k in 1..n.
    double residue(int r, int s, int k) const { return p2_[idx2(r, s, k)]; }

    /// Determinant of the per-harmonic system for harmonic k (2x2 for order 1,
    /// 3x3 for order 2). Nonzero for every k; checked at construction.
    double det(int k) const { return det_[k - 1]; }

    // Raw storage, laid out [family][s-2][k-1] resp. [r][s-2][k-1].
    std::vector<double> p1_;
    std::vector<double> p2_;
    std::vector<double> det_;

    std::size_t idx1(int fam, int s, int k) const {
        return (std::size_t(fam) * 2 + (s - 2)) * n + (k - 1);
    }
    std::size_t idx2(int r, int s, int k) const {
        return (std::size_t(r) * 3 + (s - 2)) * n + (k - 1);
    }
};

/// Collapsed constants for the first-order spline on grid variant 0 or 1
/// (variant 1 uses alternating weights). det[k] = plus3*minus2 + minus3*plus2.
SeriesTable series_constants_c1(int N, int gridVariant, double tol = 1e-13);

/// Collapsed constants for the second-order spline on grid variant 0.
/// det[k] is the determinant of the 3x3 matrix with rows s = 4, 3, 2 and
/// columns r = 0, 1, 2; a numerically singular matrix is a construction
/// error naming the offending k.
SeriesTable series_constants_c2(int N, double tol = 1e-13);

namespace detail {

/// What a trigonometric term turns into after `deriv` term-by-term
/// differentiations (the 1/freq^deriv factor handled separately):
///   cos -> (-sin) -> (-cos);  sin -> (+cos) -> (-sin)
struct TrigTerm {
    bool is_sine;
    double sign;
};
inline TrigTerm differentiate_term(bool is_sine, int deriv) {
    static constexpr TrigTerm cosRow[3] = {{false, 1.0}, {true, -1.0}, {false, -1.0}};
    static constexpr TrigTerm sinRow[3] = {{true, 1.0}, {false, 1.0}, {true, -1.0}};
    return is_sine ? sinRow[deriv] : cosRow[deriv];
}

/// Closed-form integral bound on the tail sum_{m>=A} (a m + b)^-e; the
/// standard integral test gives sum_{m>=A} f(m) <= integral_{A-1}^inf f.
double integral_tail_bound(double a, double b, int e, double A);

/// Number of explicit terms needed so the oscillation-blind tail bound
/// f(A) + integral_A^inf f drops below tol (capped at `cap`).
std::int64_t blind_term_count(double a, double b, int e, int m0, double tol,
                              std::int64_t cap);

/// Evaluates both trigonometric kinds of one truncated family series in a
/// single pass and accumulates cosCoef * (cos kind) + sinCoef * (sin kind).
/// Identical term set and ordering as basis_eval at the same tolerance.
double fused_pair_eval(double cosCoef, double sinCoef,
                       const FrequencyFamily& family, int s, int N, int k,
                       double t, int deriv, double tol, double* tail_bound);

}  // namespace detail

}  // namespace trigspline
