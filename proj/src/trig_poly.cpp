#include "trigspline/trig_poly.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "trigspline/errors.hpp"

namespace trigspline {

TrigPolyCoeffs interp_coeffs(const SampleSet& samples) {
    const int N = samples.grid.N;
    const int n = samples.grid.n;
    const int variant = samples.grid.variant;

    // Every angle k t_j is an integer multiple of pi/N: on variant 0,
    // k t_j = (pi/N) * 2k(j-1); on variant 1, (pi/N) * k(2j-1). Work from a
    // twiddle table of period P = 2N with its reflection symmetry enforced
    // bit-exactly (cos[P-r] = cos[r], sin[P-r] = -sin[r]), so mirrored nodes
    // cancel exactly and symmetric data produces exactly symmetric
    // coefficients.
    const int P = 2 * N;
    std::vector<double> ct(P), st(P);
    for (int r = 0; r <= N; ++r) {
        ct[r] = std::cos(std::numbers::pi * r / N);
        st[r] = std::sin(std::numbers::pi * r / N);
    }
    ct[0] = 1.0;
    st[0] = 0.0;
    ct[N] = -1.0;
    st[N] = 0.0;
    for (int r = N + 1; r < P; ++r) {
        ct[r] = ct[P - r];
        st[r] = -st[P - r];
    }

    // Mirror-node pairs (t and 2pi - t) are summed together, so the exact
    // cancellations of symmetric data survive in floating point. Variant 0
    // has its self-mirrored node at j = 0 (t = 0), variant 1 at the middle
    // node (t = pi).
    const auto& v = samples.values;
    const int self = variant == 0 ? 0 : (N - 1) / 2;
    const int firstPair = variant == 0 ? 1 : 0;
    auto mirror = [&](int j) { return variant == 0 ? N - j : N - 1 - j; };
    auto index = [&](int k, int j) {
        const int q = variant == 0 ? 2 * j : 2 * j + 1;
        return (k * q) % P;
    };

    TrigPolyCoeffs c;
    c.derivOrder = samples.derivOrder;
    c.a.assign(n, 0.0);
    c.b.assign(n, 0.0);

    double a0 = v[self];
    for (int j = firstPair; j <= (N - 1) / 2 - (1 - firstPair); ++j)
        a0 += v[j] + v[mirror(j)];
    c.a0 = 2.0 * a0 / N;

    for (int k = 1; k <= n; ++k) {
        const int rs = index(k, self);
        double ak = v[self] * ct[rs];
        double bk = v[self] * st[rs];
        for (int j = firstPair; j <= (N - 1) / 2 - (1 - firstPair); ++j) {
            const int r = index(k, j);
            const int rm = index(k, mirror(j));
            ak += v[j] * ct[r] + v[mirror(j)] * ct[rm];
            bk += v[j] * st[r] + v[mirror(j)] * st[rm];
        }
        c.a[k - 1] = 2.0 * ak / N;
        c.b[k - 1] = 2.0 * bk / N;
    }
    return c;
}

double eval_trig_poly(const TrigPolyCoeffs& coeffs, double t, int deriv) {
    if (deriv < 0 || deriv > 2)
        throw precondition_error("derivative order must be 0, 1 or 2");
    double out = deriv == 0 ? coeffs.a0 / 2.0 : 0.0;
    for (int k = 1; k <= coeffs.n(); ++k) {
        const double ck = std::cos(k * t), sk = std::sin(k * t);
        const double a = coeffs.a[k - 1], b = coeffs.b[k - 1];
        switch (deriv) {
            case 0: out += a * ck + b * sk; break;
            case 1: out += k * (-a * sk + b * ck); break;
            default: out += double(k) * k * (-a * ck - b * sk); break;
        }
    }
    return out;
}

}  // namespace trigspline
