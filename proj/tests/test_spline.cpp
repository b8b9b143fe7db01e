#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trigspline/errors.hpp"
#include "trigspline/spline.hpp"
#include "trigspline/test_functions.hpp"

using namespace trigspline;

namespace {

constexpr double pi = std::numbers::pi;

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

SampleDocument sampled(const char* name, int N, int variant, int order) {
    return sample_function(*find_test_function(name), make_grid(N, variant),
                           order);
}

HermiteSpline build_doc(const SampleDocument& doc, double tol = 1e-12) {
    if (doc.order == 1) return build_c1(doc.f, doc.df, doc.f.grid, tol);
    return build_c2(doc.f, doc.df, *doc.d2f, doc.f.grid, tol);
}

}  // namespace

TEST_CASE("constant data gives the constant spline") {
    const UniformGrid g = make_grid(7, 0);
    std::vector<double> fv(7, 2.5), dv(7, 0.0);
    const SampleSet f = make_samples(g, 0, fv);
    const SampleSet df = make_samples(g, 1, dv);
    const HermiteSpline sp = build_c1(f, df, g, 1e-12);
    CHECK(sp.a00 == doctest::Approx(5.0).epsilon(1e-15));
    for (const auto* c : {&sp.a0, &sp.a1, &sp.b0, &sp.b1})
        CHECK(max_abs(*c) <= 1e-12);
    for (double t : {0.0, 0.31, 2.9, 6.1}) {
        CHECK(std::abs(eval(sp, t, 0, 1e-12) - 2.5) <= 1e-12);
        CHECK(std::abs(eval(sp, t, 1, 1e-12)) <= 1e-11);
    }
    const ResidualReport rep = node_residuals(sp, f, df);
    CHECK(rep.maxAbs[0] <= 1e-14);
    CHECK(rep.maxAbs[1] <= 1e-14);

    // second order
    const SampleSet d2f = make_samples(g, 2, std::vector<double>(7, 0.0));
    const HermiteSpline sp2 = build_c2(f, df, d2f, g, 1e-12);
    CHECK(sp2.a00 == doctest::Approx(5.0).epsilon(1e-15));
    for (double t : {0.4, 3.3})
        CHECK(std::abs(eval(sp2, t, 0, 1e-12) - 2.5) <= 1e-12);
    const ResidualReport rep2 = node_residuals(sp2, f, df, &d2f);
    for (int q = 0; q <= 2; ++q) CHECK(rep2.maxAbs[q] <= 1e-14);
}

TEST_CASE("random smooth periodic functions interpolate at every scale") {
    // exact samples drawn from random low-degree trigonometric polynomials
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TrigPolyCoeffs poly;
    poly.a0 = u(rng);
    for (int k = 0; k < 2; ++k) {
        poly.a.push_back(u(rng));
        poly.b.push_back(u(rng));
    }
    for (int N : {5, 9, 17, 33}) {
        const UniformGrid g = make_grid(N, 0);
        std::vector<double> fv(N), dv(N), d2v(N);
        double scale = 1.0;
        for (int j = 0; j < N; ++j) {
            fv[j] = eval_trig_poly(poly, g.nodes[j], 0);
            dv[j] = eval_trig_poly(poly, g.nodes[j], 1);
            d2v[j] = eval_trig_poly(poly, g.nodes[j], 2);
            scale = std::max({scale, std::abs(fv[j]), std::abs(dv[j]),
                              std::abs(d2v[j])});
        }
        const SampleSet f = make_samples(g, 0, fv);
        const SampleSet df = make_samples(g, 1, dv);
        const SampleSet d2f = make_samples(g, 2, d2v);

        const HermiteSpline s1 = build_c1(f, df, g, 1e-12);
        const ResidualReport r1 = node_residuals(s1, f, df);
        CHECK(r1.maxAbs[0] <= 1e-8 * scale);
        CHECK(r1.maxAbs[1] <= 1e-8 * scale);

        const HermiteSpline s2 = build_c2(f, df, d2f, g, 1e-12);
        const ResidualReport r2 = node_residuals(s2, f, df, &d2f);
        for (int q = 0; q <= 2; ++q) CHECK(r2.maxAbs[q] <= 1e-8 * scale);
    }
}

TEST_CASE("even data kills the sine families, odd data the cosine ones") {
    // f = cos t, df = -sin t: both sine-pair right-hand sides vanish
    const SampleDocument dc = sampled("cos", 5, 0, 1);
    const HermiteSpline sc = build_doc(dc);
    CHECK(max_abs(sc.b0) <= 1e-13);
    CHECK(max_abs(sc.b1) <= 1e-13);

    // f = sin 2t (odd) with even derivative: cosine families and a00 vanish
    const SampleDocument ds = sampled("sin2", 7, 0, 1);
    const HermiteSpline ss = build_doc(ds);
    CHECK(std::abs(ss.a00) <= 1e-13);
    CHECK(max_abs(ss.a0) <= 1e-12);
    CHECK(max_abs(ss.a1) <= 1e-12);

    // second order, even function
    const SampleDocument d2 = sampled("cos", 5, 0, 2);
    const HermiteSpline s2 = build_doc(d2);
    CHECK(max_abs(s2.b0) <= 1e-12);
    CHECK(max_abs(s2.b1) <= 1e-12);
    CHECK(max_abs(s2.b2) <= 1e-12);
}

TEST_CASE("first-order spline interpolates: node residuals") {
    for (int variant : {0, 1}) {
        const SampleDocument doc = sampled("exp-sin", 9, variant, 1);
        const HermiteSpline sp = build_doc(doc);
        const ResidualReport rep = node_residuals(sp, doc.f, doc.df);
        CHECK(rep.maxAbs[0] <= 1e-9);
        CHECK(rep.maxAbs[1] <= 1e-9);
    }
}

TEST_CASE("second-order spline interpolates: node residuals") {
    const SampleDocument doc = sampled("runge", 9, 0, 2);
    const HermiteSpline sp = build_doc(doc);
    const ResidualReport rep = node_residuals(sp, doc.f, doc.df, &*doc.d2f);
    CHECK(rep.maxAbs[0] <= 1e-8);
    CHECK(rep.maxAbs[1] <= 1e-8);
    CHECK(rep.maxAbs[2] <= 1e-8);
}

TEST_CASE("series-path eval agrees with the samples and the node path") {
    const SampleDocument doc = sampled("exp-sin", 9, 0, 1);
    const HermiteSpline sp = build_doc(doc);
    double scale = 1.0;
    for (double v : doc.f.values) scale = std::max(scale, std::abs(v));

    for (int j : {0, 3, 7}) {
        const double tj = sp.grid.nodes[j];
        CHECK(std::abs(eval(sp, tj, 0, 1e-12) - doc.f.values[j]) <=
              1e-10 * scale);
        // the derivative series is capped; the reported bound is the contract
        const SeriesValue d = eval_with_bound(sp, tj, 1, 1e-8);
        CHECK(std::abs(d.value - doc.df.values[j]) <= d.tail_bound + 1e-10);
        CHECK(std::abs(eval_at_node(sp, j, 1) - doc.df.values[j]) <= 1e-12);
    }
}

TEST_CASE("mean ledger restores uncentered derivative samples") {
    const UniformGrid g = make_grid(9, 0);
    const TestFunction& fn = *find_test_function("exp-sin");
    std::vector<double> fv(9), dv(9);
    for (int j = 0; j < 9; ++j) {
        fv[j] = fn.f(g.nodes[j]);
        dv[j] = fn.df(g.nodes[j]) + 0.5;  // deliberately non-centered
    }
    const HermiteSpline sp =
        build_c1(make_samples(g, 0, fv), make_samples(g, 1, dv), g, 1e-12);
    // the ledger holds the injected shift plus the function's own tiny
    // discrete mean (aliasing at frequency N)
    CHECK(sp.ledger.mu1 == doctest::Approx(0.5).epsilon(1e-6));
    for (int j = 0; j < 9; ++j) {
        CHECK(std::abs(eval_at_node(sp, j, 0) - fv[j]) <= 1e-12);
        CHECK(std::abs(eval_at_node(sp, j, 1) - dv[j]) <= 1e-12);
    }
}

TEST_CASE("eval is 2pi-periodic") {
    const SampleDocument doc = sampled("runge", 7, 0, 1);
    const HermiteSpline sp = build_doc(doc);
    for (double t : {0.2, 1.7, 4.4}) {
        CHECK(std::abs(eval(sp, t, 0, 1e-12) - eval(sp, t + 2 * pi, 0, 1e-12)) <=
              1e-10);
    }
}

TEST_CASE("build is linear in the sample data") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const UniformGrid g = make_grid(7, 0);
    std::vector<double> f1(7), d1(7), f2(7), d2(7), fz(7), dz(7);
    const double al = 2.0, be = -3.0;
    for (int j = 0; j < 7; ++j) {
        f1[j] = u(rng); d1[j] = u(rng);
        f2[j] = u(rng); d2[j] = u(rng);
        fz[j] = al * f1[j] + be * f2[j];
        dz[j] = al * d1[j] + be * d2[j];
    }
    const auto table = std::make_shared<const SeriesTable>(
        series_constants_c1(7, 0));
    const HermiteSpline s1 = build_c1(make_samples(g, 0, f1),
                                      make_samples(g, 1, d1), g, 1e-12, table);
    const HermiteSpline s2 = build_c1(make_samples(g, 0, f2),
                                      make_samples(g, 1, d2), g, 1e-12, table);
    const HermiteSpline sz = build_c1(make_samples(g, 0, fz),
                                      make_samples(g, 1, dz), g, 1e-12, table);
    CHECK(std::abs(sz.a00 - (al * s1.a00 + be * s2.a00)) <= 1e-12);
    for (int k = 0; k < g.n; ++k) {
        CHECK(std::abs(sz.a0[k] - (al * s1.a0[k] + be * s2.a0[k])) <= 1e-12);
        CHECK(std::abs(sz.a1[k] - (al * s1.a1[k] + be * s2.a1[k])) <= 1e-12);
        CHECK(std::abs(sz.b0[k] - (al * s1.b0[k] + be * s2.b0[k])) <= 1e-12);
        CHECK(std::abs(sz.b1[k] - (al * s1.b1[k] + be * s2.b1[k])) <= 1e-12);
    }

    // second order
    std::vector<double> e1(7), e2(7), ez(7);
    for (int j = 0; j < 7; ++j) {
        e1[j] = u(rng);
        e2[j] = u(rng);
        ez[j] = al * e1[j] + be * e2[j];
    }
    const auto t2 = std::make_shared<const SeriesTable>(series_constants_c2(7));
    const HermiteSpline q1 =
        build_c2(make_samples(g, 0, f1), make_samples(g, 1, d1),
                 make_samples(g, 2, e1), g, 1e-12, t2);
    const HermiteSpline q2 =
        build_c2(make_samples(g, 0, f2), make_samples(g, 1, d2),
                 make_samples(g, 2, e2), g, 1e-12, t2);
    const HermiteSpline qz =
        build_c2(make_samples(g, 0, fz), make_samples(g, 1, dz),
                 make_samples(g, 2, ez), g, 1e-12, t2);
    // a2/b2 carry the largest solve amplification: compare relative to them
    for (int k = 0; k < g.n; ++k) {
        const double sa = std::max({1.0, std::abs(q1.a2[k]), std::abs(q2.a2[k])});
        const double sb = std::max({1.0, std::abs(q1.b2[k]), std::abs(q2.b2[k])});
        CHECK(std::abs(qz.a2[k] - (al * q1.a2[k] + be * q2.a2[k])) <=
              1e-12 * sa);
        CHECK(std::abs(qz.b2[k] - (al * q1.b2[k] + be * q2.b2[k])) <=
              1e-12 * sb);
    }
}

TEST_CASE("corrupted coefficients are caught by node residuals") {
    const SampleDocument doc = sampled("exp-sin", 9, 0, 1);
    HermiteSpline sp = build_doc(doc);
    sp.a0[0] += 1e-3;
    const ResidualReport rep = node_residuals(sp, doc.f, doc.df);
    CHECK(rep.maxAbs[0] >= 1e-5);
}

TEST_CASE("build and eval preconditions") {
    const SampleDocument d9 = sampled("cos", 9, 0, 1);
    const SampleDocument d7 = sampled("cos", 7, 0, 1);
    CHECK_THROWS_AS(build_c1(d9.f, d7.df, d9.f.grid, 1e-12),
                    precondition_error);
    CHECK_THROWS_AS(build_c1(d9.df, d9.df, d9.f.grid, 1e-12),
                    precondition_error);  // wrong derivative order for f
    CHECK_THROWS_AS(build_c1(d9.f, d9.df, d9.f.grid, 1e-16),
                    precondition_error);

    const SampleDocument v1 = sampled("cos", 9, 1, 2);
    CHECK_THROWS_AS(build_c2(v1.f, v1.df, *v1.d2f, v1.f.grid, 1e-12),
                    precondition_error);  // second order needs variant 0

    const HermiteSpline sp = build_doc(d9);
    CHECK_THROWS_AS(eval(sp, 0.5, 2, 1e-12), precondition_error);
    CHECK_THROWS_AS(eval_at_node(sp, 9, 0), precondition_error);
    CHECK_THROWS_AS(node_residuals(sp, d7.f, d7.df), precondition_error);

    const SampleDocument d92 = sampled("cos", 9, 0, 2);
    const HermiteSpline sp2 = build_doc(d92);
    CHECK_THROWS_AS(node_residuals(sp2, d92.f, d92.df), precondition_error);
}

TEST_CASE("dense_eval matches pointwise eval") {
    const SampleDocument doc = sampled("exp-sin", 9, 0, 2);
    const HermiteSpline sp = build_doc(doc);
    const int R = 16;
    for (int deriv : {0, 1, 2}) {
        const auto dense = dense_eval(sp, R, deriv, 1e-10);
        for (int i = 0; i < R; ++i) {
            const double t = 2 * pi * i / R;
            const SeriesValue v = eval_with_bound(sp, t, deriv, 1e-10);
            CHECK(std::abs(dense[i] - v.value) <= 2 * (v.tail_bound + 1e-10));
        }
    }
    CHECK_THROWS_AS(dense_eval(sp, 1, 0, 1e-10), precondition_error);
}

TEST_CASE("central differences converge to the spline derivative") {
    // quick smoothness probe; the acceptance suite runs the full version
    const SampleDocument doc = sampled("runge", 9, 0, 1);
    const HermiteSpline sp = build_doc(doc);
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(0.3, 0.4);
    const double t = u(rng);
    const double ref = eval(sp, t, 1, 1e-8);
    double prev = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double h = i == 0 ? 1e-2 : 1e-3;
        const double fd =
            (eval(sp, t + h, 0, 1e-12) - eval(sp, t - h, 0, 1e-12)) / (2 * h);
        const double err = std::abs(fd - ref);
        if (i == 1) CHECK(err * 25.0 < prev);  // at least quadratic-ish decay
        prev = err;
    }
}
