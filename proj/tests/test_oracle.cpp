#include <doctest.h>

#include <cmath>
#include <vector>

#include "trigspline/errors.hpp"
#include "trigspline/oracle.hpp"
#include "trigspline/spline.hpp"
#include "trigspline/test_functions.hpp"

using namespace trigspline;

namespace {

double sup_rel_diff(const HermiteSpline& sp, const CollocationResult& cr) {
    double scale = std::abs(sp.a00), diff = std::abs(sp.a00 - cr.a00);
    auto upd = [&](const std::vector<double>& a, const std::vector<double>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            scale = std::max(scale, std::abs(a[i]));
            diff = std::max(diff, std::abs(a[i] - b[i]));
        }
    };
    upd(sp.a0, cr.a0);
    upd(sp.a1, cr.a1);
    upd(sp.b0, cr.b0);
    upd(sp.b1, cr.b1);
    if (sp.order == 2) {
        upd(sp.a2, cr.a2);
        upd(sp.b2, cr.b2);
    }
    return diff / std::max(scale, 1e-30);
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("fd_derivative basics") {
    CHECK(std::abs(fd_derivative([](double t) { return std::sin(t); }, 0.0,
                                 1e-5) -
                   1.0) <= 1e-10);
    CHECK(fd_derivative([](double) { return 3.25; }, 0.7, 1e-4) == 0.0);
    CHECK_THROWS_AS(fd_derivative([](double t) { return t; }, 0.0, 0.0),
                    precondition_error);
}

TEST_CASE("brute_sum bracket arithmetic") {
    // explicit m = 1..10, tail bracketed by integrals from 10 and 11
    const BruteSum bs = brute_sum({FrequencyFamily::minus(), 2, 5, 2}, 10);
    CHECK(bs.tail_high == doctest::Approx(1.0 / 240.0).epsilon(1e-12));
    CHECK(bs.tail_low > 0.0);
    CHECK(bs.tail_low < bs.tail_high);
    CHECK_THROWS_AS(brute_sum({FrequencyFamily::plus(), 3, 5, 1}, 0),
                    precondition_error);
}

TEST_CASE("extrapolated node series reproduce the collapsed constants") {
    // The oracle's basis summation never uses the collapse identities; at the
    // nodes it must still land on collapsed-constant x trig value, for both
    // grid variants (the variant-1 tails alternate).
    for (int variant : {0, 1}) {
        const UniformGrid g = make_grid(9, variant);
        const bool alt = variant == 1;
        for (int k : {1, 3}) {
            for (int j : {1, 4}) {
                const double tj = g.nodes[j];
                for (int e : {2, 3}) {
                    const double gp = collapsed_sum(
                        {FrequencyFamily::plus(alt), e, 9, k}, 1e-14);
                    const double gm = collapsed_sum(
                        {FrequencyFamily::minus(alt), e, 9, k}, 1e-14);
                    const double vPlusCos = detail::extrapolated_series(
                        false, FrequencyFamily::plus(), e, 9, k, tj, 2048);
                    const double vPlusSin = detail::extrapolated_series(
                        true, FrequencyFamily::plus(), e, 9, k, tj, 2048);
                    const double vMinusSin = detail::extrapolated_series(
                        true, FrequencyFamily::minus(), e, 9, k, tj, 2048);
                    CHECK(std::abs(vPlusCos - gp * std::cos(k * tj)) <= 1e-12);
                    CHECK(std::abs(vPlusSin - gp * std::sin(k * tj)) <= 1e-12);
                    CHECK(std::abs(vMinusSin + gm * std::sin(k * tj)) <= 1e-12);
                }
            }
        }
    }
    // residue families at e = 2, 3, 4 on the variant-0 grid
    const UniformGrid g = make_grid(5, 0);
    for (int r : {0, 1, 2}) {
        for (int e : {2, 3, 4}) {
            const double gr =
                collapsed_sum({FrequencyFamily::res(r), e, 5, 1}, 1e-14);
            const double v = detail::extrapolated_series(
                false, FrequencyFamily::res(r), e, 5, 1, g.nodes[3], 2048);
            CHECK(std::abs(v - gr * std::cos(g.nodes[3])) <= 1e-12);
        }
    }
}

TEST_CASE("collocation on constant data") {
    const UniformGrid g = make_grid(5, 0);
    const SampleSet f = make_samples(g, 0, std::vector<double>(5, 1.5));
    const SampleSet df = make_samples(g, 1, std::vector<double>(5, 0.0));
    const CollocationResult cr = collocation_solve_c1(f, df, g);
    CHECK(cr.residual_norm <= 1e-13);
    CHECK(cr.a00 == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(max_abs(cr.a0) <= 1e-10);
    CHECK(max_abs(cr.b1) <= 1e-10);

    const SampleSet d2f = make_samples(g, 2, std::vector<double>(5, 0.0));
    const CollocationResult cr2 = collocation_solve_c2(f, df, d2f, g);
    CHECK(cr2.residual_norm <= 1e-13);
    CHECK(cr2.a00 == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(max_abs(cr2.a2) <= 1e-10);
    CHECK(max_abs(cr2.b2) <= 1e-10);
}

TEST_CASE("collocation matches the closed-form solve, first order") {
    for (int variant : {0, 1}) {
        const UniformGrid g = make_grid(5, variant);
        const SampleDocument doc =
            sample_function(*find_test_function("exp-sin"), g, 1);
        const HermiteSpline sp = build_c1(doc.f, doc.df, g, 1e-13);
        const auto centered = center_samples(doc.df).first;
        const CollocationResult cr = collocation_solve_c1(doc.f, centered, g);
        CHECK(cr.residual_norm <= 1e-9 * 3.0);
        CHECK(sup_rel_diff(sp, cr) <= 1e-8);
    }
}

TEST_CASE("collocation matches the closed-form solve, second order") {
    const UniformGrid g = make_grid(9, 0);
    const SampleDocument doc =
        sample_function(*find_test_function("runge"), g, 2);
    const HermiteSpline sp = build_c2(doc.f, doc.df, *doc.d2f, g, 1e-13);
    const auto df = center_samples(doc.df).first;
    const auto d2f = center_samples(*doc.d2f).first;
    const CollocationResult cr = collocation_solve_c2(doc.f, df, d2f, g);
    CHECK(cr.residual_norm <= 1e-9 * 2.0);
    CHECK(sup_rel_diff(sp, cr) <= 1e-7);
}

TEST_CASE("non-centered derivative data shows up in the residual") {
    const UniformGrid g = make_grid(7, 0);
    const SampleDocument doc =
        sample_function(*find_test_function("exp-sin"), g, 1);
    const SampleSet centered = center_samples(doc.df).first;

    double prev = 0.0;
    for (double mean : {0.25, 0.5, 1.0}) {
        std::vector<double> shifted = centered.values;
        for (double& v : shifted) v += mean;
        const CollocationResult cr =
            collocation_solve_c1(doc.f, make_samples(g, 1, shifted), g);
        CHECK(cr.residual_norm >= 0.1 * mean);
        if (prev > 0.0)
            CHECK(cr.residual_norm / prev == doctest::Approx(2.0).epsilon(0.05));
        prev = cr.residual_norm;
    }
}

TEST_CASE("a corrupted series table is caught by the oracle") {
    const UniformGrid g = make_grid(5, 0);
    const SampleDocument doc =
        sample_function(*find_test_function("runge"), g, 2);

    SeriesTable bad = series_constants_c2(5);
    bad.p2_[bad.idx2(1, 3, 1)] *= 1.001;  // 0.1% error in one constant
    const HermiteSpline corrupted =
        build_c2(doc.f, doc.df, *doc.d2f, g, 1e-13,
                 std::make_shared<const SeriesTable>(bad));

    const auto df = center_samples(doc.df).first;
    const auto d2f = center_samples(*doc.d2f).first;
    const CollocationResult cr = collocation_solve_c2(doc.f, df, d2f, g);
    CHECK(sup_rel_diff(corrupted, cr) >= 1e-4);
}
