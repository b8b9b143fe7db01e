#include "trigspline/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigspline/errors.hpp"

namespace trigspline {

UniformGrid make_grid(int N, int variant) {
    if (N < 3 || N % 2 == 0)
        throw precondition_error("grid size must be odd and >= 3, got " +
                                 std::to_string(N));
    if (variant != 0 && variant != 1)
        throw precondition_error("grid variant must be 0 or 1");

    UniformGrid g;
    g.N = N;
    g.n = (N - 1) / 2;
    g.variant = variant;
    g.nodes.resize(N);
    constexpr double pi = std::numbers::pi;
    for (int j = 1; j <= N; ++j)
        g.nodes[j - 1] = variant == 0 ? 2.0 * pi * (j - 1) / N
                                      : pi * (2 * j - 1) / N;
    return g;
}

SampleSet make_samples(const UniformGrid& grid, int derivOrder,
                       std::vector<double> values) {
    if (derivOrder < 0 || derivOrder > 2)
        throw precondition_error("derivative order must be 0, 1 or 2");
    if (int(values.size()) != grid.N)
        throw precondition_error("expected " + std::to_string(grid.N) +
                                 " sample values, got " +
                                 std::to_string(values.size()));
    SampleSet s;
    s.grid = grid;
    s.derivOrder = derivOrder;
    s.values = std::move(values);
    double sum = 0.0;
    for (double v : s.values) sum += v;
    s.mean = sum / grid.N;
    return s;
}

std::pair<SampleSet, double> center_samples(const SampleSet& samples) {
    if (samples.derivOrder < 1)
        throw precondition_error("only derivative samples are centered");
    SampleSet centered = samples;
    const double mu = samples.mean;
    for (double& v : centered.values) v -= mu;
    double sum = 0.0;
    for (double v : centered.values) sum += v;
    centered.mean = sum / samples.grid.N;
    return {std::move(centered), mu};
}

}  // namespace trigspline
