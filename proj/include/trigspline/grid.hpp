#pragma once

#include <utility>
#include <vector>

namespace trigspline {

/// Uniform periodic grid on [0, 2pi) with N = 2n + 1 nodes.
/// Variant 0: t_j = 2pi (j-1) / N.  Variant 1: t_j = pi (2j-1) / N.
struct UniformGrid {
    int N = 0;
    int n = 0;
    int variant = 0;
    std::vector<double> nodes;

    bool operator==(const UniformGrid& o) const {
        return N == o.N && variant == o.variant;
    }
};

UniformGrid make_grid(int N, int variant);

/// Values of a function or one of its derivatives at the grid nodes.
/// The mean is always recomputed from the values, never trusted.
struct SampleSet {
    UniformGrid grid;
    int derivOrder = 0;  // 0, 1 or 2
    std::vector<double> values;
    double mean = 0.0;
};

SampleSet make_samples(const UniformGrid& grid, int derivOrder,
                       std::vector<double> values);

/// Subtracts the sample mean. Requires derivOrder >= 1 (values of the
/// function itself are never centered). Returns the centered set and the
/// subtracted mean.
std::pair<SampleSet, double> center_samples(const SampleSet& samples);

}  // namespace trigspline
