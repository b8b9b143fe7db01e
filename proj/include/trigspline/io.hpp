#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "trigspline/grid.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

/// Sample document: grid metadata plus one value row per derivative order.
struct SampleDocument {
    int order = 1;  // p: derivative rows provided up to this order
    SampleSet f;
    SampleSet df;
    std::optional<SampleSet> d2f;
};

/// Line-oriented text formats with a versioned header. Numbers carry
/// 17 significant digits, which round-trips binary64 exactly; identical
/// inputs produce byte-identical documents.
///
///   format=trig-hermite/1        format=trig-hermite/1
///   kind=samples                 kind=spline
///   p=1                          p=1
///   N=9                          N=9
///   variant=0                    variant=0
///   f <N values>                 tol=...  a00=...  mu1=...  mu2=...
///   df <N values>                a0 <n values> ... b1 <n values>
///   [d2f <N values>]             [a2, b2 rows for p=2]
void write_samples(std::ostream& os, const SampleDocument& doc);
SampleDocument read_samples(std::istream& is);

void write_spline(std::ostream& os, const HermiteSpline& spline);
/// Rebuilds the series table from the stored N/variant/order/tol, so the
/// loaded spline evaluates identically to the saved one.
HermiteSpline read_spline(std::istream& is);

void write_samples_file(const std::string& path, const SampleDocument& doc);
SampleDocument read_samples_file(const std::string& path);
void write_spline_file(const std::string& path, const HermiteSpline& spline);
HermiteSpline read_spline_file(const std::string& path);

/// "%.17g" rendering used by every document and CSV writer.
std::string format_double(double v);

}  // namespace trigspline
