#include "trigspline/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "trigspline/errors.hpp"
#include "trigspline/io.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

namespace {

const TestFunction& lookup(const std::string& name) {
    const TestFunction* fn = find_test_function(name);
    if (!fn) {
        std::string known;
        for (const auto& f : builtin_test_functions())
            known += (known.empty() ? "" : ", ") + f.name;
        throw precondition_error("unknown function '" + name + "' (known: " +
                                 known + ")");
    }
    return *fn;
}

HermiteSpline build_from_doc(const SampleDocument& doc, double tol) {
    if (doc.order == 1)
        return build_c1(doc.f, doc.df, doc.f.grid, tol);
    return build_c2(doc.f, doc.df, *doc.d2f, doc.f.grid, tol);
}

double data_scale(const SampleDocument& doc) {
    double s = 1.0;
    auto upd = [&](const SampleSet& set) {
        for (double v : set.values) s = std::max(s, std::abs(v));
    };
    upd(doc.f);
    upd(doc.df);
    if (doc.d2f) upd(*doc.d2f);
    return s;
}

void print_report(std::ostream& out, const ResidualReport& rep) {
    for (int q = 0; q <= rep.order; ++q)
        out << "max node residual, derivative order " << q << ": "
            << format_double(rep.maxAbs[q]) << '\n';
}

/// CSV sink: --out path when given, otherwise the command stream.
class CsvSink {
public:
    CsvSink(const std::string& path, std::ostream& fallback)
        : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw precondition_error("cannot open '" + path +
                                         "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

}  // namespace

int run_gen(const GenOptions& opt, std::ostream& out) {
    if (opt.outPath.empty())
        throw precondition_error("gen needs an output path (--out)");
    const TestFunction& fn = lookup(opt.function);
    const UniformGrid grid = make_grid(opt.N, opt.variant);
    const SampleDocument doc = sample_function(fn, grid, opt.order);
    write_samples_file(opt.outPath, doc);
    out << "wrote " << opt.outPath << ": " << fn.name << " on N=" << opt.N
        << " variant=" << opt.variant << " p=" << opt.order << '\n';
    return 0;
}

int run_build(const BuildOptions& opt, std::ostream& out) {
    if (opt.outPath.empty())
        throw precondition_error("build needs an output path (--out)");
    const SampleDocument doc = read_samples_file(opt.samplePath);
    const HermiteSpline sp = build_from_doc(doc, opt.tol);
    write_spline_file(opt.outPath, sp);

    double dmin = std::abs(sp.table->det(1)), dmax = dmin;
    int kmin = 1;
    for (int k = 2; k <= sp.grid.n; ++k) {
        const double d = std::abs(sp.table->det(k));
        if (d < dmin) { dmin = d; kmin = k; }
        dmax = std::max(dmax, d);
    }
    out << "built p=" << sp.order << " spline, N=" << sp.grid.N
        << " variant=" << sp.grid.variant << " (n=" << sp.grid.n
        << " harmonics)\n";
    out << "per-harmonic |det|: min " << format_double(dmin) << " at k="
        << kmin << ", max " << format_double(dmax) << '\n';
    print_report(out, node_residuals(sp, doc.f, doc.df,
                                     doc.d2f ? &*doc.d2f : nullptr));
    out << "wrote " << opt.outPath << '\n';
    return 0;
}

int run_eval(const EvalOptions& opt, std::ostream& out) {
    const HermiteSpline sp = read_spline_file(opt.splinePath);
    CsvSink sink(opt.outPath, out);
    std::ostream& csv = sink.stream();
    csv << "t,value\n";
    if (opt.resolution > 0) {
        const auto vals = dense_eval(sp, opt.resolution, opt.deriv, opt.evalTol);
        for (int i = 0; i < opt.resolution; ++i) {
            const double t = 2.0 * std::numbers::pi * i / opt.resolution;
            csv << format_double(t) << ',' << format_double(vals[i]) << '\n';
        }
    } else {
        if (opt.tList.empty())
            throw precondition_error("eval needs --t values or --resolution");
        for (double t : opt.tList)
            csv << format_double(t) << ','
                << format_double(eval(sp, t, opt.deriv, opt.evalTol)) << '\n';
    }
    return 0;
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    const HermiteSpline sp = read_spline_file(opt.splinePath);
    const SampleDocument doc = read_samples_file(opt.samplePath);
    if (sp.order != doc.order)
        throw precondition_error("spline and sample documents disagree on p");
    const ResidualReport rep =
        node_residuals(sp, doc.f, doc.df, doc.d2f ? &*doc.d2f : nullptr);
    print_report(out, rep);
    const double limit = opt.threshold * data_scale(doc);
    for (int q = 0; q <= rep.order; ++q) {
        if (rep.maxAbs[q] > limit) {
            out << "FAIL: derivative order " << q << " residual "
                << format_double(rep.maxAbs[q]) << " exceeds "
                << format_double(limit) << '\n';
            return 3;
        }
    }
    out << "OK: residuals within " << format_double(limit) << '\n';
    return 0;
}

std::vector<ConvergeRow> convergence_errors(const TestFunction& fn,
                                            const std::vector<int>& Ns,
                                            int order, int variant,
                                            int resolution, double buildTol,
                                            double evalTol) {
    if (resolution < 2)
        throw precondition_error("dense resolution must be >= 2");
    std::vector<ConvergeRow> rows;
    for (int N : Ns) {
        const UniformGrid grid = make_grid(N, variant);
        const SampleDocument doc = sample_function(fn, grid, order);
        const HermiteSpline sp = build_from_doc(doc, buildTol);
        const auto vals = dense_eval(sp, resolution, 0, evalTol);
        double err = 0.0;
        for (int i = 0; i < resolution; ++i) {
            const double t = 2.0 * std::numbers::pi * i / resolution;
            err = std::max(err, std::abs(vals[i] - fn.f(t)));
        }
        rows.push_back({N, err});
    }
    return rows;
}

int run_converge(const ConvergeOptions& opt, std::ostream& out) {
    if (opt.Ns.empty())
        throw precondition_error("converge needs at least one --n value");
    const TestFunction& fn = lookup(opt.function);
    const auto rows = convergence_errors(fn, opt.Ns, opt.order, opt.variant,
                                         opt.resolution, opt.tol, opt.evalTol);
    CsvSink sink(opt.outPath, out);
    std::ostream& csv = sink.stream();
    csv << "N,max_error\n";
    for (const auto& r : rows)
        csv << r.N << ',' << format_double(r.maxError) << '\n';
    return 0;
}

}  // namespace trigspline
