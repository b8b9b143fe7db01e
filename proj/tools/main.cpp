#include <CLI11.hpp>
#include <iostream>

#include "trigspline/commands.hpp"
#include "trigspline/errors.hpp"

using namespace trigspline;

int main(int argc, char** argv) {
    CLI::App app{"trigonometric Hermite splines on uniform periodic grids"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cGen = app.add_subcommand(
        "gen", "sample a built-in test function onto a grid");
    cGen->add_option("function", gen.function, "const|cos|sin2|exp-sin|runge")
        ->required();
    cGen->add_option("--n", gen.N, "grid size (odd, >= 3)")->required();
    cGen->add_option("--variant", gen.variant, "grid variant 0 or 1");
    cGen->add_option("--order", gen.order, "spline order p (1 or 2)");
    cGen->add_option("--out", gen.outPath, "sample file to write")->required();

    BuildOptions build;
    auto* cBuild =
        app.add_subcommand("build", "build a spline from a sample file");
    cBuild->add_option("samples", build.samplePath, "sample file")->required();
    cBuild->add_option("--tol", build.tol, "build tolerance");
    cBuild->add_option("--out", build.outPath, "spline file to write")
        ->required();

    EvalOptions ev;
    auto* cEval = app.add_subcommand(
        "eval", "evaluate a spline; CSV rows of t,value");
    cEval->add_option("spline", ev.splinePath, "spline file")->required();
    cEval->add_option("--t", ev.tList, "evaluation points (radians)");
    cEval->add_option("--resolution", ev.resolution,
                      "dense uniform grid size instead of --t");
    cEval->add_option("--deriv", ev.deriv, "derivative order (0..p)");
    cEval->add_option("--eval-tol", ev.evalTol, "evaluation tolerance");
    cEval->add_option("--out", ev.outPath, "CSV file (default stdout)");

    VerifyOptions ver;
    auto* cVerify = app.add_subcommand(
        "verify", "check a spline against a sample file at the nodes");
    cVerify->add_option("spline", ver.splinePath, "spline file")->required();
    cVerify->add_option("samples", ver.samplePath, "sample file")->required();
    cVerify->add_option("--tol", ver.threshold,
                        "residual threshold relative to the data scale");

    ConvergeOptions conv;
    auto* cConv = app.add_subcommand(
        "converge", "dense-grid max error for a list of grid sizes");
    cConv->add_option("function", conv.function, "test function name")
        ->required();
    cConv->add_option("--n", conv.Ns, "grid sizes (repeatable)")->required();
    cConv->add_option("--order", conv.order, "spline order p (1 or 2)");
    cConv->add_option("--variant", conv.variant, "grid variant 0 or 1");
    cConv->add_option("--resolution", conv.resolution, "dense grid size");
    cConv->add_option("--tol", conv.tol, "build tolerance");
    cConv->add_option("--eval-tol", conv.evalTol, "evaluation tolerance");
    cConv->add_option("--out", conv.outPath, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cGen->parsed()) return run_gen(gen, std::cout);
        if (cBuild->parsed()) return run_build(build, std::cout);
        if (cEval->parsed()) return run_eval(ev, std::cout);
        if (cVerify->parsed()) return run_verify(ver, std::cout);
        if (cConv->parsed()) return run_converge(conv, std::cout);
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
