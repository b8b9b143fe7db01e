#include "trigspline/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "trigspline/errors.hpp"

namespace trigspline {

namespace {

constexpr const char* kFormatLine = "format=trig-hermite/1";

double parse_double(const std::string& tok) {
    const char* s = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0')
        throw precondition_error("malformed number '" + tok + "'");
    return v;
}

int parse_int(const std::string& tok) {
    const char* s = tok.c_str();
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0')
        throw precondition_error("malformed integer '" + tok + "'");
    return int(v);
}

std::string next_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line))
        throw precondition_error(std::string("document ends before ") + what);
    return line;
}

/// "key=value" line with an expected key.
std::string expect_kv(std::istream& is, const std::string& key) {
    const std::string line = next_line(is, key.c_str());
    const auto eq = line.find('=');
    if (eq == std::string::npos || line.substr(0, eq) != key)
        throw precondition_error("expected '" + key + "=...', got '" + line +
                                 "'");
    return line.substr(eq + 1);
}

/// "label v1 v2 ..." row with an expected label and count.
std::vector<double> expect_row(std::istream& is, const std::string& label,
                               int count) {
    const std::string line = next_line(is, label.c_str());
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok != label)
        throw precondition_error("expected row '" + label + "', got '" + line +
                                 "'");
    std::vector<double> vals;
    while (ss >> tok) vals.push_back(parse_double(tok));
    if (int(vals.size()) != count)
        throw precondition_error("row '" + label + "' has " +
                                 std::to_string(vals.size()) +
                                 " values, expected " + std::to_string(count));
    return vals;
}

void write_row(std::ostream& os, const char* label,
               const std::vector<double>& vals) {
    os << label;
    for (double v : vals) os << ' ' << format_double(v);
    os << '\n';
}

struct Header {
    int order = 0;
    int N = 0;
    int variant = 0;
};

Header read_header(std::istream& is, const std::string& kind) {
    if (next_line(is, "header") != kFormatLine)
        throw precondition_error("unsupported document format");
    const std::string k = expect_kv(is, "kind");
    if (k != kind)
        throw precondition_error("expected kind=" + kind + ", got kind=" + k);
    Header h;
    h.order = parse_int(expect_kv(is, "p"));
    h.N = parse_int(expect_kv(is, "N"));
    h.variant = parse_int(expect_kv(is, "variant"));
    if (h.order != 1 && h.order != 2)
        throw precondition_error("p must be 1 or 2");
    return h;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_samples(std::ostream& os, const SampleDocument& doc) {
    if (doc.order == 2 && !doc.d2f)
        throw precondition_error("p=2 sample document needs a d2f row");
    os << kFormatLine << '\n'
       << "kind=samples\n"
       << "p=" << doc.order << '\n'
       << "N=" << doc.f.grid.N << '\n'
       << "variant=" << doc.f.grid.variant << '\n';
    write_row(os, "f", doc.f.values);
    write_row(os, "df", doc.df.values);
    if (doc.order == 2) write_row(os, "d2f", doc.d2f->values);
}

SampleDocument read_samples(std::istream& is) {
    const Header h = read_header(is, "samples");
    const UniformGrid grid = make_grid(h.N, h.variant);

    SampleDocument doc;
    doc.order = h.order;
    doc.f = make_samples(grid, 0, expect_row(is, "f", h.N));
    doc.df = make_samples(grid, 1, expect_row(is, "df", h.N));
    if (h.order == 2)
        doc.d2f = make_samples(grid, 2, expect_row(is, "d2f", h.N));
    return doc;
}

void write_spline(std::ostream& os, const HermiteSpline& sp) {
    os << kFormatLine << '\n'
       << "kind=spline\n"
       << "p=" << sp.order << '\n'
       << "N=" << sp.grid.N << '\n'
       << "variant=" << sp.grid.variant << '\n'
       << "tol=" << format_double(sp.buildTol) << '\n'
       << "a00=" << format_double(sp.a00) << '\n'
       << "mu1=" << format_double(sp.ledger.mu1) << '\n'
       << "mu2=" << format_double(sp.ledger.mu2) << '\n';
    write_row(os, "a0", sp.a0);
    write_row(os, "a1", sp.a1);
    if (sp.order == 2) write_row(os, "a2", sp.a2);
    write_row(os, "b0", sp.b0);
    write_row(os, "b1", sp.b1);
    if (sp.order == 2) write_row(os, "b2", sp.b2);
}

HermiteSpline read_spline(std::istream& is) {
    const Header h = read_header(is, "spline");

    HermiteSpline sp;
    sp.order = h.order;
    sp.grid = make_grid(h.N, h.variant);
    sp.buildTol = parse_double(expect_kv(is, "tol"));
    sp.a00 = parse_double(expect_kv(is, "a00"));
    sp.ledger.mu1 = parse_double(expect_kv(is, "mu1"));
    sp.ledger.mu2 = parse_double(expect_kv(is, "mu2"));
    if (!(sp.buildTol >= 1e-15))
        throw precondition_error("stored tolerance must be >= 1e-15");

    const int n = sp.grid.n;
    sp.a0 = expect_row(is, "a0", n);
    sp.a1 = expect_row(is, "a1", n);
    if (h.order == 2) sp.a2 = expect_row(is, "a2", n);
    sp.b0 = expect_row(is, "b0", n);
    sp.b1 = expect_row(is, "b1", n);
    if (h.order == 2) sp.b2 = expect_row(is, "b2", n);

    sp.table = std::make_shared<const SeriesTable>(
        h.order == 1 ? series_constants_c1(h.N, h.variant, sp.buildTol)
                     : series_constants_c2(h.N, sp.buildTol));
    return sp;
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw precondition_error("cannot open '" + path + "' for reading");
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw precondition_error("cannot open '" + path + "' for writing");
    return f;
}

}  // namespace

void write_samples_file(const std::string& path, const SampleDocument& doc) {
    auto f = open_out(path);
    write_samples(f, doc);
}

SampleDocument read_samples_file(const std::string& path) {
    auto f = open_in(path);
    return read_samples(f);
}

void write_spline_file(const std::string& path, const HermiteSpline& sp) {
    auto f = open_out(path);
    write_spline(f, sp);
}

HermiteSpline read_spline_file(const std::string& path) {
    auto f = open_in(path);
    return read_spline(f);
}

}  // namespace trigspline
