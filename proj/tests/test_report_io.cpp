#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "fracmont/corpus.hpp"
#include "fracmont/report_io.hpp"

using namespace fracmont;
using namespace fracmont::io;

namespace {

const QuadratureConfig kDefault{};

IdentityRow sample_identity_row() {
    IdentityRow row;
    row.f = "poly:0,0,1";
    row.w = "bump:0.4,0.35"; // comma inside the label exercises CSV quoting
    const ProblemFrame frame(0.0, 1.0, 0.5, 1.5);
    row.report = montgomery_weighted(
        frame, corpus::lookup_function(row.f, 0.0, 1.0),
        corpus::lookup_weight(row.w, 0.0, 1.0), kDefault);
    row.tolerance = std::max(1e-7, 20.0 * row.report.quadrature_err);
    row.pass = std::abs(row.report.residual) <= row.tolerance;
    return row;
}

BoundRow sample_bound_row() {
    BoundRow row;
    row.f = "exp:1";
    row.w = "bump:0.4,0.35";
    const ProblemFrame frame(0.0, 1.0, 0.25, 2.0);
    row.report = ostrowski_bound(
        frame, corpus::lookup_function(row.f, 0.0, 1.0),
        corpus::lookup_weight(row.w, 0.0, 1.0), kDefault);
    row.tolerance = std::max(1e-7, 20.0 * row.report.quadrature_err);
    row.pass = row.report.lhs <= row.report.rhs_direct + row.tolerance;
    return row;
}

} // namespace

TEST_CASE("CSV headers are pinned") {
    CHECK(std::string(kIdentityCsvHeader) ==
          "f,w,a,b,x,alpha,lhs,term_main,term_correction,term_derivative,"
          "residual,quadrature_err,tolerance,status");
    CHECK(std::string(kBoundCsvHeader) ==
          "f,w,a,b,x,alpha,lhs,rhs_closed_paper,rhs_closed_corrected,rhs_direct,"
          "A_paper,A_corrected,B,tightness,degenerate,quadrature_err,tolerance,status");
}

TEST_CASE("format_real round-trips doubles bit-exactly") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 3.141592653589793, 1e300, 0.0}) {
        CHECK(std::stod(format_real(v)) == v);
    }
}

TEST_CASE("identity row CSV round-trip") {
    const IdentityRow row = sample_identity_row();
    const std::string line = to_csv(row);
    const IdentityRow back = identity_from_csv(line);

    CHECK(back.f == row.f);
    CHECK(back.w == row.w);
    CHECK(back.report.frame.a() == row.report.frame.a());
    CHECK(back.report.frame.b() == row.report.frame.b());
    CHECK(back.report.frame.x() == row.report.frame.x());
    CHECK(back.report.frame.alpha() == row.report.frame.alpha());
    CHECK(back.report.lhs == row.report.lhs);
    CHECK(back.report.term_main == row.report.term_main);
    CHECK(back.report.term_correction == row.report.term_correction);
    CHECK(back.report.term_derivative == row.report.term_derivative);
    CHECK(back.report.residual == row.report.residual);
    CHECK(back.report.quadrature_err == row.report.quadrature_err);
    CHECK(back.tolerance == row.tolerance);
    CHECK(back.pass == row.pass);
    // serializing again reproduces the exact same line
    CHECK(to_csv(back) == line);
}

TEST_CASE("bound row CSV round-trip") {
    const BoundRow row = sample_bound_row();
    const std::string line = to_csv(row);
    const BoundRow back = bound_from_csv(line);

    CHECK(back.f == row.f);
    CHECK(back.w == row.w);
    CHECK(back.report.lhs == row.report.lhs);
    CHECK(back.report.rhs_closed_paper == row.report.rhs_closed_paper);
    CHECK(back.report.rhs_closed_corrected == row.report.rhs_closed_corrected);
    CHECK(back.report.rhs_direct == row.report.rhs_direct);
    CHECK(back.report.A_paper == row.report.A_paper);
    CHECK(back.report.A_corrected == row.report.A_corrected);
    CHECK(back.report.B == row.report.B);
    CHECK(back.report.tightness == row.report.tightness);
    CHECK(back.report.degenerate == row.report.degenerate);
    CHECK(back.report.quadrature_err == row.report.quadrature_err);
    CHECK(back.tolerance == row.tolerance);
    CHECK(back.pass == row.pass);
    CHECK(to_csv(back) == line);
}

TEST_CASE("identity row JSON round-trip") {
    const IdentityRow row = sample_identity_row();
    const nlohmann::json j = to_json(row);
    const IdentityRow back = identity_from_json(j);
    CHECK(back.f == row.f);
    CHECK(back.w == row.w);
    CHECK(back.report.lhs == row.report.lhs);
    CHECK(back.report.residual == row.report.residual);
    CHECK(back.report.term_derivative == row.report.term_derivative);
    CHECK(back.tolerance == row.tolerance);
    CHECK(back.pass == row.pass);
    CHECK(to_json(back) == j);
}

TEST_CASE("bound row JSON round-trip") {
    const BoundRow row = sample_bound_row();
    const nlohmann::json j = to_json(row);
    const BoundRow back = bound_from_json(j);
    CHECK(back.report.rhs_closed_corrected == row.report.rhs_closed_corrected);
    CHECK(back.report.tightness == row.report.tightness);
    CHECK(back.report.degenerate == row.report.degenerate);
    CHECK(to_json(back) == j);
}

TEST_CASE("table output mentions the labels and the verdict") {
    const IdentityRow row = sample_identity_row();
    const std::string t = to_table(row);
    CHECK(t.find(row.f) != std::string::npos);
    CHECK(t.find(row.w) != std::string::npos);
    CHECK(t.find(row.pass ? "PASS" : "FAIL") != std::string::npos);
}
