#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracmont/corpus.hpp"
#include "fracmont/identities.hpp"

using namespace fracmont;

namespace {

const QuadratureConfig kDefault{};

WeightFunction uniform_weight(double a, double b) {
    return corpus::lookup_weight("uniform", a, b);
}

double rel_diff(double u, double v) {
    return std::abs(u - v) / std::max({std::abs(u), std::abs(v), 1e-30});
}

} // namespace

TEST_CASE("weighted identity: hand-checkable case at alpha = 1") {
    // w = 1, f = t^2, [0,1], x = 1/2: T1 = 1/3, T2 = 0, lhs = 1/4, so the
    // derivative term must come out at 1/4 - 1/3 = -1/12.
    const TestFunction f = corpus::lookup_function("poly:0,0,1", 0.0, 1.0);
    const WeightFunction w = uniform_weight(0.0, 1.0);
    const ProblemFrame frame(0.0, 1.0, 0.5, 1.0);
    const IdentityReport r = montgomery_weighted(frame, f, w, kDefault);

    CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(r.term_main == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r.term_correction == 0.0); // exact short-circuit at alpha = 1
    CHECK(r.term_derivative == doctest::Approx(-1.0 / 12.0).epsilon(1e-10));
    CHECK(std::abs(r.residual) <= 10.0 * r.quadrature_err);
    CHECK(r.converged);
}

TEST_CASE("weighted identity: constant f kills the derivative term") {
    const TestFunction f([](double) { return 3.25 ; }, [](double) { return 0.0; },
                         1e-12, 0.0, 1.0);
    const WeightFunction w = corpus::lookup_weight("linear:2", 0.0, 1.0);
    const ProblemFrame frame(0.0, 1.0, 0.3, 2.0);
    const IdentityReport r = montgomery_weighted(frame, f, w, kDefault);
    CHECK(std::abs(r.term_derivative) <= 10.0 * r.quadrature_err);
    CHECK(std::abs(r.residual) <= 10.0 * r.quadrature_err);
}

TEST_CASE("classical identity examples") {
    const WeightFunction w = uniform_weight(0.0, 1.0);
    SUBCASE("f = t at the midpoint") {
        const TestFunction f = corpus::lookup_function("poly:0,1", 0.0, 1.0);
        const ProblemFrame frame(0.0, 1.0, 0.5, 1.0);
        const IdentityReport r = montgomery_classical(frame, f, kDefault);
        CHECK(r.term_main == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(std::abs(r.term_derivative) <= 1e-12);
        CHECK(std::abs(r.residual) <= 1e-12);
    }
    SUBCASE("f = t^2 derivative term is -1/12") {
        const TestFunction f = corpus::lookup_function("poly:0,0,1", 0.0, 1.0);
        const ProblemFrame frame(0.0, 1.0, 0.5, 1.0);
        const IdentityReport r = montgomery_classical(frame, f, kDefault);
        CHECK(r.term_derivative == doctest::Approx(-1.0 / 12.0).epsilon(1e-11));
    }
}

TEST_CASE("fractional identity: closed forms at alpha = 2, x = 1/4, f = t") {
    // Hand integration of each term: T1 = 2/9, T2 = -13/72, T3 = -11/72,
    // and indeed 2/9 - (-13/72) + (-11/72) = 1/4 = f(x).
    const TestFunction f = corpus::lookup_function("poly:0,1", 0.0, 1.0);
    const ProblemFrame frame(0.0, 1.0, 0.25, 2.0);
    const IdentityReport r = montgomery_fractional(frame, f, kDefault);
    CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(r.term_main == doctest::Approx(2.0 / 9.0).epsilon(1e-11));
    CHECK(r.term_correction == doctest::Approx(-13.0 / 72.0).epsilon(1e-10));
    CHECK(r.term_derivative == doctest::Approx(-11.0 / 72.0).epsilon(1e-10));
    CHECK(std::abs(r.residual) <= 10.0 * r.quadrature_err);
}

TEST_CASE("reduction chain at alpha = 1, uniform weight") {
    const double a = 0.0, b = 1.0;
    const WeightFunction w = uniform_weight(a, b);
    for (const auto& name : corpus::default_function_names()) {
        CAPTURE(name);
        const TestFunction f = corpus::lookup_function(name, a, b);
        const ProblemFrame frame(a, b, 0.35, 1.0);
        const IdentityReport weighted = montgomery_weighted(frame, f, w, kDefault);
        const IdentityReport classical = montgomery_classical(frame, f, kDefault);
        const IdentityReport fractional = montgomery_fractional(frame, f, kDefault);

        // weighted terms / (b-a) == classical terms
        CHECK(rel_diff(weighted.term_main / (b - a), classical.term_main) <= 1e-10);
        CHECK(weighted.term_correction == 0.0);
        CHECK(rel_diff(weighted.term_derivative / (b - a),
                       classical.term_derivative) <= 1e-10);

        // weighted terms == (b-a) * fractional terms
        CHECK(rel_diff(weighted.term_main, (b - a) * fractional.term_main) <= 1e-10);
        CHECK(rel_diff(weighted.term_derivative,
                       (b - a) * fractional.term_derivative) <= 1e-10);
    }
}

TEST_CASE("uniform-weight reduction at fractional orders") {
    const double a = 0.5, b = 2.5;
    const WeightFunction w = uniform_weight(a, b);
    const TestFunction f = corpus::lookup_function("sin:2,0.3", a, b);
    for (double alpha : {1.25, 1.5, 2.0, 3.0}) {
        CAPTURE(alpha);
        const ProblemFrame frame(a, b, 1.1, alpha);
        const IdentityReport weighted = montgomery_weighted(frame, f, w, kDefault);
        const IdentityReport fractional = montgomery_fractional(frame, f, kDefault);
        CHECK(rel_diff(weighted.lhs, (b - a) * fractional.lhs) <= 1e-10);
        CHECK(rel_diff(weighted.term_main, (b - a) * fractional.term_main) <= 1e-10);
        CHECK(rel_diff(weighted.term_correction,
                       (b - a) * fractional.term_correction) <= 1e-9);
        CHECK(rel_diff(weighted.term_derivative,
                       (b - a) * fractional.term_derivative) <= 1e-9);
    }
}

TEST_CASE("scale covariance in the weight") {
    const double c = 3.7;
    const TestFunction f = corpus::lookup_function("exp:1", 0.0, 1.0);
    const WeightFunction w = corpus::lookup_weight("jacobi:1", 0.0, 1.0);
    const WeightFunction cw(
        [&, c](double t) { return c * w(t); }, 0.0, 1.0,
        [&, c](double t) { return c * w.cumulative(t); });
    const ProblemFrame frame(0.0, 1.0, 0.6, 1.5);
    const IdentityReport base = montgomery_weighted(frame, f, w, kDefault);
    const IdentityReport scaled = montgomery_weighted(frame, f, cw, kDefault);
    CHECK(rel_diff(scaled.lhs, c * base.lhs) <= 1e-10);
    CHECK(rel_diff(scaled.term_main, c * base.term_main) <= 1e-10);
    CHECK(rel_diff(scaled.term_correction, c * base.term_correction) <= 1e-9);
    CHECK(rel_diff(scaled.term_derivative, c * base.term_derivative) <= 1e-9);
}

TEST_CASE("residual grid across corpus pairs") {
    const double a = 0.0, b = 1.0, h = b - a;
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"poly:1,-2,3,0.5", "uniform"},
        {"exp:1", "jacobi:0.5"},
        {"sin:2,0.3", "linear:1.5"},
        {"runge:4", "bump:0.4,0.35"},
    };
    for (const auto& [fname, wname] : pairs) {
        const TestFunction f = corpus::lookup_function(fname, a, b);
        const WeightFunction w = corpus::lookup_weight(wname, a, b);
        for (double alpha : {1.0, 1.25, 1.5, 2.0, 3.0}) {
            for (double frac : {0.1, 0.25, 0.5, 0.75, 0.9}) {
                CAPTURE(fname);
                CAPTURE(wname);
                CAPTURE(alpha);
                CAPTURE(frac);
                const ProblemFrame frame(a, b, a + frac * h, alpha);
                const IdentityReport r = montgomery_weighted(frame, f, w, kDefault);
                CHECK(r.converged);
                CHECK(std::abs(r.residual) <=
                      std::max(1e-7, 20.0 * r.quadrature_err));
            }
        }
    }
}

TEST_CASE("identity order gating") {
    const TestFunction f = corpus::lookup_function("poly:0,1", 0.0, 1.0);
    const WeightFunction w = uniform_weight(0.0, 1.0);
    const ProblemFrame frame(0.0, 1.0, 0.5, 0.5);
    CHECK_THROWS_AS(montgomery_weighted(frame, f, w, kDefault), InvalidOrder);
    CHECK_THROWS_AS(montgomery_fractional(frame, f, kDefault), InvalidOrder);
}
