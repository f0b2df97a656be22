#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fracmont/errors.hpp"

namespace fracmont {

enum class Scheme {
    gauss_jacobi,    ///< Gauss-Jacobi on the panel touching t=b, Gauss-Legendre elsewhere
    adaptive_graded, ///< composite Gauss-Legendre on a mesh graded toward t=b
    oracle_riemann,  ///< graded composite midpoint rule (the brute-force oracle)
};

struct QuadratureConfig {
    Scheme scheme = Scheme::gauss_jacobi;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 400;
    int jacobi_nodes = 32;
    /// Grading toward the singular endpoint; the effective exponent is
    /// max(grading_exponent, 2/(1+mu)) so that -1 < mu < 0 gets a finer mesh.
    double grading_exponent = 2.0;
    int oracle_panels = 100000;

    void validate() const;
};

/// An integral of the form  integral_a^b (b-t)^mu g(t) dt  where g is smooth
/// except for at most one interior breakpoint, and mu > -1 so the endpoint
/// singularity at t=b is integrable. The smooth factor g is never evaluated
/// at t=b when mu < 0 (open rules only).
struct SingularIntegrand {
    std::function<double(double)> smooth_part;
    std::optional<double> breakpoint;
    double exponent = 0.0; ///< mu in (b-t)^mu, must be > -1
    double a = 0.0;
    double b = 1.0;

    void validate() const;
};

struct IntegrationResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

/// Evaluates the integrand to roughly max(abs_tol, rel_tol*|value|).
/// Splits at the breakpoint before applying any rule. Throws ToleranceNotMet
/// (carrying the best value) if the subdivision budget runs out.
IntegrationResult integrate(const SingularIntegrand& integrand,
                            const QuadratureConfig& cfg);

/// Brute-force reference: composite midpoint rule on the graded mesh
/// t_k = b - (b-a) * ((panels-k)/panels)^q. Deterministic; converges as
/// panels -> infinity. Used as the independent oracle in tests.
double oracle_integrate(const SingularIntegrand& integrand, long panels,
                        double grading_exponent = 0.0);

/// Gauss rule on [-1,1] against the weight (1-s)^mu (Jacobi with beta=0;
/// mu=0 is Gauss-Legendre). Computed by Golub-Welsch; results are cached
/// per (n, mu) and safe to request concurrently.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_jacobi_rule(int n, double mu);

} // namespace fracmont
