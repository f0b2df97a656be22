#pragma once

#include "fracmont/fractional_ops.hpp"
#include "fracmont/quadrature.hpp"

namespace fracmont {

/// Per-term evaluation of a Montgomery-type identity. The identity asserts
/// lhs = term_main - term_correction + term_derivative, so |residual| should
/// sit at quadrature-noise level whenever the engine converged.
struct IdentityReport {
    ProblemFrame frame;
    double lhs = 0.0;             ///< m(a,b) f(x), or f(x) for unweighted forms
    double term_main = 0.0;       ///< T1
    double term_correction = 0.0; ///< T2
    double term_derivative = 0.0; ///< T3
    double residual = 0.0;        ///< lhs - (T1 - T2 + T3)
    double quadrature_err = 0.0;  ///< combined engine estimate
    bool converged = true;        ///< false when any term hit ToleranceNotMet
};

/// Weighted fractional Montgomery identity:
///   m(a,b) f(x) = (b-x)^(1-alpha) Gamma(alpha) J_a^alpha (w f)(b)
///                 - J_a^(alpha-1) (Omega_w f)(b) + J_a^alpha (Omega_w f')(b).
/// T2 short-circuits to exact 0 at alpha = 1 (J^0 is the identity and
/// Omega_w(x, b) = 0).
IdentityReport montgomery_weighted(const ProblemFrame& frame, const TestFunction& f,
                                   const WeightFunction& w,
                                   const QuadratureConfig& cfg);

/// Unweighted fractional Montgomery identity (kernel P2); lhs = f(x).
IdentityReport montgomery_fractional(const ProblemFrame& frame, const TestFunction& f,
                                     const QuadratureConfig& cfg);

/// Classical Montgomery identity (alpha treated as 1, kernel P1); lhs = f(x).
IdentityReport montgomery_classical(const ProblemFrame& frame, const TestFunction& f,
                                    const QuadratureConfig& cfg);

} // namespace fracmont
