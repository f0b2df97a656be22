#pragma once

#include <string>
#include <vector>

#include "fracmont/fractional_ops.hpp"

namespace fracmont {
namespace corpus {

/// Builds a TestFunction from a name in the fixed grammar:
///   poly:c0,c1,...   polynomial sum c_k t^k
///   exp:rate         e^(rate t)
///   sin:freq,phase   sin(freq t + phase)
///   runge:scale      1 / (1 + (scale t)^2)
/// The derivative and its sup bound are analytic per kind.
/// Throws UnknownName / DomainInvalid.
TestFunction lookup_function(const std::string& name, double a, double b);

/// Builds a WeightFunction from a name in the fixed grammar:
///   uniform              w = 1,                  W(t) = t - a
///   linear:slope         w = 1 + slope (t - a),  slope >= 0
///   jacobi:p             w = (b - t)^p,          p >= 0
///   bump:center,width    raised-cosine bump of half-width `width`
/// All four carry closed-form cumulatives.
WeightFunction lookup_weight(const std::string& name, double a, double b);

/// Names of a small default corpus used by the CLI and acceptance suite.
std::vector<std::string> default_function_names();
std::vector<std::string> default_weight_names();

/// Closed-form oracle for the fractional integral of a shifted monomial:
/// J_a^alpha (t-a)^beta evaluated at x equals
/// Gamma(beta+1)/Gamma(alpha+beta+1) * (x-a)^(alpha+beta).
double reference_rl(int beta, double a, double alpha, double x);

} // namespace corpus
} // namespace fracmont
