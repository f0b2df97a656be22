#include "fracmont/gamma.hpp"

#include <cmath>
#include <limits>

namespace fracmont {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's tabulation).
constexpr double kG = 7.0;
constexpr double kCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kSqrt2Pi = 2.5066282746310002;

double lanczos_sum(double z) {
    // z >= 0.5; series evaluated at z - 1 per the usual convention.
    double x = kCoeff[0];
    for (int i = 1; i < 9; ++i) {
        x += kCoeff[i] / (z - 1.0 + static_cast<double>(i));
    }
    return x;
}

} // namespace

double gamma(double z) {
    if (std::isnan(z)) return z;
    if (z < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        if (z == std::floor(z)) return std::numeric_limits<double>::quiet_NaN();
        return M_PI / (std::sin(M_PI * z) * gamma(1.0 - z));
    }
    const double zm1 = z - 1.0;
    const double t = zm1 + kG + 0.5;
    return kSqrt2Pi * std::pow(t, zm1 + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double log_gamma(double z) {
    if (z < 0.5) {
        return std::log(M_PI / std::abs(std::sin(M_PI * z))) - log_gamma(1.0 - z);
    }
    const double zm1 = z - 1.0;
    const double t = zm1 + kG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (zm1 + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(z));
}

} // namespace fracmont
