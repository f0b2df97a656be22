#pragma once

namespace fracmont {

/// Gamma function via the Lanczos approximation (g = 7, 9 terms),
/// good to better than 12 significant digits on [0.5, 35], extended to
/// z < 0.5 by the reflection formula. Poles at z = 0, -1, -2, ... return NaN.
double gamma(double z);

/// log|Gamma(z)| for z > 0, same Lanczos core.
double log_gamma(double z);

} // namespace fracmont
