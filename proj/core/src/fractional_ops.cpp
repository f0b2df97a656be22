#include "fracmont/fractional_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fracmont/gamma.hpp"

namespace fracmont {

ProblemFrame::ProblemFrame(double a, double b, double x, double alpha)
    : a_(a), b_(b), x_(x), alpha_(alpha) {
    if (!(a < b)) throw ValidationError("ProblemFrame requires a < b");
    if (!(a <= x && x < b))
        throw ValidationError("ProblemFrame requires a <= x < b");
    if (!(alpha >= 0.0)) throw InvalidOrder("ProblemFrame requires alpha >= 0");
}

void ProblemFrame::require_identity_order() const {
    if (alpha_ < 1.0)
        throw InvalidOrder("identity/bound operations require alpha >= 1");
}

namespace {

constexpr unsigned kValidationSeed = 0x5eed;

} // namespace

TestFunction::TestFunction(Fn value, Fn derivative, double deriv_sup_bound,
                           double a, double b)
    : value_(std::move(value)), derivative_(std::move(derivative)),
      deriv_sup_bound_(deriv_sup_bound), a_(a), b_(b) {
    if (!value_ || !derivative_) throw ValidationError("TestFunction needs f and f'");
    if (!(a < b)) throw ValidationError("TestFunction requires a < b");
    if (!(deriv_sup_bound > 0.0))
        throw ValidationError("deriv_sup_bound must be positive");

    // Central finite differences vs the supplied derivative at random
    // interior points.
    std::mt19937 rng(kValidationSeed);
    std::uniform_real_distribution<double> interior(0.05, 0.95);
    const double h = 1e-5 * (b - a);
    for (int i = 0; i < 20; ++i) {
        const double t = a + interior(rng) * (b - a);
        const double fd = (value_(t + h) - value_(t - h)) / (2.0 * h);
        const double d = derivative_(t);
        if (std::abs(fd - d) > 1e-6 * std::max(1.0, std::abs(d)))
            throw ValidationError("derivative inconsistent with finite differences");
    }
    // |f'| <= M on a dense sample.
    const double slack = 1.0 + 1e-9;
    for (int i = 0; i < 1000; ++i) {
        const double t = a + (b - a) * (i + 0.5) / 1000.0;
        if (std::abs(derivative_(t)) > deriv_sup_bound_ * slack + 1e-14)
            throw ValidationError("|f'| exceeds the declared sup bound");
    }
}

namespace {

// One panel of Gauss-Legendre for the cumulative-weight table.
double panel_integral(const std::function<double(double)>& w, double lo, double hi) {
    const GaussRule& rule = gauss_jacobi_rule(16, 0.0);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * w(mid + half * rule.nodes[i]);
    return acc * half;
}

} // namespace

WeightFunction::WeightFunction(Fn value, double a, double b, Fn cumulative_fn)
    : value_(std::move(value)), closed_cumulative_(std::move(cumulative_fn)),
      a_(a), b_(b) {
    if (!value_) throw ValidationError("WeightFunction needs w");
    if (!(a < b)) throw ValidationError("WeightFunction requires a < b");

    for (int i = 0; i < 1000; ++i) {
        const double t = a + (b - a) * (i + 0.5) / 1000.0;
        const double wt = value_(t);
        if (!std::isfinite(wt) || wt < -1e-12)
            throw ValidationError("weight must be nonnegative and finite");
    }

    if (!closed_cumulative_) {
        const int n = 512;
        grid_.resize(n + 1);
        prefix_.resize(n + 1);
        prefix_[0] = 0.0;
        for (int i = 0; i <= n; ++i) grid_[i] = a + (b - a) * i / n;
        for (int i = 1; i <= n; ++i)
            prefix_[i] = prefix_[i - 1] + panel_integral(value_, grid_[i - 1], grid_[i]);
        total_mass_ = prefix_[n];
    } else {
        total_mass_ = closed_cumulative_(b);
    }

    if (!std::isfinite(total_mass_) || total_mass_ < -1e-12)
        throw ValidationError("total mass must be finite and nonnegative");
    if (std::abs(cumulative(a)) > 1e-12 * std::max(1.0, total_mass_))
        throw ValidationError("W(a) must be 0");
    // W nondecreasing on a sampled grid.
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double cur = cumulative(a + (b - a) * i / 200.0);
        if (cur < prev - 1e-10 * std::max(1.0, total_mass_))
            throw ValidationError("cumulative weight must be nondecreasing");
        prev = cur;
    }
}

double WeightFunction::cumulative(double t) const {
    if (closed_cumulative_) return closed_cumulative_(t);
    const double clamped = std::clamp(t, a_, b_);
    const int n = static_cast<int>(grid_.size()) - 1;
    int i = static_cast<int>((clamped - a_) / (b_ - a_) * n);
    i = std::clamp(i, 0, n - 1);
    // prefix through grid_[i] plus a local correction panel.
    if (clamped <= grid_[i]) return prefix_[i];
    return prefix_[i] + panel_integral(value_, grid_[i], clamped);
}

double rl_integral(const std::function<double(double)>& f, double a, double alpha,
                   double x, const QuadratureConfig& cfg) {
    if (alpha < 0.0) throw InvalidOrder("rl_integral requires alpha >= 0");
    if (!(x > a)) throw ValidationError("rl_integral requires x > a");
    if (alpha == 0.0) return f(x); // J^0 is the identity operator
    SingularIntegrand integrand{f, std::nullopt, alpha - 1.0, a, x};
    return integrate(integrand, cfg).value / gamma(alpha);
}

double peano_classical(const ProblemFrame& frame, double t) {
    if (t < frame.a() || t > frame.b())
        throw OutOfDomain("Peano kernel queried outside [a, b]");
    if (t < frame.x()) return (t - frame.a()) / (frame.b() - frame.a());
    return (t - frame.b()) / (frame.b() - frame.a());
}

double peano_fractional(const ProblemFrame& frame, double t) {
    frame.require_identity_order();
    const double pref =
        std::pow(frame.b() - frame.x(), 1.0 - frame.alpha()) * gamma(frame.alpha());
    return pref * peano_classical(frame, t);
}

double peano_weighted(const ProblemFrame& frame, const WeightFunction& w, double t) {
    frame.require_identity_order();
    if (t < frame.a() || t > frame.b())
        throw OutOfDomain("Peano kernel queried outside [a, b]");
    const double pref =
        std::pow(frame.b() - frame.x(), 1.0 - frame.alpha()) * gamma(frame.alpha());
    if (t < frame.x()) return pref * w.cumulative(t);
    return pref * (w.cumulative(t) - w.total_mass());
}

} // namespace fracmont
