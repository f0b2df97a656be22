#pragma once

#include <functional>
#include <vector>

#include "fracmont/errors.hpp"
#include "fracmont/quadrature.hpp"

namespace fracmont {

/// The tuple (a, b, x, alpha): interval, evaluation point, fractional order.
/// x = b is rejected at construction since the (b-x)^(1-alpha) prefactor of
/// the identities is singular there for alpha > 1.
class ProblemFrame {
public:
    ProblemFrame() = default; // unit frame (0, 1, 0, 1)
    ProblemFrame(double a, double b, double x, double alpha);

    double a() const { return a_; }
    double b() const { return b_; }
    double x() const { return x_; }
    double alpha() const { return alpha_; }

    /// The identities and the bound are only stated for alpha >= 1.
    void require_identity_order() const;

private:
    double a_ = 0.0, b_ = 1.0, x_ = 0.0, alpha_ = 1.0;
};

/// A differentiable test function with a certified derivative sup bound M.
/// Construction checks f' against central finite differences at random
/// interior points and samples |f'| <= M densely.
class TestFunction {
public:
    using Fn = std::function<double(double)>;

    TestFunction(Fn value, Fn derivative, double deriv_sup_bound,
                 double a, double b);

    double operator()(double t) const { return value_(t); }
    double derivative(double t) const { return derivative_(t); }
    double deriv_sup_bound() const { return deriv_sup_bound_; }
    double a() const { return a_; }
    double b() const { return b_; }

private:
    Fn value_, derivative_;
    double deriv_sup_bound_;
    double a_, b_;
};

/// A nonnegative integrable weight w with cumulative W(t) = integral_a^t w.
/// When no analytic cumulative is supplied, W is backed by a panel table
/// of cached prefix integrals built once at construction (no lazy state).
class WeightFunction {
public:
    using Fn = std::function<double(double)>;

    /// cumulative may be empty; it is then computed by quadrature.
    WeightFunction(Fn value, double a, double b, Fn cumulative_fn = {});

    double operator()(double t) const { return value_(t); }
    double cumulative(double t) const;
    double total_mass() const { return total_mass_; }
    double a() const { return a_; }
    double b() const { return b_; }

private:
    Fn value_;
    Fn closed_cumulative_; // empty when using the cached table
    double a_, b_;
    double total_mass_ = 0.0;
    std::vector<double> grid_;   // panel boundaries, grid_[0] = a
    std::vector<double> prefix_; // prefix_[i] = W(grid_[i])
};

/// Riemann-Liouville fractional integral J_a^alpha f evaluated at x:
/// (1/Gamma(alpha)) integral_a^x (x-t)^(alpha-1) f(t) dt for alpha > 0,
/// and f(x) exactly for alpha = 0.
double rl_integral(const std::function<double(double)>& f, double a, double alpha,
                   double x, const QuadratureConfig& cfg);

/// Classical Peano kernel P1: (t-a)/(b-a) on [a,x), (t-b)/(b-a) on [x,b].
double peano_classical(const ProblemFrame& frame, double t);

/// Fractional Peano kernel P2 = (b-x)^(1-alpha) Gamma(alpha) P1.
double peano_fractional(const ProblemFrame& frame, double t);

/// Weighted fractional Peano kernel Omega_w:
/// (b-x)^(1-alpha) Gamma(alpha) * W(t) on [a,x), and
/// (b-x)^(1-alpha) Gamma(alpha) * (W(t) - W(b)) on [x,b].
double peano_weighted(const ProblemFrame& frame, const WeightFunction& w, double t);

} // namespace fracmont
