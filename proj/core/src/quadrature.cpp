#include "fracmont/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "fracmont/gamma.hpp"

namespace fracmont {

void QuadratureConfig::validate() const {
    if (abs_tol < 0 || rel_tol < 0 || (abs_tol == 0 && rel_tol == 0))
        throw std::invalid_argument("abs_tol and rel_tol must be >= 0 and not both zero");
    if (max_subdivisions < 1)
        throw std::invalid_argument("max_subdivisions must be positive");
    if (jacobi_nodes < 2)
        throw std::invalid_argument("jacobi_nodes must be >= 2");
    if (grading_exponent < 1.0)
        throw std::invalid_argument("grading_exponent must be >= 1");
    if (oracle_panels < 16)
        throw std::invalid_argument("oracle_panels must be >= 16");
}

void SingularIntegrand::validate() const {
    if (!smooth_part)
        throw InvalidIntegrand("smooth_part is empty");
    if (!(a < b))
        throw InvalidIntegrand("interval requires a < b");
    if (!(exponent > -1.0))
        throw InvalidIntegrand("exponent must be > -1 for integrability at t = b");
    if (breakpoint && !(a < *breakpoint && *breakpoint < b))
        throw InvalidIntegrand("breakpoint must lie strictly inside (a, b)");
}

namespace {

double sample(const std::function<double(double)>& g, double t) {
    const double v = g(t);
    if (!std::isfinite(v)) throw NonFiniteSample(t);
    return v;
}

// Recurrence coefficients of monic Jacobi polynomials for the weight
// (1-x)^A (1+x)^B on [-1,1]; here B = 0. Nodes/weights by Golub-Welsch.
GaussRule compute_rule(int n, double mu) {
    const double A = mu, B = 0.0;
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    diag(0) = (B - A) / (A + B + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + A + B;
        diag(k) = (B * B - A * A) / (s * (s + 2.0));
        const double beta = 4.0 * k * (k + A) * (k + B) * (k + A + B) /
                            (s * s * (s + 1.0) * (s - 1.0));
        sub(k - 1) = std::sqrt(beta);
    }
    const double beta0 =
        std::pow(2.0, A + B + 1.0) * gamma(A + 1.0) * gamma(B + 1.0) / gamma(A + B + 2.0);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = beta0 * v0 * v0;
    }
    return rule;
}

struct RuleKey {
    int n;
    std::uint64_t mu_bits;
    auto operator<=>(const RuleKey&) const = default;
};

std::shared_mutex g_rule_mutex;
std::map<RuleKey, std::unique_ptr<GaussRule>> g_rule_cache;

} // namespace

const GaussRule& gauss_jacobi_rule(int n, double mu) {
    if (n < 1) throw std::invalid_argument("rule size must be >= 1");
    if (!(mu > -1.0)) throw std::invalid_argument("Jacobi exponent must be > -1");
    const RuleKey key{n, std::bit_cast<std::uint64_t>(mu)};
    {
        std::shared_lock lock(g_rule_mutex);
        auto it = g_rule_cache.find(key);
        if (it != g_rule_cache.end()) return *it->second;
    }
    auto rule = std::make_unique<GaussRule>(compute_rule(n, mu));
    std::unique_lock lock(g_rule_mutex);
    auto [it, inserted] = g_rule_cache.try_emplace(key, std::move(rule));
    return *it->second;
}

namespace {

// integral_c^b (b-t)^mu g(t) dt with the kernel absorbed into the rule weight.
double jacobi_panel(const SingularIntegrand& f, double c, int n) {
    const GaussRule& rule = gauss_jacobi_rule(n, f.exponent);
    const double half = 0.5 * (f.b - c);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = c + half * (1.0 + rule.nodes[i]);
        acc += rule.weights[i] * sample(f.smooth_part, t);
    }
    return acc * std::pow(half, f.exponent + 1.0);
}

// integral_c^d (b-t)^mu g(t) dt on a panel with d < b, where the kernel
// factor is smooth; plain Gauss-Legendre.
double legendre_panel(const SingularIntegrand& f, double c, double d, int n) {
    const GaussRule& rule = gauss_jacobi_rule(n, 0.0);
    const double mid = 0.5 * (c + d), half = 0.5 * (d - c);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = mid + half * rule.nodes[i];
        acc += rule.weights[i] * std::pow(f.b - t, f.exponent) *
               sample(f.smooth_part, t);
    }
    return acc * half;
}

struct Panel {
    double lo, hi;
    bool touches_b;
    double value, err;
};

Panel eval_panel(const SingularIntegrand& f, double lo, double hi, bool touches_b,
                 int n) {
    Panel p{lo, hi, touches_b, 0.0, 0.0};
    double coarse, fine;
    if (touches_b) {
        coarse = jacobi_panel(f, lo, n);
        fine = jacobi_panel(f, lo, 2 * n);
    } else {
        coarse = legendre_panel(f, lo, hi, n);
        fine = legendre_panel(f, lo, hi, 2 * n);
    }
    p.value = fine;
    p.err = std::abs(fine - coarse);
    return p;
}

double effective_grading(const QuadratureConfig& cfg, double mu) {
    return std::max(cfg.grading_exponent, 2.0 / (1.0 + mu));
}

IntegrationResult integrate_gauss_jacobi(const SingularIntegrand& f,
                                         const QuadratureConfig& cfg) {
    std::vector<Panel> panels;
    if (f.breakpoint) {
        panels.push_back(eval_panel(f, f.a, *f.breakpoint, false, cfg.jacobi_nodes));
        panels.push_back(eval_panel(f, *f.breakpoint, f.b, true, cfg.jacobi_nodes));
    } else {
        panels.push_back(eval_panel(f, f.a, f.b, true, cfg.jacobi_nodes));
    }

    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * (f.b - f.a);
    int splits = 0;
    for (;;) {
        double total = 0.0, toterr = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            toterr += p.err;
        }
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (toterr <= tol) return {total, toterr};

        auto worst = std::max_element(
            panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.err < y.err; });
        if (splits >= cfg.max_subdivisions || worst->hi - worst->lo < min_width)
            throw ToleranceNotMet(total, toterr);
        ++splits;
        const Panel old = *worst;
        const double mid = 0.5 * (old.lo + old.hi);
        *worst = eval_panel(f, old.lo, mid, false, cfg.jacobi_nodes);
        panels.push_back(eval_panel(f, mid, old.hi, old.touches_b, cfg.jacobi_nodes));
    }
}

// Composite Gauss-Legendre on a mesh graded toward t=b (for the segment
// ending at b) or uniform (elsewhere); cell count doubles until the
// two finest results agree to tolerance.
double graded_segment(const SingularIntegrand& f, double lo, double hi, bool graded,
                      double q, long m) {
    double acc = 0.0;
    double prev = lo;
    for (long k = 1; k <= m; ++k) {
        double tk;
        if (graded) {
            const double r = static_cast<double>(m - k) / static_cast<double>(m);
            tk = hi - (hi - lo) * std::pow(r, q);
        } else {
            tk = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(m);
        }
        if (tk > prev) acc += legendre_panel(f, prev, tk, 8);
        prev = tk;
    }
    return acc;
}

IntegrationResult integrate_adaptive_graded(const SingularIntegrand& f,
                                            const QuadratureConfig& cfg) {
    const double q = effective_grading(cfg, f.exponent);
    struct Segment {
        double lo, hi;
        bool graded;
    };
    std::vector<Segment> segments;
    if (f.breakpoint) {
        segments.push_back({f.a, *f.breakpoint, false});
        segments.push_back({*f.breakpoint, f.b, true});
    } else {
        segments.push_back({f.a, f.b, true});
    }

    double total = 0.0, toterr = 0.0;
    for (const Segment& s : segments) {
        long m = 8;
        double coarse = graded_segment(f, s.lo, s.hi, s.graded, q, m);
        double fine = 0.0, err = 0.0;
        bool ok = false;
        for (int round = 0; round < cfg.max_subdivisions && m < (1L << 22); ++round) {
            m *= 2;
            fine = graded_segment(f, s.lo, s.hi, s.graded, q, m);
            err = std::abs(fine - coarse);
            if (err <= std::max(0.5 * cfg.abs_tol, cfg.rel_tol * std::abs(fine))) {
                ok = true;
                break;
            }
            coarse = fine;
        }
        if (!ok) throw ToleranceNotMet(total + fine, toterr + err);
        total += fine;
        toterr += err;
    }
    return {total, toterr};
}

} // namespace

double oracle_integrate(const SingularIntegrand& f, long panels,
                        double grading_exponent) {
    f.validate();
    if (panels < 16) throw std::invalid_argument("oracle needs >= 16 panels");
    const double q = (grading_exponent >= 1.0)
                         ? std::max(grading_exponent, 2.0 / (1.0 + f.exponent))
                         : std::max(2.0, 2.0 / (1.0 + f.exponent));
    // Work in the distance s = b - t so the weight factor s^mu stays exact
    // even when the graded mesh point t_k rounds to b in double precision.
    double acc = 0.0;
    double s_prev = f.b - f.a;
    for (long k = 1; k <= panels; ++k) {
        const double r = static_cast<double>(panels - k) / static_cast<double>(panels);
        const double s_k = (f.b - f.a) * std::pow(r, q);
        const double width = s_prev - s_k;
        if (width > 0.0) {
            const double sm = 0.5 * (s_prev + s_k);
            acc += width * std::pow(sm, f.exponent) *
                   sample(f.smooth_part, f.b - sm);
        }
        s_prev = s_k;
    }
    return acc;
}

IntegrationResult integrate(const SingularIntegrand& integrand,
                            const QuadratureConfig& cfg) {
    integrand.validate();
    cfg.validate();
    switch (cfg.scheme) {
    case Scheme::gauss_jacobi:
        return integrate_gauss_jacobi(integrand, cfg);
    case Scheme::adaptive_graded:
        return integrate_adaptive_graded(integrand, cfg);
    case Scheme::oracle_riemann: {
        const double fine = oracle_integrate(integrand, cfg.oracle_panels,
                                             cfg.grading_exponent);
        const double coarse = oracle_integrate(integrand, cfg.oracle_panels / 2,
                                               cfg.grading_exponent);
        return {fine, std::abs(fine - coarse)};
    }
    }
    throw std::invalid_argument("unknown quadrature scheme");
}

} // namespace fracmont
