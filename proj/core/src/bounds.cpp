#include "fracmont/bounds.hpp"

#include <cmath>

#include "fracmont/gamma.hpp"

namespace fracmont {

namespace {

struct Term {
    double value = 0.0;
    double err = 0.0;
    bool converged = true;
};

Term run(const SingularIntegrand& integrand, const QuadratureConfig& cfg) {
    try {
        const IntegrationResult r = integrate(integrand, cfg);
        return {r.value, r.err_estimate, true};
    } catch (const ToleranceNotMet& e) {
        return {e.best_value, e.err_estimate, false};
    }
}

// (1/Gamma(alpha)) integral (b-t)^(alpha-1) |Omega_w| dt with error tracking.
Term kernel_l1_term(const ProblemFrame& frame, const WeightFunction& w,
                    const QuadratureConfig& cfg) {
    const double a = frame.a(), b = frame.b(), x = frame.x(), alpha = frame.alpha();
    const double pref = std::pow(b - x, 1.0 - alpha);
    const double mass = w.total_mass();

    Term left; // first branch: Omega_w >= 0 on [a, x)
    if (x > a) {
        left = run({[&](double t) {
                        return std::pow(b - t, alpha - 1.0) * w.cumulative(t);
                    },
                    std::nullopt, 0.0, a, x}, cfg);
    }
    // second branch: Omega_w <= 0 on [x, b], so |Omega_w| = mass - W.
    Term right = run({[&](double t) { return mass - w.cumulative(t); },
                      std::nullopt, alpha - 1.0, x, b}, cfg);

    return {pref * (left.value + right.value), pref * (left.err + right.err),
            left.converged && right.converged};
}

} // namespace

double kernel_l1(const ProblemFrame& frame, const WeightFunction& w,
                 const QuadratureConfig& cfg) {
    frame.require_identity_order();
    return kernel_l1_term(frame, w, cfg).value;
}

BoundReport ostrowski_bound(const ProblemFrame& frame, const TestFunction& f,
                            const WeightFunction& w, const QuadratureConfig& cfg) {
    frame.require_identity_order();
    const double a = frame.a(), b = frame.b(), x = frame.x(), alpha = frame.alpha();
    const double pref = std::pow(b - x, 1.0 - alpha);
    const double M = f.deriv_sup_bound();
    const double mass = w.total_mass();

    // The deviation side reuses the identity terms: by the identity it
    // equals |T3|.
    const IdentityReport id = montgomery_weighted(frame, f, w, cfg);

    BoundReport report;
    report.frame = frame;
    report.lhs = std::abs(mass * f(x) - id.term_main + id.term_correction);

    // A(x) pieces. Both forms share the second integral (exponent alpha);
    // they differ in the first integral's exponent.
    Term a_first_corr, a_first_paper;
    if (x > a) {
        a_first_corr = run({[&](double u) { return std::pow(b - u, alpha) * w(u); },
                            std::nullopt, 0.0, a, x}, cfg);
        a_first_paper = run({[&](double u) {
                                 return std::pow(b - u, alpha - 1.0) * w(u);
                             },
                             std::nullopt, 0.0, a, x}, cfg);
    }
    Term a_second = run({[&](double u) { return w(u); },
                         std::nullopt, alpha, x, b}, cfg);

    report.A_corrected = a_first_corr.value - a_second.value;
    report.A_paper = a_first_paper.value - a_second.value;
    report.B = 2.0 * w.cumulative(x) - mass;

    const double rhs_scale = M * pref / alpha;
    const double bx_alpha = std::pow(b - x, alpha);
    report.rhs_closed_corrected = rhs_scale * (report.A_corrected - bx_alpha * report.B);
    report.rhs_closed_paper = rhs_scale * (report.A_paper - bx_alpha * report.B);

    const Term kl1 = kernel_l1_term(frame, w, cfg);
    report.rhs_direct = M * kl1.value;

    report.quadrature_err = std::max(
        id.quadrature_err + M * kl1.err +
            std::abs(rhs_scale) * (a_first_corr.err + a_second.err),
        0.5 * cfg.abs_tol);
    report.converged = id.converged && kl1.converged && a_first_corr.converged &&
                       a_first_paper.converged && a_second.converged;

    if (report.rhs_direct > std::max(1e-13 * M * (b - a), 4.0 * M * kl1.err)) {
        report.tightness = report.lhs / report.rhs_direct;
    } else {
        report.degenerate = true;
        report.tightness = 0.0;
    }
    return report;
}

std::vector<BoundReport> tightness_sweep(const std::vector<ProblemFrame>& frames,
                                         const TestFunction& f,
                                         const WeightFunction& w,
                                         const QuadratureConfig& cfg) {
    std::vector<BoundReport> reports;
    reports.reserve(frames.size());
    for (const ProblemFrame& frame : frames) {
        try {
            reports.push_back(ostrowski_bound(frame, f, w, cfg));
        } catch (const std::exception& e) {
            BoundReport failed;
            failed.frame = frame;
            failed.converged = false;
            failed.error = e.what();
            reports.push_back(std::move(failed));
        }
    }
    return reports;
}

} // namespace fracmont
