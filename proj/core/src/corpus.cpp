#include "fracmont/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracmont/gamma.hpp"

namespace fracmont {
namespace corpus {

namespace {

std::vector<double> parse_numbers(const std::string& s, const std::string& name) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UnknownName("bad numeric argument '" + item + "' in '" + name + "'");
        }
    }
    return out;
}

std::pair<std::string, std::vector<double>> split_spec(const std::string& name) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) return {name, {}};
    return {name.substr(0, colon), parse_numbers(name.substr(colon + 1), name)};
}

// Sup bound for |sum k c_k t^(k-1)| via |coefficients| at max|t|.
double poly_deriv_bound(const std::vector<double>& c, double a, double b) {
    const double r = std::max(std::abs(a), std::abs(b));
    double bound = 0.0, rk = 1.0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        bound += static_cast<double>(k) * std::abs(c[k]) * rk;
        rk *= r;
    }
    return std::max(bound, 1e-30);
}

double poly_eval(const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double poly_deriv_eval(const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;)
        acc = acc * t + static_cast<double>(k) * c[k];
    return acc;
}

} // namespace

TestFunction lookup_function(const std::string& name, double a, double b) {
    if (!(a < b)) throw DomainInvalid("function domain requires a < b");
    const auto [kind, args] = split_spec(name);

    if (kind == "poly") {
        if (args.empty()) throw UnknownName("poly needs coefficients: " + name);
        const std::vector<double> c = args;
        return TestFunction([c](double t) { return poly_eval(c, t); },
                            [c](double t) { return poly_deriv_eval(c, t); },
                            poly_deriv_bound(c, a, b), a, b);
    }
    if (kind == "exp") {
        if (args.size() != 1) throw UnknownName("exp needs one rate: " + name);
        const double r = args[0];
        const double M = std::max(std::abs(r) * std::max(std::exp(r * a), std::exp(r * b)),
                                  1e-30);
        return TestFunction([r](double t) { return std::exp(r * t); },
                            [r](double t) { return r * std::exp(r * t); }, M, a, b);
    }
    if (kind == "sin") {
        if (args.size() != 2) throw UnknownName("sin needs freq,phase: " + name);
        const double freq = args[0], phase = args[1];
        const double M = std::max(std::abs(freq), 1e-30);
        return TestFunction([=](double t) { return std::sin(freq * t + phase); },
                            [=](double t) { return freq * std::cos(freq * t + phase); },
                            M, a, b);
    }
    if (kind == "runge") {
        if (args.size() != 1) throw UnknownName("runge needs one scale: " + name);
        const double s = args[0];
        // max_t |d/dt 1/(1+(st)^2)| over the real line is 3 sqrt(3) s / 8.
        const double M = std::max(3.0 * std::sqrt(3.0) * std::abs(s) / 8.0, 1e-30);
        return TestFunction(
            [s](double t) { return 1.0 / (1.0 + s * s * t * t); },
            [s](double t) {
                const double d = 1.0 + s * s * t * t;
                return -2.0 * s * s * t / (d * d);
            },
            M, a, b);
    }
    throw UnknownName("unknown function kind: " + name);
}

WeightFunction lookup_weight(const std::string& name, double a, double b) {
    if (!(a < b)) throw DomainInvalid("weight domain requires a < b");
    const auto [kind, args] = split_spec(name);

    if (kind == "uniform") {
        return WeightFunction([](double) { return 1.0; }, a, b,
                              [a](double t) { return t - a; });
    }
    if (kind == "linear") {
        if (args.size() != 1 || args[0] < 0.0)
            throw UnknownName("linear needs one slope >= 0: " + name);
        const double s = args[0];
        return WeightFunction(
            [=](double t) { return 1.0 + s * (t - a); }, a, b,
            [=](double t) { return (t - a) + 0.5 * s * (t - a) * (t - a); });
    }
    if (kind == "jacobi") {
        if (args.size() != 1 || args[0] < 0.0)
            throw UnknownName("jacobi needs one exponent p >= 0: " + name);
        const double p = args[0];
        return WeightFunction(
            [=](double t) { return std::pow(b - t, p); }, a, b,
            [=](double t) {
                return (std::pow(b - a, p + 1.0) - std::pow(b - t, p + 1.0)) / (p + 1.0);
            });
    }
    if (kind == "bump") {
        if (args.size() != 2 || args[1] <= 0.0)
            throw UnknownName("bump needs center,width with width > 0: " + name);
        const double c = args[0], d = args[1];
        // Raised cosine on [c-d, c+d], zero elsewhere; antiderivative of the
        // bump restricted to [a, t].
        auto anti = [=](double u) {
            return 0.5 * (u + (d / M_PI) * std::sin(M_PI * (u - c) / d));
        };
        const double lo = std::max(a, c - d);
        return WeightFunction(
            [=](double t) {
                if (t <= c - d || t >= c + d) return 0.0;
                return 0.5 * (1.0 + std::cos(M_PI * (t - c) / d));
            },
            a, b,
            [=](double t) {
                const double hi = std::clamp(t, c - d, c + d);
                if (hi <= lo) return 0.0;
                return anti(hi) - anti(lo);
            });
    }
    throw UnknownName("unknown weight kind: " + name);
}

std::vector<std::string> default_function_names() {
    return {"poly:0,1", "poly:1,-2,3,0.5", "exp:1", "sin:2,0.3", "runge:4"};
}

std::vector<std::string> default_weight_names() {
    return {"uniform", "linear:1.5", "jacobi:0.5", "bump:0.4,0.35"};
}

double reference_rl(int beta, double a, double alpha, double x) {
    if (alpha < 0.0) throw InvalidOrder("reference_rl requires alpha >= 0");
    if (beta < 0) throw InvalidOrder("reference_rl requires beta >= 0");
    const double bd = static_cast<double>(beta);
    return gamma(bd + 1.0) / gamma(alpha + bd + 1.0) *
           std::pow(x - a, alpha + bd);
}

} // namespace corpus
} // namespace fracmont
