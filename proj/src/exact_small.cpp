#include "renyi/exact_small.hpp"

#include <fmt/format.h>

#include <cmath>

#include "renyi/errors.hpp"
#include "renyi/specfun.hpp"

namespace renyi {

namespace {

constexpr double kRelTolerance = 1e-8;
constexpr int kMaxDoublings = 2;

// ∫_0^{π/2} g(θ) dθ with Gauss–Legendre on each half of the quadrant.
template <class Integrand>
double angular_quadrature(const Integrand& g, int order) {
    double total = 0.0;
    for (const auto& [lo, hi] : {std::pair{0.0, kPi / 4}, std::pair{kPi / 4, kPi / 2}}) {
        const auto rule = gauss_legendre_rule(order, lo, hi);
        for (int i = 0; i < order; ++i) total += rule.weights[i] * g(rule.nodes[i]);
    }
    return total;
}

template <class Integrand>
double converged_angular(const Integrand& g, int order, const char* what) {
    if (order < 2) throw DomainError(fmt::format("{}: rule order must be >= 2, got {}", what, order));
    double coarse = angular_quadrature(g, order);
    for (int doubling = 0; doubling < kMaxDoublings; ++doubling) {
        order *= 2;
        const double fine = angular_quadrature(g, order);
        if (std::abs(fine - coarse) <= kRelTolerance * std::abs(fine) + 1e-300) return fine;
        if (doubling + 1 == kMaxDoublings)
            throw ConvergenceError(
                fmt::format("{}: no convergence at order {} (estimates {:.17g} and {:.17g})", what, order, coarse, fine),
                coarse, fine);
        coarse = fine;
    }
    return coarse;
}

}  // namespace

double double_int_closed(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw DomainError(fmt::format("double_int_closed: need p, q > 0, got {}, {}", p, q));
    const double inner = (2.0 * p * p * std::log(q) + 2.0 * q * q * std::log(p) - kPi * p * q) / (2.0 * (p * p + q * q));
    return -(2.0 / (p * q)) * (kEulerGamma + inner);
}

double f_mn(FArgs args, int rule_order) {
    if (args.mx < 0 || args.ny < 0) throw DomainError("f_mn: exponents must be nonnegative");
    const double a = args.mx;
    const double b = args.ny;
    const double s = a + b + 2.0;
    const double log_gamma_s = log_gamma(s);
    const double psi_s = digamma(s);
    // ∫_0^∞ r^{s−1} 2 ln r e^{−cr} dr = 2Γ(s)(ψ(s) − ln c)/c^s with c = cos θ + sin θ
    const auto integrand = [&](double theta) {
        const double c = std::cos(theta) + std::sin(theta);
        const double log_c = std::log(c);
        const double log_mag = log_gamma_s + a * std::log(std::cos(theta)) + b * std::log(std::sin(theta)) - s * log_c;
        return 2.0 * std::exp(log_mag) * (psi_s - log_c);
    };
    return converged_angular(integrand, rule_order, "f_mn");
}

double renyi2_exact_2xn(int n, int rule_order) {
    if (n < 2) throw DomainError(fmt::format("renyi2_exact_2xn: need n >= 2, got {}", n));
    const double s = 2.0 * n;
    const double psi_s = digamma(s);
    // [F(n, n−2) − F(n−1, n−1)] / Γ(n)², differenced inside the integrand:
    // cos^n sin^{n−2} − cos^{n−1} sin^{n−1} = cos^{n−1} sin^{n−2} (cos − sin)
    const double log_prefactor = log_gamma(s) - 2.0 * log_gamma(n);
    const auto integrand = [&](double theta) {
        const double cs = std::cos(theta);
        const double sn = std::sin(theta);
        const double log_c = std::log(cs + sn);
        const double log_mag = log_prefactor + (n - 1.0) * std::log(cs) + (n - 2.0) * std::log(sn) - s * log_c;
        return 2.0 * std::exp(log_mag) * (cs - sn) * (psi_s - log_c);
    };
    const double scaled_difference = converged_angular(integrand, rule_order, "renyi2_exact_2xn");
    return 2.0 * psi_s - (n - 1.0) * scaled_difference;
}

double renyi2_tilde_2xn(int n) {
    if (n < 1) throw DomainError(fmt::format("renyi2_tilde_2xn: need n >= 1, got {}", n));
    return -std::log((n + 2.0) / (2.0 * n + 1.0));
}

}  // namespace renyi
