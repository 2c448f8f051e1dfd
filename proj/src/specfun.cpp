#include "renyi/specfun.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

constexpr double kIntegerTolerance = 1e-9;
constexpr int kMaxExactShift = 4096;

bool is_integer(double x, double tol = 0.0) { return std::abs(x - std::round(x)) <= tol; }

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double result() const { return sum + carry; }
};

// Generalized Laguerre L_n^a(x) and L_{n-1}^a(x) sharing a common scale
// factor exp(log_scale), so the recurrence survives large n and x.
struct ScaledLaguerre {
    double value = 1.0;
    double previous = 0.0;
    double log_scale = 0.0;
};

ScaledLaguerre scaled_laguerre(int n, double a, double x) {
    ScaledLaguerre out;
    double prev = 1.0;
    double cur = 1.0 + a - x;
    if (n == 0) return out;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150) {
            cur *= 1e-150;
            prev *= 1e-150;
            out.log_scale += 150.0 * std::log(10.0);
        }
    }
    out.value = cur;
    out.previous = prev;
    return out;
}

}  // namespace

LogValue LogValue::from_value(double x) {
    if (x < 0.0 || std::isnan(x)) throw DomainError("LogValue::from_value: negative input");
    if (x == 0.0) return zero();
    return from_log(std::log(x));
}

LogValue& LogValue::operator*=(const LogValue& rhs) {
    if (is_zero || rhs.is_zero) {
        *this = zero();
    } else {
        log_magnitude += rhs.log_magnitude;
    }
    return *this;
}

LogValue& LogValue::operator/=(const LogValue& rhs) {
    if (rhs.is_zero) throw DomainError("LogValue: division by zero");
    if (!is_zero) log_magnitude -= rhs.log_magnitude;
    return *this;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: argument must be positive, got " + std::to_string(x));
    double result = 0.0;
    while (x < 12.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli tail: B_2k / (2k x^2k), k = 1..7
    const double tail =
        inv2 *
        (1.0 / 12 -
         inv2 * (1.0 / 120 -
                 inv2 * (1.0 / 252 -
                         inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12.0))))));
    return result + std::log(x) - 0.5 * inv - tail;
}

double log_gamma_ratio(double x, double d) {
    if (d == 0.0) return 0.0;
    if (is_integer(d) && std::abs(d) <= kMaxExactShift && x > 0.0 && x + d > 0.0) {
        if (d < 0.0) return -log_gamma_ratio(x + d, -d);
        CompensatedSum acc;
        const int steps = static_cast<int>(std::lround(d));
        for (int t = 0; t < steps; ++t) acc.add(std::log(x + t));
        return acc.result();
    }
    return log_gamma(x + d) - log_gamma(x);
}

double log_binomial(double n, double k) {
    if (k < 0.0 || k > n) throw DomainError("log_binomial: need 0 <= k <= n");
    return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

LogValue inv_gamma_squared(double x) {
    if (x <= 0.0 && is_integer(x, kIntegerTolerance)) return LogValue::zero();
    if (x < 0.5) {
        // Γ(x)Γ(1−x) = π / sin(πx)
        const double s = std::abs(std::sin(kPi * x));
        return LogValue::from_log(2.0 * (log_gamma(1.0 - x) + std::log(s) - std::log(kPi)));
    }
    return LogValue::from_log(-2.0 * log_gamma(x));
}

LogValue log_sum_accumulate(std::span<const LogValue> terms) {
    double peak = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms)
        if (!t.is_zero) peak = std::max(peak, t.log_magnitude);
    if (peak == -std::numeric_limits<double>::infinity()) return LogValue::zero();

    CompensatedSum acc;
    for (const auto& t : terms)
        if (!t.is_zero) acc.add(std::exp(t.log_magnitude - peak));
    return LogValue::from_log(peak + std::log(acc.result()));
}

double laguerre_p(int k, double beta, double q) {
    if (k < 0) throw DomainError("laguerre_p: degree must be nonnegative");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = q - beta - 1.0;
    for (int j = 1; j < k; ++j) {
        const double next = (q - 2.0 * j - 1.0 - beta) * cur - j * (j + beta) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

QuadratureRule gauss_laguerre_rule(int n, double weight_exponent) {
    if (n < 1) throw DomainError("gauss_laguerre_rule: need at least one node");
    if (!(weight_exponent > -1.0)) throw DomainError("gauss_laguerre_rule: weight exponent must exceed -1");
    const double a = weight_exponent;

    // Golub–Welsch: eigenvalues of the Jacobi matrix are the nodes.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + a + 1.0;
    for (int i = 0; i + 1 < n; ++i) sub[i] = std::sqrt((i + 1.0) * (i + 1.0 + a));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("gauss_laguerre_rule: tridiagonal eigensolver failed");

    QuadratureRule rule;
    rule.order = n;
    rule.weight_exponent = a;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.log_weights.resize(n);

    // ln(k!/Γ(k+a+1)): squared norm reciprocals of L_k^a
    std::vector<double> log_inv_norm(n);
    for (int k = 0; k < n; ++k) log_inv_norm[k] = log_gamma(k + 1.0) - log_gamma(k + a + 1.0);

    std::vector<LogValue> christoffel(n);
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[i];
        // Newton polish against L_n^a, with L_n' = (n L_n − (n + a) L_{n−1}) / x.
        for (int iter = 0; iter < 8; ++iter) {
            const auto l = scaled_laguerre(n, a, x);
            const double deriv = (n * l.value - (n + a) * l.previous) / x;
            const double step = l.value / deriv;
            x -= step;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
        }
        rule.nodes[i] = x;

        // w = 1 / Σ_k φ_k(x)², orthonormal φ_k. Much less sensitive to node
        // error than the L_{n−1}(x)^{-2} form.
        double prev = 0.0;
        double cur = 1.0;
        double log_scale = 0.0;
        for (int k = 0; k < n; ++k) {
            christoffel[k] = cur == 0.0 ? LogValue::zero()
                                        : LogValue::from_log(2.0 * (std::log(std::abs(cur)) + log_scale) + log_inv_norm[k]);
            const double next = k == 0 ? 1.0 + a - x : ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
            prev = cur;
            cur = next;
            if (std::abs(cur) > 1e150) {
                cur *= 1e-150;
                prev *= 1e-150;
                log_scale += 150.0 * std::log(10.0);
            }
        }
        rule.log_weights[i] = -log_sum_accumulate(christoffel).log_magnitude;
        rule.weights[i] = std::exp(rule.log_weights[i]);
    }
    return rule;
}

QuadratureRule gauss_legendre_rule(int n, double lo, double hi) {
    if (n < 1) throw DomainError("gauss_legendre_rule: need at least one node");
    QuadratureRule rule;
    rule.order = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.log_weights.resize(n);

    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double deriv = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            deriv = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / deriv;
            x -= step;
            if (std::abs(step) <= 1e-16) break;
        }
        // cos() ordering is descending; store ascending.
        const int slot = n - 1 - i;
        rule.nodes[slot] = mid + half * x;
        rule.weights[slot] = half * 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule.log_weights[slot] = std::log(rule.weights[slot]);
    }
    return rule;
}

}  // namespace renyi
