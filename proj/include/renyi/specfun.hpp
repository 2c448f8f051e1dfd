#pragma once

// Scalar special functions, log-space arithmetic and Gauss quadrature rules.

#include <cmath>
#include <span>
#include <vector>

namespace renyi {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// A nonnegative number stored as its natural logarithm. Zero is flagged
/// explicitly; `log_magnitude` is meaningless when `is_zero` is set.
struct LogValue {
    double log_magnitude = 0.0;
    bool is_zero = true;

    static LogValue zero() { return {}; }
    static LogValue from_log(double log_magnitude) { return {log_magnitude, false}; }
    /// `x` must be >= 0.
    static LogValue from_value(double x);

    /// exp(log_magnitude), or 0. Over/underflows like std::exp.
    double value() const { return is_zero ? 0.0 : std::exp(log_magnitude); }

    LogValue& operator*=(const LogValue& rhs);
    LogValue& operator/=(const LogValue& rhs);
    friend LogValue operator*(LogValue a, const LogValue& b) { return a *= b; }
    friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
};

/// ln Γ(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0. Throws DomainError otherwise.
double digamma(double x);

/// ln Γ(x + d) − ln Γ(x). Exact log-sum for small integer shifts, which keeps
/// full relative precision when x is large (Γ(mn+α)/Γ(mn) with mn ~ 1e5).
double log_gamma_ratio(double x, double d);

/// ln C(n, k) for real n >= k >= 0.
double log_binomial(double n, double k);

/// 1/Γ(x)² for any real x. Zero at nonpositive integers (within 1e-9),
/// reflection formula below 0.5. The square drops the sign of Γ.
LogValue inv_gamma_squared(double x);

/// Log of the sum of the (nonnegative) terms, shifted by the peak so that
/// nothing overflows. Zero iff every term is zero.
LogValue log_sum_accumulate(std::span<const LogValue> terms);

/// p_k^β(q) = (−1)^k k! L_k^β(q), the monic Laguerre polynomial, by the
/// three-term recurrence p_{j+1} = (q − 2j − 1 − β) p_j − j(j + β) p_{j−1}.
double laguerre_p(int k, double beta, double q);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    /// ln of each weight; stays finite where `weights` underflows.
    std::vector<double> log_weights;
    int order = 0;
    double weight_exponent = 0.0;
};

/// N-point Gauss rule for the weight x^a e^{−x} on [0, ∞). Throws DomainError
/// for a <= −1 or N < 1.
QuadratureRule gauss_laguerre_rule(int n, double weight_exponent);

/// N-point Gauss–Legendre rule on [lo, hi].
QuadratureRule gauss_legendre_rule(int n, double lo = -1.0, double hi = 1.0);

}  // namespace renyi
