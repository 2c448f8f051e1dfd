#pragma once

// Exact average Rényi-2 entropy of a 2 × n bipartition, built from the
// log-weighted moment integral F(a, b) = ∫∫ x^a y^b ln(x² + y²) e^{−x−y}.

namespace renyi {

struct FArgs {
    int mx = 0;  // exponent of x
    int ny = 0;  // exponent of y
};

inline constexpr int kDefaultRuleOrder = 64;

/// ∫∫_{[0,∞)²} ln(x² + y²) e^{−px − qy} dx dy in closed form.
/// Throws DomainError unless p, q > 0.
double double_int_closed(double p, double q);

/// F(mx, ny). The radial part is integrated exactly in polar coordinates; the
/// remaining angular integral uses Gauss–Legendre with `rule_order` nodes per
/// half-quadrant and is accepted once doubling the order changes it by less
/// than 1e-8 relative. Throws ConvergenceError after two doublings, and
/// DomainError for negative exponents or rule_order < 2.
double f_mn(FArgs args, int rule_order = kDefaultRuleOrder);

/// S_2(2, n) = 2ψ(2n) − (n − 1)[F(n, n−2) − F(n−1, n−1)] / Γ(n)², the true
/// average (not the moment-based S̃). Throws DomainError for n < 2.
double renyi2_exact_2xn(int n, int rule_order = kDefaultRuleOrder);

/// S̃_2(2, n) = −ln[(n + 2)/(2n + 1)]. Throws DomainError for n < 1.
double renyi2_tilde_2xn(int n);

}  // namespace renyi
