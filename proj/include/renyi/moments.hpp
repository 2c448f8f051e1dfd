#pragma once

// Averaged Rényi moments Z_α = ⟨Σ p_i^α⟩ of the reduced state of a Haar-random
// bipartite pure state, the entropy S̃_α = ln Z_α / (1 − α) built from them,
// Page's von Neumann average, and the large-n asymptotics.

#include <cstdint>
#include <string_view>

#include "renyi/specfun.hpp"

namespace renyi {

/// Hilbert-space dimensions of a bipartition, canonicalized so that m <= n.
/// The spectrum of the smaller factor is shared by the larger one (Schmidt
/// decomposition), so swapping leaves every entropy unchanged.
class SystemDims {
public:
    /// Throws DomainError if either dimension is < 1.
    SystemDims(std::int64_t m, std::int64_t n);

    std::int64_t m() const { return m_; }
    std::int64_t n() const { return n_; }
    std::int64_t product() const { return m_ * n_; }
    bool swapped() const { return swapped_; }

private:
    std::int64_t m_;
    std::int64_t n_;
    bool swapped_;
};

class RenyiOrder {
public:
    enum class Kind { finite, infinite };

    /// Throws DomainError for negative or non-finite α.
    static RenyiOrder finite(double alpha);
    static RenyiOrder infinite();
    /// Parses "inf"/"infinity"/"∞" or a nonnegative decimal.
    static RenyiOrder parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_infinite() const { return kind_ == Kind::infinite; }
    /// Meaningless for the infinite kind.
    double value() const { return value_; }
    bool integer_fast_path() const { return integer_; }
    int as_int() const { return static_cast<int>(value_); }
    /// "inf" or the shortest decimal that round-trips.
    std::string label() const;

private:
    RenyiOrder(Kind kind, double value, bool integer) : kind_(kind), value_(value), integer_(integer) {}

    Kind kind_;
    double value_;
    bool integer_;
};

enum class MomentMethod { exact_int_sum, exact_real_sum, page_limit, infinite_limit, asymptotic };

std::string_view to_string(MomentMethod method);

struct MomentResult {
    LogValue log_z;
    double entropy = 0.0;  // S̃_α in nats
    double info = 0.0;     // ln m − S̃_α
    MomentMethod method = MomentMethod::exact_int_sum;
};

/// ln Z_α for integer α >= 1 from the binomial double sum; inner index capped
/// at min(α, k).
LogValue z_alpha_int(const SystemDims& dims, int alpha);

/// ln Z_α for real α > 0 from the re-indexed double sum with 1/Γ² factors.
LogValue z_alpha_real(const SystemDims& dims, double alpha);

/// I_{k,α}(x) = Γ(k+1)² Σ_i C(α,i)² Γ(k+α+x−i+1)/Γ(k−i+1), for x > −1.
LogValue i_k_alpha(int k, int alpha, double x);

/// Page's average entanglement entropy Σ_{k=n+1}^{mn} 1/k − (m−1)/(2n).
double page_von_neumann(const SystemDims& dims);

/// −dZ_α/dα at α = 1 by central difference of z_alpha_real with step h.
/// Throws DomainError unless 1e-7 <= h <= 1e-3.
double von_neumann_from_z_derivative(const SystemDims& dims, double h);

/// Entropy dispatch: α = 0 → ln m, α = 1 → Page, α = ∞ → 0, otherwise
/// ln Z_α/(1 − α) straight from the logarithm.
MomentResult renyi_tilde(const SystemDims& dims, const RenyiOrder& order);

/// Leading large-n form m^{1−α}[1 + α(α−1)(m − 1/m)/(2n)]. Accurate only for
/// n >> m; see asymptotic_is_reliable.
double z_alpha_asymptotic(const SystemDims& dims, double alpha);

bool asymptotic_is_reliable(const SystemDims& dims);

struct AsymptoticEntropy {
    double log_form = 0.0;     // ln m − ln[1 + α(α−1)(m − 1/m)/(2n)]/(α − 1)
    double linear_form = 0.0;  // ln m − α(m − 1/m)/(2n)
};

AsymptoticEntropy renyi_asymptotic(const SystemDims& dims, double alpha);

/// I_α = ln m_user − S̃_α, where S̃_α is evaluated on the canonicalized pair.
double info_alpha(std::int64_t m_user, std::int64_t n_user, const RenyiOrder& order);

/// ln of Γ(mn)/(Γ(m)Γ(n)) α^{−(m−1)(n−1)}, the large-α leading term of Z_α.
LogValue z_inf_leading(const SystemDims& dims, double alpha);

}  // namespace renyi
