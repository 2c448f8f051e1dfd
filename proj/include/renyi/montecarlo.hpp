#pragma once

// Haar-random bipartite pure states and Monte-Carlo estimators of spectral
// averages of the reduced state. This is the independent check on every
// closed-form moment formula.

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "renyi/hermitian.hpp"

namespace renyi {

/// SplitMix64 generator. One instance per sample, seeded from
/// (seed, sample index), so estimates do not depend on thread scheduling.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

private:
    std::uint64_t state_;
};

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index);

/// Coefficients ψ_ij of |ψ⟩ = Σ ψ_ij |i⟩_A |j⟩_B, unit Frobenius norm.
struct StateMatrix {
    ComplexMatrix coefficients;

    int m() const { return coefficients.rows; }
    int n() const { return coefficients.cols; }
    double norm_squared() const;
};

struct SpectralSample {
    std::vector<double> eigenvalues;  // descending, clamped to [0, 1]
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

/// i.i.d. standard complex Gaussians, normalized. Throws DomainError for
/// m or n < 1.
StateMatrix sample_haar_state(int m, int n, SplitMix64& rng);

/// Spectrum of Tr_B |ψ⟩⟨ψ| via the m × m Gram matrix. Throws NumericError
/// (mentioning `tag`) if an eigenvalue is below −1e-12 or the spectrum does
/// not sum to 1 within 1e-10; otherwise the spectrum is rescaled to unit trace.
SpectralSample reduced_eigenvalues(const StateMatrix& state, std::uint64_t tag = 0);

struct McOptions {
    /// 0 → std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Applied to each state after sampling; used to probe unitary invariance.
    std::function<void(StateMatrix&)> transform;
};

using SpectralFunctional = std::function<double(const SpectralSample&)>;

/// Mean and standard error of `functional` over `samples` independent draws.
/// Throws DomainError when samples < 2.
Estimate mc_estimate(int m, int n, std::int64_t samples, std::uint64_t seed, const SpectralFunctional& functional,
                     const McOptions& options = {});

/// ⟨Σ p_i^α⟩. Throws DomainError for samples < 100 or α <= 0.
Estimate mc_moment_sum(int m, int n, double alpha, std::int64_t samples, std::uint64_t seed,
                       const McOptions& options = {});

/// ⟨ln(Σ p_i^α)/(1 − α)⟩, the true average Rényi entropy. Throws DomainError
/// for samples < 100, α <= 0 or α = 1.
Estimate mc_average_renyi(int m, int n, double alpha, std::int64_t samples, std::uint64_t seed,
                          const McOptions& options = {});

/// ⟨−Σ p_i ln p_i⟩ with 0 ln 0 = 0. Throws DomainError for samples < 100.
Estimate mc_average_von_neumann(int m, int n, std::int64_t samples, std::uint64_t seed,
                                const McOptions& options = {});

}  // namespace renyi
