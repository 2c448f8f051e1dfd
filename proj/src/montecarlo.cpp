#include "renyi/montecarlo.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

constexpr double kNegativeTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
constexpr std::int64_t kMinSamples = 100;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double neumaier_sum(const std::vector<double>& values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double x : values) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    return sum + carry;
}

void check_sampling_args(std::int64_t samples, const char* what) {
    if (samples < kMinSamples) throw DomainError(fmt::format("{}: need at least {} samples, got {}", what, kMinSamples, samples));
}

}  // namespace

SplitMix64::result_type SplitMix64::operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index) {
    return SplitMix64(mix64(mix64(seed) ^ (sample_index * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL)));
}

double StateMatrix::norm_squared() const {
    double sum = 0.0;
    for (const auto& z : coefficients.data) sum += std::norm(z);
    return sum;
}

StateMatrix sample_haar_state(int m, int n, SplitMix64& rng) {
    if (m < 1 || n < 1) throw DomainError(fmt::format("sample_haar_state: need m, n >= 1, got {}, {}", m, n));
    std::normal_distribution<double> normal;
    StateMatrix state{ComplexMatrix(m, n)};
    for (auto& z : state.coefficients.data) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = Complex(re, im);
    }
    const double scale = 1.0 / std::sqrt(state.norm_squared());
    for (auto& z : state.coefficients.data) z *= scale;
    return state;
}

SpectralSample reduced_eigenvalues(const StateMatrix& state, std::uint64_t tag) {
    SpectralSample sample;
    sample.eigenvalues = hermitian_eigenvalues(gram(state.coefficients));
    double trace = 0.0;
    for (double& p : sample.eigenvalues) {
        if (p < -kNegativeTolerance)
            throw NumericError(fmt::format("reduced_eigenvalues: eigenvalue {} below tolerance (sample {})", p, tag));
        p = std::clamp(p, 0.0, 1.0);
        trace += p;
    }
    if (std::abs(trace - 1.0) > kTraceTolerance)
        throw NumericError(fmt::format("reduced_eigenvalues: spectrum sums to {} (sample {})", trace, tag));
    // strip the rounding left by normalization; a single eigenvalue becomes exactly 1
    for (double& p : sample.eigenvalues) p /= trace;
    return sample;
}

Estimate mc_estimate(int m, int n, std::int64_t samples, std::uint64_t seed, const SpectralFunctional& functional,
                     const McOptions& options) {
    if (samples < 2) throw DomainError("mc_estimate: need at least two samples");
    // the smaller factor carries the whole nonzero spectrum
    if (m > n) std::swap(m, n);

    std::vector<double> values(static_cast<std::size_t>(samples));
    const auto run = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s) {
            auto rng = sample_stream(seed, static_cast<std::uint64_t>(s));
            auto state = sample_haar_state(m, n, rng);
            if (options.transform) options.transform(state);
            values[static_cast<std::size_t>(s)] = functional(reduced_eigenvalues(state, static_cast<std::uint64_t>(s)));
        }
    };

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::int64_t>(workers, samples));
    if (workers <= 1) {
        run(0, samples);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        const std::int64_t chunk = (samples + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min(samples, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    run(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    Estimate est;
    est.samples = samples;
    est.seed = seed;
    est.mean = neumaier_sum(values) / static_cast<double>(samples);
    for (double& v : values) v = (v - est.mean) * (v - est.mean);
    const double variance = neumaier_sum(values) / static_cast<double>(samples - 1);
    est.std_error = std::sqrt(variance / static_cast<double>(samples));
    return est;
}

Estimate mc_moment_sum(int m, int n, double alpha, std::int64_t samples, std::uint64_t seed, const McOptions& options) {
    check_sampling_args(samples, "mc_moment_sum");
    if (!(alpha > 0.0)) throw DomainError("mc_moment_sum: alpha must be positive");
    return mc_estimate(
        m, n, samples, seed,
        [alpha](const SpectralSample& s) {
            double z = 0.0;
            for (double p : s.eigenvalues) z += std::pow(p, alpha);
            return z;
        },
        options);
}

Estimate mc_average_renyi(int m, int n, double alpha, std::int64_t samples, std::uint64_t seed,
                          const McOptions& options) {
    check_sampling_args(samples, "mc_average_renyi");
    if (!(alpha > 0.0) || alpha == 1.0) throw DomainError("mc_average_renyi: alpha must be positive and != 1");
    return mc_estimate(
        m, n, samples, seed,
        [alpha](const SpectralSample& s) {
            double z = 0.0;
            for (double p : s.eigenvalues) z += std::pow(p, alpha);
            return std::log(z) / (1.0 - alpha);
        },
        options);
}

Estimate mc_average_von_neumann(int m, int n, std::int64_t samples, std::uint64_t seed, const McOptions& options) {
    check_sampling_args(samples, "mc_average_von_neumann");
    return mc_estimate(
        m, n, samples, seed,
        [](const SpectralSample& s) {
            double h = 0.0;
            for (double p : s.eigenvalues)
                if (p > 0.0) h -= p * std::log(p);
            return h;
        },
        options);
}

}  // namespace renyi
