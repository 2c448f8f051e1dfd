#include "renyi/moments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <cmath>
#include <string>
#include <vector>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

// Above this product the harmonic sum switches from an explicit loop to ψ.
constexpr std::int64_t kHarmonicLoopLimit = 1'000'000;

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

SystemDims::SystemDims(std::int64_t m, std::int64_t n) : m_(m), n_(n), swapped_(false) {
    if (m < 1 || n < 1) throw DomainError(fmt::format("dimensions must be >= 1, got m={} n={}", m, n));
    if (m_ > n_) {
        std::swap(m_, n_);
        swapped_ = true;
    }
}

RenyiOrder RenyiOrder::finite(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw DomainError(fmt::format("Renyi order must be a finite nonnegative number, got {}", alpha));
    const bool integer = alpha >= 1.0 && alpha <= INT_MAX && alpha == std::floor(alpha);
    return RenyiOrder(Kind::finite, alpha, integer);
}

RenyiOrder RenyiOrder::infinite() { return RenyiOrder(Kind::infinite, 0.0, false); }

RenyiOrder RenyiOrder::parse(std::string_view text) {
    const std::string lower = lowercase(text);
    if (lower == "inf" || lower == "infinity" || lower == "∞") return infinite();
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw DomainError(fmt::format("cannot parse Renyi order '{}'", text));
    return finite(value);
}

std::string RenyiOrder::label() const {
    if (is_infinite()) return "inf";
    if (integer_ || value_ == 0.0) return fmt::format("{}", static_cast<long long>(value_));
    return fmt::format("{}", value_);
}

std::string_view to_string(MomentMethod method) {
    switch (method) {
        case MomentMethod::exact_int_sum: return "exact_int_sum";
        case MomentMethod::exact_real_sum: return "exact_real_sum";
        case MomentMethod::page_limit: return "page_limit";
        case MomentMethod::infinite_limit: return "infinite_limit";
        case MomentMethod::asymptotic: return "asymptotic";
    }
    return "unknown";
}

LogValue z_alpha_int(const SystemDims& dims, int alpha) {
    if (alpha < 1) throw DomainError("z_alpha_int: alpha must be an integer >= 1");
    const auto m = dims.m();
    const auto n = dims.n();
    if (m == 1) return LogValue::from_log(0.0);

    // ln k! for k < m
    std::vector<double> log_fact(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) log_fact[k] = std::lgamma(k + 1.0);
    const double log_alpha_fact = std::lgamma(alpha + 1.0);

    std::vector<LogValue> terms;
    const double base = static_cast<double>(n - m + 1);
    for (std::int64_t k = 0; k < m; ++k) {
        // ln Γ(k+n−m+α−i+1)/Γ(k+n−m+1), stepped down in i
        double shift = log_gamma_ratio(k + base, alpha);
        const std::int64_t top = std::min<std::int64_t>(alpha, k);
        for (std::int64_t i = 0; i <= top; ++i) {
            if (i > 0) shift -= std::log(k + base + alpha - i);
            const double log_binom = log_alpha_fact - std::lgamma(i + 1.0) - std::lgamma(alpha - i + 1.0);
            terms.push_back(LogValue::from_log(2.0 * log_binom + shift + log_fact[k] - log_fact[k - i]));
        }
    }
    auto sum = log_sum_accumulate(terms);
    sum.log_magnitude -= log_gamma_ratio(static_cast<double>(dims.product()), alpha);
    return sum;
}

LogValue z_alpha_real(const SystemDims& dims, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError(fmt::format("z_alpha_real: alpha must be positive and finite, got {}", alpha));
    const auto m = dims.m();
    const auto n = dims.n();
    if (m == 1) return LogValue::from_log(0.0);

    std::vector<LogValue> terms;
    terms.reserve(static_cast<std::size_t>(m * (m + 1) / 2));
    for (std::int64_t k = 0; k < m; ++k) {
        const double lead = std::lgamma(k + 1.0);
        // 1/Γ²(k−j+1) vanishes for j > k
        for (std::int64_t j = 0; j <= k; ++j) {
            LogValue term = LogValue::from_log(
                lead + log_gamma_ratio(static_cast<double>(k + n - m + 1), alpha + static_cast<double>(j - k)) -
                std::lgamma(j + 1.0));
            term *= inv_gamma_squared(static_cast<double>(k - j + 1));
            term *= inv_gamma_squared(alpha - static_cast<double>(k - j) + 1.0);
            terms.push_back(term);
        }
    }
    auto sum = log_sum_accumulate(terms);
    if (!sum.is_zero)
        sum.log_magnitude += 2.0 * log_gamma(alpha + 1.0) - log_gamma_ratio(static_cast<double>(dims.product()), alpha);
    return sum;
}

LogValue i_k_alpha(int k, int alpha, double x) {
    if (k < 0 || alpha < 1) throw DomainError("i_k_alpha: need k >= 0 and alpha >= 1");
    if (!(x > -1.0)) throw DomainError("i_k_alpha: need x > -1");
    std::vector<LogValue> terms;
    const int top = std::min(alpha, k);
    for (int i = 0; i <= top; ++i) {
        const double log_binom = log_binomial(alpha, i);
        terms.push_back(LogValue::from_log(2.0 * log_binom + log_gamma(k + alpha + x - i + 1.0) -
                                           log_gamma(k - i + 1.0)));
    }
    auto sum = log_sum_accumulate(terms);
    sum.log_magnitude += 2.0 * log_gamma(k + 1.0);
    return sum;
}

double page_von_neumann(const SystemDims& dims) {
    const auto m = dims.m();
    const auto n = dims.n();
    if (m == 1) return 0.0;
    const double tail = static_cast<double>(m - 1) / (2.0 * static_cast<double>(n));
    const auto mn = dims.product();
    if (mn > kHarmonicLoopLimit) return digamma(mn + 1.0) - digamma(n + 1.0) - tail;

    // smallest terms first
    double sum = 0.0;
    double carry = 0.0;
    for (std::int64_t k = mn; k > n; --k) {
        const double y = 1.0 / static_cast<double>(k) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum - tail;
}

double von_neumann_from_z_derivative(const SystemDims& dims, double h) {
    if (!(h >= 1e-7 && h <= 1e-3)) throw DomainError(fmt::format("derivative step must lie in [1e-7, 1e-3], got {}", h));
    const double up = z_alpha_real(dims, 1.0 + h).value();
    const double down = z_alpha_real(dims, 1.0 - h).value();
    return -(up - down) / (2.0 * h);
}

MomentResult renyi_tilde(const SystemDims& dims, const RenyiOrder& order) {
    const double log_m = std::log(static_cast<double>(dims.m()));
    MomentResult result;
    if (order.is_infinite()) {
        result.log_z = LogValue::zero();
        result.entropy = 0.0;
        result.method = MomentMethod::infinite_limit;
    } else if (order.value() == 0.0) {
        result.log_z = LogValue::from_log(log_m);
        result.entropy = log_m;
        result.method = MomentMethod::exact_real_sum;
    } else if (order.value() == 1.0) {
        result.log_z = LogValue::from_log(0.0);
        result.entropy = page_von_neumann(dims);
        result.method = MomentMethod::page_limit;
    } else {
        const double alpha = order.value();
        if (order.integer_fast_path()) {
            result.log_z = z_alpha_int(dims, order.as_int());
            result.method = MomentMethod::exact_int_sum;
        } else {
            result.log_z = z_alpha_real(dims, alpha);
            result.method = MomentMethod::exact_real_sum;
        }
        if (result.log_z.is_zero) throw NumericError("renyi_tilde: Z_alpha evaluated to zero");
        result.entropy = result.log_z.log_magnitude / (1.0 - alpha);
    }
    result.info = log_m - result.entropy;
    return result;
}

double z_alpha_asymptotic(const SystemDims& dims, double alpha) {
    const double m = static_cast<double>(dims.m());
    const double n = static_cast<double>(dims.n());
    return std::pow(m, 1.0 - alpha) * (1.0 + alpha * (alpha - 1.0) * (m - 1.0 / m) / (2.0 * n));
}

bool asymptotic_is_reliable(const SystemDims& dims) { return dims.n() >= 10 * dims.m(); }

AsymptoticEntropy renyi_asymptotic(const SystemDims& dims, double alpha) {
    const double m = static_cast<double>(dims.m());
    const double spread = (m - 1.0 / m) / (2.0 * static_cast<double>(dims.n()));
    AsymptoticEntropy out;
    out.linear_form = std::log(m) - alpha * spread;
    if (alpha == 1.0)
        out.log_form = std::log(m) - spread;
    else
        out.log_form = std::log(m) - std::log1p(alpha * (alpha - 1.0) * spread) / (alpha - 1.0);
    return out;
}

double info_alpha(std::int64_t m_user, std::int64_t n_user, const RenyiOrder& order) {
    const SystemDims dims(m_user, n_user);
    return std::log(static_cast<double>(m_user)) - renyi_tilde(dims, order).entropy;
}

LogValue z_inf_leading(const SystemDims& dims, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("z_inf_leading: alpha must be positive");
    const double m = static_cast<double>(dims.m());
    const double n = static_cast<double>(dims.n());
    return LogValue::from_log(log_gamma(m * n) - log_gamma(m) - log_gamma(n) -
                              (m - 1.0) * (n - 1.0) * std::log(alpha));
}

}  // namespace renyi
