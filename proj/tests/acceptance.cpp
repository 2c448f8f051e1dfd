// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "renyi/exact_small.hpp"
#include "renyi/moments.hpp"
#include "renyi/montecarlo.hpp"
#include "renyi/specfun.hpp"
#include "renyi/sweep.hpp"

using namespace renyi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds
    std::function<Outcome()> body;
};

double pochhammer(double a, int k) {
    double out = 1.0;
    for (int t = 0; t < k; ++t) out *= a + t;
    return out;
}

double binomial(int n, int k) { return std::exp(log_binomial(n, k)); }

template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i) sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

Outcome ac1() {
    double worst = 0.0;
    for (int n = 2; n <= 100; ++n) {
        const double want = (n + 2.0) / (2.0 * n + 1.0);
        worst = std::max(worst, std::abs(z_alpha_int(SystemDims(2, n), 2).value() - want) / want);
    }
    return {worst <= 1e-12, fmt::format("max rel err {:.2e} over n=2..100 (limit 1e-12)", worst)};
}

Outcome ac2() {
    // every (m, n) with m <= 8 and n <= 16 in either order, alpha = 1..8
    double worst = 0.0;
    int cases = 0;
    for (int alpha = 1; alpha <= 8; ++alpha)
        for (int m = 1; m <= 8; ++m)
            for (int n = 1; n <= 16; ++n) {
                const SystemDims d(m, n);
                const double diff =
                    std::abs(z_alpha_int(d, alpha).log_magnitude - z_alpha_real(d, alpha).log_magnitude);
                worst = std::max(worst, diff);
                ++cases;
            }
    return {worst <= 1e-10, fmt::format("max |d ln Z| {:.2e} over {} cases (limit 1e-10)", worst, cases)};
}

Outcome ac3() {
    double worst = 0.0;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 10; ++n) {
            const SystemDims d(m, n);
            worst = std::max(worst, std::abs(von_neumann_from_z_derivative(d, 1e-4) - page_von_neumann(d)));
        }
    return {worst <= 1e-6, fmt::format("max abs err {:.2e} for m<=5, n<=10, h=1e-4 (limit 1e-6)", worst)};
}

Outcome ac4() {
    const double f23 = f_mn({2, 3});
    const double want23 = -24.0 * kEulerGamma + 21.0 * kPi - 14.0;
    const double f00 = f_mn({0, 0});
    const double want00 = double_int_closed(1.0, 1.0);
    const double e23 = std::abs(f23 - want23);
    const double e00 = std::abs(f00 - want00);
    return {e23 <= 1e-8 && e00 <= 1e-10,
            fmt::format("F(2,3)={:.12f} err {:.2e} (limit 1e-8); F(0,0) err {:.2e} (limit 1e-10)", f23, e23, e00)};
}

Outcome ac5() {
    SweepConfig cfg;
    cfg.product_mn = 291600;
    cfg.alphas = {RenyiOrder::finite(1), RenyiOrder::finite(10), RenyiOrder::finite(100), RenyiOrder::finite(1000),
                  RenyiOrder::infinite()};
    const auto points = page_curve(cfg);
    Outcome out;
    if (points.size() != 525) {
        out.pass = false;
        out.detail = fmt::format("sweep produced {} rows, expected 525; ", points.size());
    }
    const std::vector<std::int64_t> want{243, 90, 40, 27, 2};
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto r = m_star_report(cfg.product_mn, cfg.alphas[i], cfg.threshold);
        if (r.m_star == want[i]) {
            parts.push_back(fmt::format("{}->{}", cfg.alphas[i].label(), r.m_star));
            continue;
        }
        out.pass = false;
        std::string below = r.previous_m ? fmt::format("I(m={})={:.6f}", *r.previous_m, r.previous_info) : "none";
        parts.push_back(fmt::format("{}->{} (expected {}; I(m={})={:.6f}, below: {}, expected-m I={:.6f})",
                                    cfg.alphas[i].label(), r.m_star, want[i], r.m_star, r.info, below,
                                    info_alpha(want[i], cfg.product_mn / want[i], cfg.alphas[i])));
    }
    out.detail += "m_* ";
    for (std::size_t i = 0; i < parts.size(); ++i) out.detail += (i ? ", " : "") + parts[i];
    return out;
}

Outcome ac6() {
    Outcome out;
    double worst_gap = 0.0;
    for (int n = 2; n <= 30; ++n) {
        const double tilde = renyi2_tilde_2xn(n);
        const double exact = renyi2_exact_2xn(n);
        const double page = page_von_neumann(SystemDims(2, n));
        if (!(tilde <= exact && exact <= page)) {
            out.pass = false;
            out.detail += fmt::format("ordering broken at n={} ({:.6f}, {:.6f}, {:.6f}); ", n, tilde, exact, page);
        }
        if (n >= 10) worst_gap = std::max(worst_gap, exact - tilde);
    }
    if (!(worst_gap < 0.02)) out.pass = false;
    out.detail += fmt::format("max |S2-S2~| for n>=10 is {:.4f} (limit 0.02)", worst_gap);

    const auto start = std::chrono::steady_clock::now();
    for (int n : {2, 5}) {
        const auto est = mc_average_renyi(2, n, 2.0, 1000000, 1000 + n);
        const double exact = renyi2_exact_2xn(n);
        const double z = std::abs(est.mean - exact) / est.std_error;
        if (!(z <= 4.0)) out.pass = false;
        out.detail += fmt::format("; n={} MC {:.6f} vs {:.6f} ({:.2f} SE)", n, est.mean, exact, z);
    }
    const double mc_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!(mc_seconds < 60.0)) out.pass = false;
    out.detail += fmt::format("; MC {:.1f} s (limit 60 s)", mc_seconds);
    return out;
}

Outcome ac7() {
    Outcome out;
    std::uint64_t seed = 7000;
    for (auto [m, n, alpha] : {std::tuple{2, 2, 2}, std::tuple{2, 5, 2}, std::tuple{3, 4, 2}, std::tuple{3, 4, 3},
                               std::tuple{4, 4, 4}}) {
        const auto est = mc_moment_sum(m, n, alpha, 100000, seed++);
        const double exact = z_alpha_int(SystemDims(m, n), alpha).value();
        const double z = std::abs(est.mean - exact) / est.std_error;
        if (!(z <= 4.0)) out.pass = false;
        out.detail += fmt::format("{}({},{},{}) {:.2f} SE", out.detail.empty() ? "" : ", ", m, n, alpha, z);
    }
    return out;
}

Outcome ac8() {
    const auto remainder = [](int n) {
        return std::abs(renyi_tilde(SystemDims(2, n), RenyiOrder::finite(2)).entropy -
                        renyi_asymptotic(SystemDims(2, n), 2.0).log_form);
    };
    const double ratio = remainder(200) / remainder(400);
    const SystemDims big(2, 1000);
    const double exact = z_alpha_int(big, 2).value();
    const double rel = std::abs(z_alpha_asymptotic(big, 2.0) - exact) / exact;
    return {ratio >= 3.5 && ratio <= 4.5 && rel <= 1e-5,
            fmt::format("remainder ratio n=200/400 {:.3f} (range [3.5, 4.5]); Z asymptotic rel err {:.2e} at n=1000 "
                        "(limit 1e-5)",
                        ratio, rel)};
}

Outcome ac9() {
    const auto r = renyi_tilde(SystemDims(243, 1200), RenyiOrder::finite(1000));
    const double ln_m = std::log(243.0);
    const double info = info_alpha(243, 1200, RenyiOrder::finite(1000));
    const bool finite = std::isfinite(r.log_z.log_magnitude) && !r.log_z.is_zero && std::isfinite(r.entropy);
    const bool in_range = r.entropy >= 0.0 && r.entropy <= ln_m;
    const double consistency = std::abs(info - (ln_m - r.entropy));
    return {finite && in_range && consistency <= 0.05,
            fmt::format("ln Z={:.4f}, S~={:.6f} in [0, {:.6f}], |I - (ln m - S~)|={:.1e} (limit 0.05)",
                        r.log_z.log_magnitude, r.entropy, ln_m, consistency)};
}

Outcome ac10() {
    Outcome out;
    // orthogonality, relative 1e-9
    double worst_orth = 0.0;
    for (double beta : {0.0, 1.0, 2.5, 5.0}) {
        const auto rule = gauss_laguerre_rule(40, beta);
        for (int k1 = 0; k1 <= 6; ++k1)
            for (int k2 = 0; k2 <= 6; ++k2) {
                const double got =
                    integrate(rule, [&](double q) { return laguerre_p(k1, beta, q) * laguerre_p(k2, beta, q); });
                const double norm = std::exp(log_gamma(k1 + 1.0) + log_gamma(k1 + beta + 1.0));
                const double err = k1 == k2 ? std::abs(got - norm) / norm : std::abs(got) / norm;
                worst_orth = std::max(worst_orth, err);
            }
    }
    // moment identity, relative 1e-9; a zero Pochhammer value is measured against ∫|p|
    double worst_moment = 0.0;
    for (double a : {1.0, 2.0, 3.5}) {
        const auto rule = gauss_laguerre_rule(40, a - 1.0);
        for (double b : {0.0, 2.0, 4.0})
            for (int k = 0; k <= 5; ++k) {
                const double got = integrate(rule, [&](double q) { return laguerre_p(k, b, q); });
                const double want = pochhammer(1.0 - a + b, k) * std::tgamma(a) * ((k % 2) ? -1.0 : 1.0);
                const double scale = integrate(rule, [&](double q) { return std::abs(laguerre_p(k, b, q)); });
                worst_moment = std::max(worst_moment, std::abs(got - want) / std::max(std::abs(want), scale));
            }
    }
    // shift recurrence, relative 1e-10
    double worst_rec = 0.0;
    for (double x : {0.0, 0.5, 2.0})
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; l <= 4; ++l)
                for (double q : {0.1, 1.0, 10.0}) {
                    double rhs = 0.0;
                    double scale = 0.0;
                    for (int i = 0; i <= std::min(l, k); ++i) {
                        const double term = binomial(l, i) * pochhammer(k - i + 1.0, i) * laguerre_p(k - i, x + l, q);
                        rhs += term;
                        scale += std::abs(term);
                    }
                    const double lhs = laguerre_p(k, x, q);
                    worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::max(std::abs(lhs), scale));
                }
    // 2 x n density normalization, relative 1e-9
    double worst_norm = 0.0;
    for (int n = 2; n <= 10; ++n) {
        const auto rule = gauss_laguerre_rule(12, n - 2);
        double sum = 0.0;
        for (int i = 0; i < rule.order; ++i)
            for (int j = 0; j < rule.order; ++j) {
                const double d = rule.nodes[i] - rule.nodes[j];
                sum += rule.weights[i] * rule.weights[j] * d * d;
            }
        const double want = 2.0 / (n - 1.0) * std::exp(2.0 * log_gamma(n));
        worst_norm = std::max(worst_norm, std::abs(sum - want) / want);
    }
    out.pass = worst_orth <= 1e-9 && worst_moment <= 1e-9 && worst_rec <= 1e-10 && worst_norm <= 1e-9;
    out.detail = fmt::format("orthogonality {:.1e} (1e-9), moments {:.1e} (1e-9), recurrence {:.1e} (1e-10), "
                             "normalization {:.1e} (1e-9)",
                             worst_orth, worst_moment, worst_rec, worst_norm);
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "closed-form 2 x n, alpha = 2 moment", 0.1, ac1},
        {2, "integer and real moment formulas agree", 1.0, ac2},
        {3, "derivative at alpha = 1 gives the Page formula", 1.0, ac3},
        {4, "F(m, n) anchors", 1.0, ac4},
        {5, "m_* table for mn = 291600", 5.0, ac5},
        {6, "exact 2 x n Renyi-2 ordering and sampling", 120.0, ac6},
        {7, "sampled moments follow the eigenvalue law", 30.0, ac7},
        {8, "large-n asymptotics", 0.1, ac8},
        {9, "extreme-scale stability", 0.1, ac9},
        {10, "Laguerre identity suite", 2.0, ac10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, fmt::format("threw: {}", e.what())};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!(seconds < c.time_limit)) {
            outcome.pass = false;
            outcome.detail += fmt::format("; runtime over limit");
        }
        if (!outcome.pass) ++failures;
        fmt::print("[{}] AC{} {}: {}; {:.3f} s (limit {} s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title,
                   outcome.detail, seconds, c.time_limit);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
