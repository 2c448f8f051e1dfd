#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "renyi/errors.hpp"
#include "renyi/exact_small.hpp"
#include "renyi/moments.hpp"
#include "renyi/montecarlo.hpp"
#include "renyi/specfun.hpp"

using namespace renyi;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

double f_nested(int a, int b) {
    return oracle::nested_exp_sinh(
        [=](double x, double y) { return std::pow(x, a) * std::pow(y, b) * std::log(x * x + y * y) * std::exp(-x - y); });
}

}  // namespace

TEST_CASE("double_int_closed examples") {
    CHECK(std::abs(double_int_closed(1.0, 1.0) - (kPi / 2 - 2 * kEulerGamma)) <= 1e-15);
    CHECK(std::abs(double_int_closed(1.0, 1.0) - 0.41637) < 1e-5);
    for (auto [p, q] : {std::pair{0.5, 2.0}, std::pair{1.0, 3.0}, std::pair{7.0, 0.1}})
        CHECK(double_int_closed(p, q) == double_int_closed(q, p));
    const double want22 = -0.5 * (kEulerGamma + (16.0 * std::log(2.0) - 4.0 * kPi) / 16.0);
    CHECK(std::abs(double_int_closed(2.0, 2.0) - want22) <= 1e-15);
    CHECK_THROWS_AS(double_int_closed(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(double_int_closed(1.0, -2.0), DomainError);
}

TEST_CASE("double_int_closed agrees with 2-D quadrature") {
    for (auto [p, q] : {std::pair{2.0, 2.0}, std::pair{1.0, 3.0}, std::pair{0.7, 1.6}}) {
        const double num =
            oracle::nested_exp_sinh([=](double x, double y) { return std::log(x * x + y * y) * std::exp(-p * x - q * y); });
        CHECK(std::abs(double_int_closed(p, q) - num) <= 1e-8);
    }
}

TEST_CASE("f_mn anchors") {
    CHECK(std::abs(f_mn({2, 3}) - (-24 * kEulerGamma + 21 * kPi - 14)) <= 1e-8);
    CHECK(std::abs(f_mn({3, 2}) - (-24 * kEulerGamma + 21 * kPi - 14)) <= 1e-8);
    CHECK(std::abs(f_mn({0, 0}) - double_int_closed(1.0, 1.0)) <= 1e-10);
}

TEST_CASE("f_mn is symmetric") {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b < a; ++b) CHECK(rel_err(f_mn({a, b}), f_mn({b, a})) <= 1e-10);
}

TEST_CASE("f_mn agrees with 2-D quadrature") {
    for (auto [a, b] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{4, 1}, std::pair{5, 3}, std::pair{8, 6}})
        CHECK(rel_err(f_mn({a, b}), f_nested(a, b)) <= 1e-9);
}

TEST_CASE("f_mn matches derivatives of the closed double integral") {
    const double h = 1e-5;
    const double d_p = (double_int_closed(1.0 + h, 1.0) - double_int_closed(1.0 - h, 1.0)) / (2.0 * h);
    CHECK(std::abs(f_mn({1, 0}) + d_p) <= 1e-6);

    const double k = 1e-4;
    const double mixed = (double_int_closed(1.0 + k, 1.0 + k) - double_int_closed(1.0 + k, 1.0 - k) -
                          double_int_closed(1.0 - k, 1.0 + k) + double_int_closed(1.0 - k, 1.0 - k)) /
                         (4.0 * k * k);
    CHECK(std::abs(f_mn({1, 1}) - mixed) <= 1e-6);
}

TEST_CASE("f_mn reports non-convergence with both estimates") {
    try {
        f_mn({40, 0}, 2);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.coarse_estimate()));
        CHECK(std::isfinite(e.fine_estimate()));
        CHECK(e.coarse_estimate() != e.fine_estimate());
    }
    CHECK_THROWS_AS(f_mn({-1, 2}), DomainError);
    CHECK_THROWS_AS(f_mn({1, 2}, 1), DomainError);
}

TEST_CASE("log moment of the 2 x n eigenvalue density assembles from F") {
    for (int n = 2; n <= 8; ++n) {
        const double direct = oracle::nested_exp_sinh([=](double x, double y) {
            const double d = x - y;
            return d * d * std::pow(x * y, n - 2) * std::log(x * x + y * y) * std::exp(-x - y);
        });
        const double assembled = 2.0 * f_mn({n, n - 2}) - 2.0 * f_mn({n - 1, n - 1});
        CHECK(rel_err(assembled, direct) <= 1e-7);
    }
}

TEST_CASE("2 x n eigenvalue density normalization") {
    for (int n = 2; n <= 10; ++n) {
        const auto rule = gauss_laguerre_rule(12, n - 2);
        double sum = 0.0;
        for (int i = 0; i < rule.order; ++i)
            for (int j = 0; j < rule.order; ++j) {
                const double d = rule.nodes[i] - rule.nodes[j];
                sum += rule.weights[i] * rule.weights[j] * d * d;
            }
        const double want = 2.0 * std::pow(std::tgamma(n), 2) / (n - 1.0);
        CHECK(rel_err(sum, want) <= 1e-9);
    }
}

TEST_CASE("renyi2_exact_2xn at n = 2 from its parts") {
    const double want = 2.0 * digamma(4.0) - (f_mn({2, 0}) - f_mn({1, 1}));
    CHECK(std::abs(renyi2_exact_2xn(2) - want) <= 1e-10);
    CHECK_THROWS_AS(renyi2_exact_2xn(1), DomainError);
}

TEST_CASE("renyi2_exact_2xn matches the F-difference form for moderate n") {
    for (int n = 3; n <= 12; ++n) {
        const double diff = f_mn({n, n - 2}) - f_mn({n - 1, n - 1});
        const double want = 2.0 * digamma(2.0 * n) - (n - 1.0) * diff / std::pow(std::tgamma(n), 2);
        CHECK(std::abs(renyi2_exact_2xn(n) - want) <= 1e-7);
    }
}

TEST_CASE("renyi2 ordering and proximity") {
    double prev_gap = 1.0;
    for (int n = 2; n <= 30; ++n) {
        const double tilde = renyi2_tilde_2xn(n);
        const double exact = renyi2_exact_2xn(n);
        const double page = page_von_neumann(SystemDims(2, n));
        CHECK(tilde <= exact);
        CHECK(exact <= page);
        const double gap = exact - tilde;
        if (n >= 3) CHECK(gap < prev_gap);
        if (n >= 10) CHECK(gap < 0.02);
        prev_gap = gap;
    }
}

TEST_CASE("renyi2_exact_2xn rises towards ln 2") {
    double prev = 0.0;
    for (int n = 2; n <= 60; ++n) {
        const double s = renyi2_exact_2xn(n);
        CHECK(std::isfinite(s));
        CHECK(s > prev);
        CHECK(s < std::log(2.0));
        prev = s;
    }
    // deficit falls off like 1/n
    const double d60 = std::log(2.0) - renyi2_exact_2xn(60);
    const double d120 = std::log(2.0) - renyi2_exact_2xn(120);
    CHECK(d60 < 0.03);
    CHECK(d120 / d60 > 0.45);
    CHECK(d120 / d60 < 0.55);
}

TEST_CASE("renyi2_exact_2xn agrees with sampling") {
    const auto est = mc_average_renyi(2, 3, 2.0, 100000, 4242);
    CHECK(std::abs(est.mean - renyi2_exact_2xn(3)) <= 4.0 * est.std_error);
}

TEST_CASE("renyi2_tilde_2xn examples") {
    CHECK(std::abs(renyi2_tilde_2xn(1)) <= 1e-16);
    CHECK(std::abs(renyi2_tilde_2xn(2) + std::log(0.8)) <= 1e-15);
    CHECK(std::abs(renyi2_tilde_2xn(2) - 0.22314) < 5e-6);
    CHECK(std::abs(renyi2_tilde_2xn(1000000) - std::log(2.0)) < 1e-5);
    CHECK_THROWS_AS(renyi2_tilde_2xn(0), DomainError);
}
