#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bifrac/specialfn.hpp"
#include "fixtures/specialfn_oracle.hpp"

#include <cmath>
#include <stdexcept>

using bifrac::bessel_k;
using bifrac::gamma_fn;

TEST_CASE("gamma basics") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.3), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(171.0), std::overflow_error);
}

TEST_CASE("gamma matches the precomputed table") {
    for (const auto& p : bifrac::oracle::kGamma) {
        const double got = gamma_fn(p.x);
        CHECK(std::abs(got - p.value) / p.value <= 1e-12);
    }
}

TEST_CASE("gamma functional equation on [0.1, 10]") {
    for (double x = 0.1; x <= 10.0; x += 0.07) {
        const double lhs = gamma_fn(x + 1.0);
        CHECK(std::abs(lhs - x * gamma_fn(x)) / lhs <= 1e-12);
    }
}

TEST_CASE("bessel K half-integer closed form") {
    for (double x : {0.05, 0.3, 1.0, 2.0, 5.0, 15.0}) {
        const double exact = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
        CHECK(std::abs(bessel_k(0.5, x) - exact) / exact <= 1e-12);
    }
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.4610685044).epsilon(1e-9));
}

TEST_CASE("bessel K matches the precomputed table") {
    double worst = 0.0;
    for (const auto& p : bifrac::oracle::kBesselK) {
        const double got = bessel_k(p.nu, p.x);
        worst = std::max(worst, std::abs(got - p.value) / p.value);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("bessel K derivative recurrence at (0.7, 0.9)") {
    const double nu = 0.7, z = 0.9, eps = 1e-6;
    const double fd = (bessel_k(nu, z + eps) - bessel_k(nu, z - eps)) / (2.0 * eps);
    const double rhs = -bessel_k(nu + 1.0, z) + (nu / z) * bessel_k(nu, z);
    CHECK(std::abs(fd - rhs) <= 1e-6);
}

TEST_CASE("bessel K upward recurrence self-consistency") {
    for (double nu : {0.2, 0.45, 0.7}) {
        for (double x : {0.1, 0.7, 1.9, 3.0, 8.0}) {
            const double lhs = bessel_k(nu + 1.0, x);
            const double rhs = bessel_k(std::abs(nu - 1.0), x) + (2.0 * nu / x) * bessel_k(nu, x);
            CHECK(std::abs(lhs - rhs) / lhs <= 1e-10);
        }
    }
}

TEST_CASE("bessel K decreasing in x, positive") {
    for (double nu : {0.2, 0.45, 0.5, 0.7, 1.5, 2.5}) {
        double prev = bessel_k(nu, 0.01);
        CHECK(prev > 0.0);
        for (double x = 0.05; x <= 20.0; x += 0.13) {
            const double cur = bessel_k(nu, x);
            CHECK(cur > 0.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("bessel K near-integer order handled") {
    const double v1 = bessel_k(1.0, 0.8);
    const double v2 = bessel_k(1.0 + 5e-9, 0.8);
    CHECK(std::abs(v1 - v2) / v1 <= 1e-7);
    CHECK(std::isfinite(bessel_k(2.0, 0.3)));
}

TEST_CASE("bessel K domain errors") {
    CHECK_THROWS_AS(bessel_k(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(3.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(-0.2, 1.0), std::domain_error);
}
