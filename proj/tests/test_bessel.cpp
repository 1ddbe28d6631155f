#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bfcwalk/bessel.hpp"
#include "oracles.hpp"

using bfc::bessel_j;
using bfc::bessel_row;
using bfc::truncation_order;

TEST_CASE("bessel_j at zero depth") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    CHECK(bessel_j(-5, 0.0) == 0.0);
}

TEST_CASE("bessel_j pinned against power-series oracle") {
    // Frozen from the series oracle: J_1(2).
    CHECK(std::fabs(bessel_j(1, 2.0) - 0.5767248077568736) < 1e-12);
    CHECK(std::fabs(bessel_j(1, 2.0) - oracle::series_j(1, 2.0)) < 1e-12);
}

TEST_CASE("bessel_j agrees with series oracle for moderate depth") {
    for (double delta : {0.5, 2.0, 4.6, 6.1, 20.0, 30.0}) {
        const int N = truncation_order(delta, 1e-12);
        for (int n = -N; n <= N; ++n)
            CHECK(std::fabs(bessel_j(n, delta) - oracle::series_j(n, delta)) < 1e-12);
    }
}

TEST_CASE("bessel_j agrees with integral oracle for large depth") {
    for (double delta : {50.0, 200.0, 250.0}) {
        const int N = truncation_order(delta, 1e-9);
        for (int n : {0, 1, 7, N / 2, N - 1, N})
            CHECK(std::fabs(bessel_j(n, delta) - oracle::integral_j(n, delta)) < 1e-9);
    }
}

TEST_CASE("bessel_j domain errors") {
    CHECK_THROWS_AS(bessel_j(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, 2e4), std::domain_error);
    CHECK_THROWS_AS(bessel_j(600, 1.0), std::domain_error);  // sanity bound
}

TEST_CASE("bessel_row at zero depth") {
    const auto row = bessel_row(0.0, -2, 2);
    REQUIRE(row.values.size() == 5);
    CHECK(row.values[0] == 0.0);
    CHECK(row.values[1] == 0.0);
    CHECK(row.values[2] == 1.0);
    CHECK(row.values[3] == 0.0);
    CHECK(row.values[4] == 0.0);
}

TEST_CASE("bessel_row consistent with bessel_j and oracle") {
    const auto row = bessel_row(4.6, -10, 10);
    double sq = 0.0;
    for (int n = -10; n <= 10; ++n) {
        CHECK(std::fabs(row.at(n) - bessel_j(n, 4.6)) < 1e-12);
        CHECK(std::fabs(row.at(n) - oracle::series_j(n, 4.6)) < 1e-12);
        sq += row.at(n) * row.at(n);
    }
    CHECK(sq > 0.999);
    CHECK(sq <= 1.0 + 1e-12);
}

TEST_CASE("bessel_row reflection symmetry is exact") {
    const auto row = bessel_row(5.0, -3, 3);
    for (int n = 1; n <= 3; ++n) {
        const double expect = (n % 2 == 1) ? -row.at(n) : row.at(n);
        CHECK(row.at(-n) == expect);  // bitwise
    }
    for (double delta : {0.5, 2.0, 6.1, 200.0}) {
        for (int n = 1; n <= 12; ++n) {
            const double expect =
                (n % 2 == 1) ? -bessel_j(n, delta) : bessel_j(n, delta);
            CHECK(bessel_j(-n, delta) == expect);
        }
    }
}

TEST_CASE("bessel_row invalid range") {
    CHECK_THROWS_AS(bessel_row(1.0, 3, -3), std::domain_error);
}

TEST_CASE("three-term recurrence residual") {
    for (double delta : {1.0, 6.1, 200.0}) {
        const int N = truncation_order(delta, 1e-12);
        const auto row = bessel_row(delta, 0, N);
        for (int n = 1; n < N; ++n) {
            const double resid = std::fabs(row.at(n - 1) + row.at(n + 1) -
                                           (2.0 * n / delta) * row.at(n));
            CHECK(resid < 1e-10 * std::max(1.0, std::fabs(row.at(n))));
        }
    }
}

TEST_CASE("truncation_order trivial and pinned values") {
    CHECK(truncation_order(0.0, 1e-12) == 0);
    // Frozen from the cumulative-mass series oracle.
    CHECK(truncation_order(4.6, 1e-12) == 14);
    CHECK(truncation_order(4.6, 1e-12) == oracle::truncation_order_series(4.6, 1e-12));
    // Frozen: turnover region slightly above delta.
    CHECK(truncation_order(200.0, 1e-9) == 223);
    CHECK(truncation_order(200.0, 1e-9) >= 200);
}

TEST_CASE("truncation_order epsilon validation") {
    CHECK_THROWS_AS(truncation_order(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(truncation_order(1.0, 1.0), std::domain_error);
}

TEST_CASE("squared-sum normalization within the truncation window") {
    for (double delta : {0.5, 1.0, 2.0, 4.6, 6.1, 20.0, 200.0}) {
        const int N = truncation_order(delta, 1e-12);
        const auto row = bessel_row(delta, -N, N);
        double mass = 0.0;
        for (double v : row.values) mass += v * v;
        CHECK(mass >= 1.0 - 1e-12);
        CHECK(mass <= 1.0 + 1e-12);
    }
}
