#include "bfcwalk/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bfc {

namespace {

constexpr double kDeltaCap = 1e4;

void check_delta(double delta) {
    if (!std::isfinite(delta) || delta < 0.0)
        throw std::domain_error("bessel: delta must be finite and >= 0");
    if (delta > kDeltaCap)
        throw std::domain_error("bessel: delta exceeds cap of 1e4");
}

// J_0..J_nmax for tiny delta, leading-order series per term. Terms beyond
// n = 3 are below 1e-12 absolute when delta < 1e-6.
std::vector<double> row_small_delta(double delta, int n_max) {
    std::vector<double> j(static_cast<std::size_t>(n_max) + 1, 0.0);
    const double h = delta / 2.0;
    j[0] = 1.0 - h * h + h * h * h * h / 4.0;
    if (n_max >= 1) j[1] = h - h * h * h / 2.0;
    if (n_max >= 2) j[2] = h * h / 2.0;
    if (n_max >= 3) j[3] = h * h * h / 6.0;
    return j;
}

// Miller backward recurrence: J_0(delta)..J_nmax(delta), normalized with
// J_0 + 2*sum_k J_{2k} = 1. Stable for all orders at fixed delta.
std::vector<double> row_nonneg(double delta, int n_max) {
    if (delta == 0.0) {
        std::vector<double> j(static_cast<std::size_t>(n_max) + 1, 0.0);
        j[0] = 1.0;
        return j;
    }
    if (delta < 1e-6) return row_small_delta(delta, n_max);

    const int turn = std::max(n_max, static_cast<int>(std::ceil(delta)));
    const int start = turn + 24 + static_cast<int>(std::ceil(10.0 * std::cbrt(turn + 1.0)));

    std::vector<double> j(static_cast<std::size_t>(n_max) + 1, 0.0);
    double fnp1 = 0.0;
    double fn = 1e-30;
    double even_sum = 0.0;  // accumulates J_{2k}, k >= 1, unnormalized
    for (int n = start; n >= 1; --n) {
        const double fnm1 = (2.0 * n / delta) * fn - fnp1;
        fnp1 = fn;
        fn = fnm1;
        if (n - 1 <= n_max) j[static_cast<std::size_t>(n - 1)] = fn;
        if ((n - 1) % 2 == 0 && n - 1 > 0) even_sum += fn;
        if (std::fabs(fn) > 1e250) {
            const double s = 1e-250;
            fn *= s;
            fnp1 *= s;
            even_sum *= s;
            for (auto& v : j) v *= s;
        }
    }
    const double norm = fn + 2.0 * even_sum;  // fn == unnormalized J_0
    for (auto& v : j) v /= norm;
    return j;
}

}  // namespace

double bessel_j(int n, double delta) {
    check_delta(delta);
    const int na = std::abs(n);
    if (na > 10.0 * (delta + 50.0))
        throw std::domain_error("bessel_j: order " + std::to_string(n) +
                                " outside sanity bound for delta");
    const double v = row_nonneg(delta, na)[static_cast<std::size_t>(na)];
    return (n < 0 && (na % 2 == 1)) ? -v : v;
}

BesselRow bessel_row(double delta, int n_min, int n_max) {
    check_delta(delta);
    if (n_min > n_max) throw std::domain_error("bessel_row: n_min > n_max");
    const int na = std::max(std::abs(n_min), std::abs(n_max));
    const auto pos = row_nonneg(delta, na);

    BesselRow row;
    row.delta = delta;
    row.n_min = n_min;
    row.n_max = n_max;
    row.values.resize(static_cast<std::size_t>(n_max - n_min) + 1);
    for (int n = n_min; n <= n_max; ++n) {
        const int k = std::abs(n);
        double v = pos[static_cast<std::size_t>(k)];
        if (n < 0 && k % 2 == 1) v = -v;  // J_{-n} = (-1)^n J_n
        row.values[static_cast<std::size_t>(n - n_min)] = v;
    }
    return row;
}

int truncation_order(double delta, double epsilon) {
    check_delta(delta);
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::domain_error("truncation_order: epsilon must be in (0,1)");
    const int floor_n = static_cast<int>(std::ceil(delta));
    int cap = floor_n + 64 + static_cast<int>(std::ceil(12.0 * std::cbrt(delta + 1.0)));
    for (;;) {
        const auto j = row_nonneg(delta, cap);
        double mass = j[0] * j[0];
        if (mass >= 1.0 - epsilon) return floor_n;
        for (int n = 1; n <= cap; ++n) {
            mass += 2.0 * j[static_cast<std::size_t>(n)] * j[static_cast<std::size_t>(n)];
            if (mass >= 1.0 - epsilon) return std::max(n, floor_n);
        }
        cap *= 2;  // epsilon extremely small; widen and retry
    }
}

}  // namespace bfc
