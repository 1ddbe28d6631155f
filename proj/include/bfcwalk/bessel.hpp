#pragma once

#include <vector>

namespace bfc {

// Row of integer-order Bessel functions J_n(delta) for n in [n_min, n_max].
struct BesselRow {
    double delta = 0.0;
    int n_min = 0;
    int n_max = 0;
    std::vector<double> values;  // values[i] = J_{n_min + i}(delta)

    double at(int n) const { return values[static_cast<std::size_t>(n - n_min)]; }
};

// J_n(delta) for integer n. Negative orders evaluate by reflection,
// J_{-n} = (-1)^n J_n. Throws std::domain_error for non-finite or
// negative delta, delta > 1e4, or |n| > 10*(delta + 50).
double bessel_j(int n, double delta);

// Batched evaluation over [n_min, n_max] in one backward-recurrence pass.
BesselRow bessel_row(double delta, int n_min, int n_max);

// Smallest N with sum_{|n|<=N} J_n(delta)^2 >= 1 - epsilon, clamped to
// N >= ceil(delta).
int truncation_order(double delta, double epsilon);

}  // namespace bfc
