#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfcwalk/state.hpp"
#include "bfcwalk/walk.hpp"

namespace bfc {

// Probability mass over the net biphoton energy shift u = j + k, in units
// of h*nu (h*nu = 1.656e-23 J at nu = 25 GHz; metadata only).
struct TransferDistribution {
    int u_min = 0, u_max = 0;
    std::vector<double> probs;

    double at(int u) const { return probs[static_cast<std::size_t>(u - u_min)]; }
    double total() const;
};

struct Moments {
    double mean = 0.0;
    double sigma = 0.0;
};

struct ConfinementMetrics {
    double antidiag_mass = 0.0;  // mass on j + k = 0
    double sigma_u = 0.0;        // spread of u = j + k
    double sigma_v = 0.0;        // spread of v = j - k
};

// One row per sweep point. ref_sigma carries the analytic single-photon
// reference delta/sqrt(2) for depth sweeps (empty otherwise).
struct SweepTable {
    std::string axis_label;
    std::vector<double> axis;
    std::vector<double> mean;
    std::vector<double> sigma;
    std::vector<double> ref_sigma;
};

// Exact re-binning of the JSI onto u = j + k.
TransferDistribution transfer_distribution(const JsiMatrix& jsi);

Moments moments(const TransferDistribution& dist);

ConfinementMetrics confinement_metrics(const JsiMatrix& jsi);

// Sigma of the energy-transfer distribution per modulation depth, with the
// single-photon reference column. Points may be evaluated concurrently
// (BFC_WALK_THREADS caps workers, 0 = auto); output order is fixed.
SweepTable sweep_depth(const SpectralPhaseProfile& profile, int d,
                       const std::vector<double>& deltas,
                       double epsilon_trunc = 1e-12);

// Sigma of the energy-transfer distribution per entanglement dimension at
// fixed depth.
SweepTable sweep_dimension(const SpectralPhaseProfile& profile, double delta,
                           const std::vector<int>& dims,
                           double epsilon_trunc = 1e-12);

// Count matrix over the JSI window; each cell is an independent Poisson
// draw with mean total_counts * C_{j,k}. Deterministic per (seed, cell).
struct CountMatrix {
    int j_min = 0, j_max = 0;
    int k_min = 0, k_max = 0;
    std::vector<std::int64_t> counts;  // row-major, same layout as JsiMatrix

    int rows() const { return j_max - j_min + 1; }
    int cols() const { return k_max - k_min + 1; }
    std::int64_t at(int j, int k) const {
        return counts[static_cast<std::size_t>(j - j_min) *
                          static_cast<std::size_t>(cols()) +
                      static_cast<std::size_t>(k - k_min)];
    }
};

CountMatrix poisson_sample(const JsiMatrix& jsi, double total_counts,
                           std::uint64_t seed);

// Worker count for sweep parallelism: BFC_WALK_THREADS if set and > 0,
// otherwise hardware concurrency.
int worker_count();

}  // namespace bfc
