#pragma once

#include <string>
#include <vector>

#include "bfcwalk/state.hpp"

namespace bfc {

// Single-tone phase modulator, drive resonant with the comb spacing.
struct ModulatorConfig {
    double delta = 0.0;
    double epsilon_trunc = 1e-12;
    double mod_freq_hz = 25e9;
};

struct JsiMeta {
    int d = 0;
    double delta = 0.0;
    std::string profile;
};

// Coincidence probabilities C_{j,k} over signal output mode j (rows) and
// idler output mode k (columns).
struct JsiMatrix {
    int j_min = 0, j_max = 0;
    int k_min = 0, k_max = 0;
    std::vector<double> values;  // row-major, (j_max-j_min+1) x (k_max-k_min+1)
    JsiMeta meta;

    int rows() const { return j_max - j_min + 1; }
    int cols() const { return k_max - k_min + 1; }
    double at(int j, int k) const {
        return values[static_cast<std::size_t>(j - j_min) *
                          static_cast<std::size_t>(cols()) +
                      static_cast<std::size_t>(k - k_min)];
    }
    double& at(int j, int k) {
        return values[static_cast<std::size_t>(j - j_min) *
                          static_cast<std::size_t>(cols()) +
                      static_cast<std::size_t>(k - k_min)];
    }
    double sum() const;
    double max_value() const;
};

// Square display matrix over the full symmetric mode axis.
struct SymmetricJsi {
    int axis_min = 0, axis_max = 0;
    std::vector<double> values;  // row-major over [axis_min, axis_max]^2

    int size() const { return axis_max - axis_min + 1; }
    double at(int a, int b) const {
        return values[static_cast<std::size_t>(a - axis_min) *
                          static_cast<std::size_t>(size()) +
                      static_cast<std::size_t>(b - axis_min)];
    }
};

// P_n = J_n(delta)^2 over n in [-N, N], N = truncation_order(delta, eps).
struct SinglePhotonDistribution {
    int n_min = 0, n_max = 0;
    std::vector<double> probs;

    double at(int n) const { return probs[static_cast<std::size_t>(n - n_min)]; }
};

SinglePhotonDistribution single_photon_distribution(const ModulatorConfig& config);

// C_{j,k} = |sum_m c_m J_{j-m}(delta) J_{k+m}(delta)|^2 over the window
// j in [1-N, d+N], k in [-d-N, N-1]. Throws std::invalid_argument when the
// modulator drive is not resonant with the state's mode spacing.
JsiMatrix biphoton_jsi(const BfcState& state, const ModulatorConfig& config);

// Antidiagonal cell (j, -j) for the m*pi phase profile, where relative
// phases cancel: (1/d) * (sum_m J_{j-m}(delta)^2)^2.
double fermionic_antidiagonal_closed_form(int d, const ModulatorConfig& config, int j);

// Statistical mixture of the d single-pair inputs:
// C_{j,k} = (1/d) sum_m J_{j-m}^2 J_{k+m}^2.
JsiMatrix incoherent_jsi(int d, const ModulatorConfig& config);

// D_{a,b} = C_{a,b} + C_{b,a} over the symmetric hull of the window;
// sums to twice the input mass.
SymmetricJsi symmetrized_display(const JsiMatrix& jsi);

}  // namespace bfc
