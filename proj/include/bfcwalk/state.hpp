#pragma once

#include <complex>
#include <string>
#include <vector>

namespace bfc {

enum class PhaseKind { Constant, Linear, Quadratic, Custom };

// Per-mode spectral phase theta_m = theta0 + a*m + b*m^2 (m = 1..d), or an
// explicit list for Custom.
struct SpectralPhaseProfile {
    PhaseKind kind = PhaseKind::Constant;
    double theta0 = 0.0;
    double slope_a = 0.0;
    double curv_b = 0.0;
    std::vector<double> custom_thetas;

    static SpectralPhaseProfile bosonic();             // theta_m = 0
    static SpectralPhaseProfile fermionic();           // theta_m = m*pi
    static SpectralPhaseProfile anyonic();             // theta_m = m*pi/2
    static SpectralPhaseProfile quadratic(double b);   // theta_m = b*m^2
    static SpectralPhaseProfile custom(std::vector<double> thetas);

    std::string describe() const;
};

struct PhaseValue {
    double raw = 0.0;        // accumulated value of the phase rule
    double canonical = 0.0;  // raw reduced to (-pi, pi]
};

// theta_m for 1-based mode index m. Custom profiles require 1 <= m <= d.
PhaseValue eval_phase(const SpectralPhaseProfile& profile, int m);

// d-dimensional two-photon frequency-bin state. amplitudes[m-1] is the
// coefficient of the pair (signal mode +m, idler mode -m); mode 0 is
// unoccupied.
struct BfcState {
    int d = 1;
    std::vector<std::complex<double>> amplitudes;
    double fsr_hz = 25e9;

    double norm_sq() const;
};

// Maximally entangled state: c_m = exp(i*theta_m)/sqrt(d).
BfcState make_maximal_state(int d, const SpectralPhaseProfile& profile);

}  // namespace bfc
