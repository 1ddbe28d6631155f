#include "bfcwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "bfcwalk/bessel.hpp"

namespace bfc {

namespace {

void check_config(const ModulatorConfig& config) {
    if (!std::isfinite(config.delta) || config.delta < 0.0 || config.delta > 1e4)
        throw std::invalid_argument("modulator: delta must be finite, >= 0 and <= 1e4");
    if (!(config.epsilon_trunc > 0.0 && config.epsilon_trunc < 1.0))
        throw std::invalid_argument("modulator: epsilon_trunc must be in (0,1)");
}

}  // namespace

double JsiMatrix::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double JsiMatrix::max_value() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

SinglePhotonDistribution single_photon_distribution(const ModulatorConfig& config) {
    check_config(config);
    const int N = truncation_order(config.delta, config.epsilon_trunc);
    const BesselRow row = bessel_row(config.delta, -N, N);
    SinglePhotonDistribution dist;
    dist.n_min = -N;
    dist.n_max = N;
    dist.probs.resize(row.values.size());
    for (std::size_t i = 0; i < row.values.size(); ++i)
        dist.probs[i] = row.values[i] * row.values[i];
    return dist;
}

JsiMatrix biphoton_jsi(const BfcState& state, const ModulatorConfig& config) {
    check_config(config);
    if (state.fsr_hz != config.mod_freq_hz)
        throw std::invalid_argument(
            "modulator drive frequency must equal the state mode spacing");

    const int d = state.d;
    const int N = truncation_order(config.delta, config.epsilon_trunc);
    const BesselRow bes = bessel_row(config.delta, -(d + N), d + N);

    JsiMatrix jsi;
    jsi.j_min = 1 - N;
    jsi.j_max = d + N;
    jsi.k_min = -d - N;
    jsi.k_max = N - 1;
    jsi.meta = {d, config.delta, ""};
    jsi.values.assign(static_cast<std::size_t>(jsi.rows()) *
                          static_cast<std::size_t>(jsi.cols()),
                      0.0);

    for (int j = jsi.j_min; j <= jsi.j_max; ++j) {
        for (int k = jsi.k_min; k <= jsi.k_max; ++k) {
            std::complex<double> amp = 0.0;
            for (int m = 1; m <= d; ++m)
                amp += state.amplitudes[static_cast<std::size_t>(m - 1)] *
                       (bes.at(j - m) * bes.at(k + m));
            jsi.at(j, k) = std::norm(amp);
        }
    }
    return jsi;
}

double fermionic_antidiagonal_closed_form(int d, const ModulatorConfig& config, int j) {
    check_config(config);
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const BesselRow bes = bessel_row(config.delta, j - d, j - 1);
    double s = 0.0;
    for (int m = 1; m <= d; ++m) {
        const double v = bes.at(j - m);
        s += v * v;
    }
    return s * s / d;
}

JsiMatrix incoherent_jsi(int d, const ModulatorConfig& config) {
    check_config(config);
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const int N = truncation_order(config.delta, config.epsilon_trunc);
    const BesselRow bes = bessel_row(config.delta, -(d + N), d + N);

    JsiMatrix jsi;
    jsi.j_min = 1 - N;
    jsi.j_max = d + N;
    jsi.k_min = -d - N;
    jsi.k_max = N - 1;
    jsi.meta = {d, config.delta, "incoherent"};
    jsi.values.assign(static_cast<std::size_t>(jsi.rows()) *
                          static_cast<std::size_t>(jsi.cols()),
                      0.0);

    for (int j = jsi.j_min; j <= jsi.j_max; ++j) {
        for (int k = jsi.k_min; k <= jsi.k_max; ++k) {
            double p = 0.0;
            for (int m = 1; m <= d; ++m) {
                const double a = bes.at(j - m);
                const double b = bes.at(k + m);
                p += a * a * b * b;
            }
            jsi.at(j, k) = p / d;
        }
    }
    return jsi;
}

SymmetricJsi symmetrized_display(const JsiMatrix& jsi) {
    const int hull = std::max({std::abs(jsi.j_min), std::abs(jsi.j_max),
                               std::abs(jsi.k_min), std::abs(jsi.k_max)});
    SymmetricJsi disp;
    disp.axis_min = -hull;
    disp.axis_max = hull;
    disp.values.assign(static_cast<std::size_t>(disp.size()) *
                           static_cast<std::size_t>(disp.size()),
                       0.0);
    auto in_window = [&](int j, int k) {
        return j >= jsi.j_min && j <= jsi.j_max && k >= jsi.k_min && k <= jsi.k_max;
    };
    for (int a = -hull; a <= hull; ++a) {
        for (int b = -hull; b <= hull; ++b) {
            double v = 0.0;
            if (in_window(a, b)) v += jsi.at(a, b);
            if (in_window(b, a)) v += jsi.at(b, a);
            disp.values[static_cast<std::size_t>(a + hull) *
                            static_cast<std::size_t>(disp.size()) +
                        static_cast<std::size_t>(b + hull)] = v;
        }
    }
    return disp;
}

}  // namespace bfc
