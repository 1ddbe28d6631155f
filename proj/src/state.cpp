#include "bfcwalk/state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bfc {

using std::numbers::pi;

SpectralPhaseProfile SpectralPhaseProfile::bosonic() {
    return {};
}

SpectralPhaseProfile SpectralPhaseProfile::fermionic() {
    SpectralPhaseProfile p;
    p.kind = PhaseKind::Linear;
    p.slope_a = pi;
    return p;
}

SpectralPhaseProfile SpectralPhaseProfile::anyonic() {
    SpectralPhaseProfile p;
    p.kind = PhaseKind::Linear;
    p.slope_a = pi / 2.0;
    return p;
}

SpectralPhaseProfile SpectralPhaseProfile::quadratic(double b) {
    SpectralPhaseProfile p;
    p.kind = PhaseKind::Quadratic;
    p.curv_b = b;
    return p;
}

SpectralPhaseProfile SpectralPhaseProfile::custom(std::vector<double> thetas) {
    SpectralPhaseProfile p;
    p.kind = PhaseKind::Custom;
    p.custom_thetas = std::move(thetas);
    return p;
}

std::string SpectralPhaseProfile::describe() const {
    std::ostringstream os;
    switch (kind) {
        case PhaseKind::Constant:
            os << "constant(theta0=" << theta0 << ")";
            break;
        case PhaseKind::Linear:
            os << "linear(theta0=" << theta0 << ", a=" << slope_a << ")";
            break;
        case PhaseKind::Quadratic:
            os << "quadratic(theta0=" << theta0 << ", a=" << slope_a
               << ", b=" << curv_b << ")";
            break;
        case PhaseKind::Custom:
            os << "custom(" << custom_thetas.size() << " phases)";
            break;
    }
    return os.str();
}

PhaseValue eval_phase(const SpectralPhaseProfile& profile, int m) {
    double raw = 0.0;
    if (profile.kind == PhaseKind::Custom) {
        if (m < 1 || m > static_cast<int>(profile.custom_thetas.size()))
            throw std::domain_error("eval_phase: mode index outside custom phase list");
        raw = profile.custom_thetas[static_cast<std::size_t>(m - 1)];
    } else {
        raw = profile.theta0 + profile.slope_a * m + profile.curv_b * m * m;
    }
    double canon = std::remainder(raw, 2.0 * pi);
    if (canon <= -pi) canon += 2.0 * pi;  // land in (-pi, pi]
    return {raw, canon};
}

double BfcState::norm_sq() const {
    double s = 0.0;
    for (const auto& c : amplitudes) s += std::norm(c);
    return s;
}

BfcState make_maximal_state(int d, const SpectralPhaseProfile& profile) {
    if (d < 1) throw std::domain_error("make_maximal_state: d must be >= 1");
    if (profile.kind == PhaseKind::Custom &&
        static_cast<int>(profile.custom_thetas.size()) != d)
        throw std::domain_error("make_maximal_state: custom phase list length != d");

    BfcState st;
    st.d = d;
    st.amplitudes.resize(static_cast<std::size_t>(d));
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    // States are rays: the global constant theta0 and whole turns of the
    // slope are dropped before any cos/sin, so states that differ only by a
    // global phase produce identical amplitude vectors.
    const double a = std::remainder(profile.slope_a, 2.0 * pi);
    for (int m = 1; m <= d; ++m) {
        double theta;
        if (profile.kind == PhaseKind::Custom)
            theta = profile.custom_thetas[static_cast<std::size_t>(m - 1)];
        else
            theta = a * m + profile.curv_b * m * m;
        st.amplitudes[static_cast<std::size_t>(m - 1)] =
            std::polar(inv_sqrt_d, theta);
    }
    return st;
}

}  // namespace bfc
