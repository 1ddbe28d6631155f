#include "bfcwalk/io.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace bfc::io {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

void write_jsi_csv(std::ostream& os, const JsiMatrix& jsi) {
    os << "j\\k";
    for (int k = jsi.k_min; k <= jsi.k_max; ++k) os << "," << k;
    os << "\n";
    for (int j = jsi.j_min; j <= jsi.j_max; ++j) {
        os << j;
        for (int k = jsi.k_min; k <= jsi.k_max; ++k)
            os << "," << format_value(jsi.at(j, k));
        os << "\n";
    }
}

void write_symmetric_csv(std::ostream& os, const SymmetricJsi& disp) {
    os << "a\\b";
    for (int b = disp.axis_min; b <= disp.axis_max; ++b) os << "," << b;
    os << "\n";
    for (int a = disp.axis_min; a <= disp.axis_max; ++a) {
        os << a;
        for (int b = disp.axis_min; b <= disp.axis_max; ++b)
            os << "," << format_value(disp.at(a, b));
        os << "\n";
    }
}

void write_single_photon_csv(std::ostream& os, const SinglePhotonDistribution& dist) {
    os << "n,P\n";
    for (int n = dist.n_min; n <= dist.n_max; ++n)
        os << n << "," << format_value(dist.at(n)) << "\n";
}

void write_transfer_csv(std::ostream& os, const TransferDistribution& dist) {
    os << "u,P\n";
    for (int u = dist.u_min; u <= dist.u_max; ++u)
        os << u << "," << format_value(dist.at(u)) << "\n";
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
    const bool has_ref = !table.ref_sigma.empty();
    os << table.axis_label << ",mean,sigma";
    if (has_ref) os << ",sigma_single_photon";
    os << "\n";
    for (std::size_t i = 0; i < table.axis.size(); ++i) {
        os << format_value(table.axis[i]) << "," << format_value(table.mean[i])
           << "," << format_value(table.sigma[i]);
        if (has_ref) os << "," << format_value(table.ref_sigma[i]);
        os << "\n";
    }
}

void write_counts_csv(std::ostream& os, const CountMatrix& counts) {
    os << "j\\k";
    for (int k = counts.k_min; k <= counts.k_max; ++k) os << "," << k;
    os << "\n";
    for (int j = counts.j_min; j <= counts.j_max; ++j) {
        os << j;
        for (int k = counts.k_min; k <= counts.k_max; ++k)
            os << "," << counts.at(j, k);
        os << "\n";
    }
}

namespace {

void write_pgm(std::ostream& os, const std::vector<double>& values, int width,
               int height) {
    double max_v = 0.0;
    for (double v : values) max_v = std::max(max_v, v);
    os << "P5\n" << width << " " << height << "\n255\n";
    for (double v : values) {
        const int px = max_v > 0.0
                           ? static_cast<int>(std::min(255.0, v / max_v * 255.0 + 0.5))
                           : 0;
        os.put(static_cast<char>(px));
    }
}

}  // namespace

void write_jsi_pgm(std::ostream& os, const JsiMatrix& jsi) {
    write_pgm(os, jsi.values, jsi.cols(), jsi.rows());
}

void write_symmetric_pgm(std::ostream& os, const SymmetricJsi& disp) {
    write_pgm(os, disp.values, disp.size(), disp.size());
}

namespace {

std::string kind_name(PhaseKind kind) {
    switch (kind) {
        case PhaseKind::Constant: return "constant";
        case PhaseKind::Linear: return "linear";
        case PhaseKind::Quadratic: return "quadratic";
        case PhaseKind::Custom: return "custom";
    }
    return "constant";
}

PhaseKind kind_from_name(const std::string& name) {
    if (name == "constant") return PhaseKind::Constant;
    if (name == "linear") return PhaseKind::Linear;
    if (name == "quadratic") return PhaseKind::Quadratic;
    if (name == "custom") return PhaseKind::Custom;
    throw std::invalid_argument("unknown phase profile kind: " + name);
}

}  // namespace

nlohmann::json profile_to_json(const SpectralPhaseProfile& profile) {
    nlohmann::json j;
    j["kind"] = kind_name(profile.kind);
    j["theta0"] = profile.theta0;
    j["slope_a"] = profile.slope_a;
    j["curv_b"] = profile.curv_b;
    if (profile.kind == PhaseKind::Custom) j["custom_thetas"] = profile.custom_thetas;
    return j;
}

SpectralPhaseProfile profile_from_json(const nlohmann::json& j) {
    SpectralPhaseProfile p;
    p.kind = kind_from_name(j.at("kind").get<std::string>());
    p.theta0 = j.value("theta0", 0.0);
    p.slope_a = j.value("slope_a", 0.0);
    p.curv_b = j.value("curv_b", 0.0);
    if (j.contains("custom_thetas"))
        p.custom_thetas = j.at("custom_thetas").get<std::vector<double>>();
    if (p.kind == PhaseKind::Custom && p.custom_thetas.empty())
        throw std::invalid_argument("custom profile requires custom_thetas");
    return p;
}

nlohmann::json state_to_json(const BfcState& state) {
    nlohmann::json j;
    j["d"] = state.d;
    j["fsr_hz"] = state.fsr_hz;
    nlohmann::json amps = nlohmann::json::array();
    for (const auto& c : state.amplitudes)
        amps.push_back(nlohmann::json::array({c.real(), c.imag()}));
    j["amplitudes"] = amps;
    return j;
}

BfcState state_from_json(const nlohmann::json& j) {
    BfcState st;
    st.d = j.at("d").get<int>();
    if (st.d < 1) throw std::invalid_argument("state: d must be >= 1");
    st.fsr_hz = j.value("fsr_hz", 25e9);
    for (const auto& pair : j.at("amplitudes"))
        st.amplitudes.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    if (static_cast<int>(st.amplitudes.size()) != st.d)
        throw std::invalid_argument("state: amplitude count must equal d");
    return st;
}

}  // namespace bfc::io
