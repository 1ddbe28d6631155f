#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfcwalk/analysis.hpp"
#include "bfcwalk/bessel.hpp"
#include "bfcwalk/io.hpp"
#include "bfcwalk/state.hpp"
#include "bfcwalk/walk.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "bfcwalk 1.0.0";
constexpr double kResidualLimit = 1e-6;

constexpr int kExitBadConfig = 2;
constexpr int kExitNumerical = 3;

struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int d = 8;
    double delta = 0.0;
    bfc::SpectralPhaseProfile profile;
    std::vector<double> deltas;
    std::vector<int> dims;
    double counts = 0.0;
    std::uint64_t seed = 0;
    double epsilon_trunc = 1e-12;
    std::string out_dir = ".";
    bool emit_pgm = false;
    bool emit_symmetrized = false;
};

std::vector<double> parse_range(const std::string& text) {
    // start:step:end (inclusive) or a comma-separated list
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start, step, end;
        char c1, c2;
        std::istringstream is(text);
        if (!(is >> start >> c1 >> step >> c2 >> end) || c1 != ':' || c2 != ':')
            throw BadConfig("malformed range '" + text + "' (expected start:step:end)");
        if (step <= 0.0) throw BadConfig("range step must be > 0 in '" + text + "'");
        for (double v = start; v <= end + 1e-9 * std::max(1.0, std::fabs(end)); v += step)
            out.push_back(v);
        return out;
    }
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stod(item));
    return out;
}

bfc::SpectralPhaseProfile profile_from_name(const std::string& name, double theta0,
                                            double slope_a, double curv_b,
                                            const std::vector<double>& thetas) {
    if (name == "bosonic") return bfc::SpectralPhaseProfile::bosonic();
    if (name == "fermionic") return bfc::SpectralPhaseProfile::fermionic();
    if (name == "anyonic") return bfc::SpectralPhaseProfile::anyonic();
    bfc::SpectralPhaseProfile p;
    p.theta0 = theta0;
    p.slope_a = slope_a;
    p.curv_b = curv_b;
    if (name == "constant") {
        p.kind = bfc::PhaseKind::Constant;
    } else if (name == "linear") {
        p.kind = bfc::PhaseKind::Linear;
    } else if (name == "quadratic") {
        p.kind = bfc::PhaseKind::Quadratic;
    } else if (name == "custom") {
        p.kind = bfc::PhaseKind::Custom;
        p.custom_thetas = thetas;
        if (thetas.empty()) throw BadConfig("profile: custom kind requires --thetas");
    } else {
        throw BadConfig("profile: unknown name '" + name + "'");
    }
    return p;
}

json config_to_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["d"] = cfg.d;
    j["delta"] = cfg.delta;
    j["profile"] = bfc::io::profile_to_json(cfg.profile);
    j["deltas"] = cfg.deltas;
    j["dims"] = cfg.dims;
    j["counts"] = cfg.counts;
    j["seed"] = cfg.seed;
    j["epsilon_trunc"] = cfg.epsilon_trunc;
    j["out_dir"] = cfg.out_dir;
    j["emit_pgm"] = cfg.emit_pgm;
    j["emit_symmetrized"] = cfg.emit_symmetrized;
    return j;
}

void config_from_json(const json& j, RunConfig& cfg) {
    if (j.contains("command") && j.at("command").get<std::string>() != cfg.command)
        throw BadConfig("command: config file specifies '" +
                        j.at("command").get<std::string>() + "' but subcommand is '" +
                        cfg.command + "'");
    if (j.contains("d")) cfg.d = j.at("d").get<int>();
    if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
    if (j.contains("profile")) cfg.profile = bfc::io::profile_from_json(j.at("profile"));
    if (j.contains("deltas")) cfg.deltas = j.at("deltas").get<std::vector<double>>();
    if (j.contains("dims")) cfg.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("counts")) cfg.counts = j.at("counts").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("epsilon_trunc")) cfg.epsilon_trunc = j.at("epsilon_trunc").get<double>();
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("emit_pgm")) cfg.emit_pgm = j.at("emit_pgm").get<bool>();
    if (j.contains("emit_symmetrized"))
        cfg.emit_symmetrized = j.at("emit_symmetrized").get<bool>();
}

void validate(const RunConfig& cfg) {
    if (cfg.d < 1) throw BadConfig("d: must be >= 1");
    if (!std::isfinite(cfg.delta) || cfg.delta < 0.0 || cfg.delta > 1e4)
        throw BadConfig("delta: must be finite, >= 0 and <= 1e4");
    if (!(cfg.epsilon_trunc > 0.0 && cfg.epsilon_trunc < 1.0))
        throw BadConfig("epsilon_trunc: must be in (0,1)");
    if (cfg.command == "sweep-depth" && cfg.deltas.empty())
        throw BadConfig("deltas: sweep-depth requires a delta list");
    if (cfg.command == "sweep-dimension" && cfg.dims.empty())
        throw BadConfig("dims: sweep-dimension requires a dimension list");
    if (cfg.command == "sample" && !(cfg.counts > 0.0))
        throw BadConfig("counts: sample requires counts > 0");
    if (cfg.profile.kind == bfc::PhaseKind::Custom &&
        static_cast<int>(cfg.profile.custom_thetas.size()) != cfg.d)
        throw BadConfig("profile: custom phase list length must equal d");
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << content;
}

template <typename WriteFn>
void write_artifact(const fs::path& path, WriteFn&& fn) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    fn(os);
}

int run(const RunConfig& cfg) {
    validate(cfg);
    fs::create_directories(cfg.out_dir);
    const fs::path out(cfg.out_dir);

    bfc::ModulatorConfig mod;
    mod.delta = cfg.delta;
    mod.epsilon_trunc = cfg.epsilon_trunc;

    json diagnostics;
    double residual = 0.0;

    if (cfg.command == "single-walk") {
        const auto dist = bfc::single_photon_distribution(mod);
        double total = 0.0;
        for (double p : dist.probs) total += p;
        residual = std::fabs(1.0 - total);
        write_artifact(out / "walk.csv",
                       [&](std::ostream& os) { bfc::io::write_single_photon_csv(os, dist); });
    } else if (cfg.command == "jsi" || cfg.command == "incoherent" ||
               cfg.command == "transfer" || cfg.command == "sample") {
        bfc::JsiMatrix jsi;
        if (cfg.command == "incoherent") {
            jsi = bfc::incoherent_jsi(cfg.d, mod);
        } else {
            const auto state = bfc::make_maximal_state(cfg.d, cfg.profile);
            mod.mod_freq_hz = state.fsr_hz;
            jsi = bfc::biphoton_jsi(state, mod);
            jsi.meta.profile = cfg.profile.describe();
        }
        residual = std::fabs(1.0 - jsi.sum());

        if (cfg.command == "transfer") {
            const auto dist = bfc::transfer_distribution(jsi);
            const auto m = bfc::moments(dist);
            diagnostics["transfer_mean"] = m.mean;
            diagnostics["transfer_sigma"] = m.sigma;
            write_artifact(out / "transfer.csv",
                           [&](std::ostream& os) { bfc::io::write_transfer_csv(os, dist); });
        } else if (cfg.command == "sample") {
            const auto counts = bfc::poisson_sample(jsi, cfg.counts, cfg.seed);
            write_artifact(out / "counts.csv",
                           [&](std::ostream& os) { bfc::io::write_counts_csv(os, counts); });
        } else {
            const std::string stem = cfg.command;  // "jsi" or "incoherent"
            write_artifact(out / (stem + ".csv"),
                           [&](std::ostream& os) { bfc::io::write_jsi_csv(os, jsi); });
            if (cfg.emit_pgm)
                write_artifact(out / (stem + ".pgm"),
                               [&](std::ostream& os) { bfc::io::write_jsi_pgm(os, jsi); });
            if (cfg.emit_symmetrized) {
                const auto disp = bfc::symmetrized_display(jsi);
                write_artifact(out / (stem + "_symmetric.csv"), [&](std::ostream& os) {
                    bfc::io::write_symmetric_csv(os, disp);
                });
            }
            const auto metrics = bfc::confinement_metrics(jsi);
            diagnostics["antidiag_mass"] = metrics.antidiag_mass;
            diagnostics["sigma_u"] = metrics.sigma_u;
            diagnostics["sigma_v"] = metrics.sigma_v;
        }
    } else if (cfg.command == "sweep-depth") {
        const auto table =
            bfc::sweep_depth(cfg.profile, cfg.d, cfg.deltas, cfg.epsilon_trunc);
        write_artifact(out / "sweep.csv",
                       [&](std::ostream& os) { bfc::io::write_sweep_csv(os, table); });
    } else if (cfg.command == "sweep-dimension") {
        const auto table =
            bfc::sweep_dimension(cfg.profile, cfg.delta, cfg.dims, cfg.epsilon_trunc);
        write_artifact(out / "sweep.csv",
                       [&](std::ostream& os) { bfc::io::write_sweep_csv(os, table); });
    } else {
        throw BadConfig("command: unknown command '" + cfg.command + "'");
    }

    diagnostics["normalization_residual"] = residual;

    json manifest = config_to_json(cfg);
    manifest["version"] = kVersion;
    manifest["diagnostics"] = diagnostics;
    write_text_file(out / "manifest.json", manifest.dump(2) + "\n");

    if (residual > kResidualLimit) {
        std::cerr << "error: normalization residual " << residual
                  << " exceeds " << kResidualLimit << "\n";
        return kExitNumerical;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequency-bin quantum walk simulator for entangled photon pairs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string config_path;
    std::string profile_name;
    double theta0 = 0.0, slope_a = 0.0, curv_b = 0.0;
    std::vector<double> thetas;
    std::string deltas_spec, dims_spec;
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run-config file (flags override)");
        sub->add_option("--out-dir", cfg.out_dir, "output directory");
        sub->add_option("--epsilon", cfg.epsilon_trunc, "truncation tolerance");
    };
    auto add_profile = [&](CLI::App* sub) {
        sub->add_option("--profile", profile_name,
                        "bosonic|fermionic|anyonic|constant|linear|quadratic|custom");
        sub->add_option("--theta0", theta0, "constant phase offset (rad)");
        sub->add_option("--slope-a", slope_a, "linear phase slope (rad/mode)");
        sub->add_option("--curv-b", curv_b, "quadratic phase curvature (rad/mode^2)");
        sub->add_option("--thetas", thetas, "explicit per-mode phases (custom kind)");
    };

    auto* sw = app.add_subcommand("single-walk", "single-photon output distribution");
    sw->add_option("--delta", cfg.delta, "modulation depth");
    add_common(sw);

    auto* jsi_cmd = app.add_subcommand("jsi", "biphoton joint spectral intensity");
    jsi_cmd->add_option("--d", cfg.d, "entanglement dimensionality");
    jsi_cmd->add_option("--delta", cfg.delta, "modulation depth");
    jsi_cmd->add_flag("--emit-pgm", cfg.emit_pgm, "write a PGM heatmap");
    jsi_cmd->add_flag("--symmetrized", cfg.emit_symmetrized,
                      "also write the symmetric display matrix");
    add_profile(jsi_cmd);
    add_common(jsi_cmd);

    auto* inc = app.add_subcommand("incoherent", "incoherent-mixture JSI");
    inc->add_option("--d", cfg.d, "entanglement dimensionality");
    inc->add_option("--delta", cfg.delta, "modulation depth");
    inc->add_flag("--emit-pgm", cfg.emit_pgm, "write a PGM heatmap");
    add_common(inc);

    auto* tr = app.add_subcommand("transfer", "energy-transfer distribution");
    tr->add_option("--d", cfg.d, "entanglement dimensionality");
    tr->add_option("--delta", cfg.delta, "modulation depth");
    add_profile(tr);
    add_common(tr);

    auto* sd = app.add_subcommand("sweep-depth", "sigma of energy transfer vs depth");
    sd->add_option("--d", cfg.d, "entanglement dimensionality");
    sd->add_option("--deltas", deltas_spec, "depth list or start:step:end range");
    add_profile(sd);
    add_common(sd);

    auto* sdim = app.add_subcommand("sweep-dimension",
                                    "sigma of energy transfer vs dimensionality");
    sdim->add_option("--delta", cfg.delta, "modulation depth");
    sdim->add_option("--dims", dims_spec, "dimension list or start:step:end range");
    add_profile(sdim);
    add_common(sdim);

    auto* sample = app.add_subcommand("sample", "Poisson-sampled synthetic counts");
    sample->add_option("--d", cfg.d, "entanglement dimensionality");
    sample->add_option("--delta", cfg.delta, "modulation depth");
    sample->add_option("--counts", cfg.counts, "expected total counts");
    sample->add_option("--seed", cfg.seed, "RNG seed");
    add_profile(sample);
    add_common(sample);

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();

    try {
        // Resolution order: defaults, then config file, then explicit flags.
        RunConfig resolved = cfg;
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw BadConfig("config: cannot read '" + config_path + "'");
            json j;
            is >> j;
            RunConfig from_file;
            from_file.command = cfg.command;
            from_file.out_dir = cfg.out_dir;
            config_from_json(j, from_file);
            resolved = from_file;
        }
        auto given = [&](const std::string& flag) {
            const CLI::Option* o = sub->get_option_no_throw(flag);
            return o != nullptr && o->count() > 0;
        };
        if (given("--d")) resolved.d = cfg.d;
        if (given("--delta")) resolved.delta = cfg.delta;
        if (given("--epsilon")) resolved.epsilon_trunc = cfg.epsilon_trunc;
        if (given("--out-dir")) resolved.out_dir = cfg.out_dir;
        if (given("--counts")) resolved.counts = cfg.counts;
        if (given("--seed")) resolved.seed = cfg.seed;
        if (given("--emit-pgm")) resolved.emit_pgm = cfg.emit_pgm;
        if (given("--symmetrized")) resolved.emit_symmetrized = cfg.emit_symmetrized;
        if (given("--profile"))
            resolved.profile =
                profile_from_name(profile_name, theta0, slope_a, curv_b, thetas);
        if (given("--deltas")) resolved.deltas = parse_range(deltas_spec);
        if (given("--dims")) {
            resolved.dims.clear();
            for (double v : parse_range(dims_spec))
                resolved.dims.push_back(static_cast<int>(std::llround(v)));
        }
        return run(resolved);
    } catch (const BadConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
