#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bfcwalk/bessel.hpp"
#include "bfcwalk/walk.hpp"
#include "oracles.hpp"

using namespace bfc;
using std::numbers::pi;

namespace {

ModulatorConfig config_for(double delta) {
    ModulatorConfig c;
    c.delta = delta;
    return c;
}

}  // namespace

TEST_CASE("single photon distribution at zero depth") {
    const auto dist = single_photon_distribution(config_for(0.0));
    CHECK(dist.n_min == 0);
    CHECK(dist.n_max == 0);
    CHECK(dist.at(0) == 1.0);
}

TEST_CASE("single photon rabbit ears at delta = 4.6") {
    const auto dist = single_photon_distribution(config_for(4.6));
    // Ballistic bimodality: the peak sits near |n| = delta, well above P_0.
    int peak = 0;
    double peak_p = 0.0;
    for (int n = dist.n_min; n <= dist.n_max; ++n) {
        if (dist.at(n) > peak_p) {
            peak_p = dist.at(n);
            peak = n;
        }
    }
    CHECK(std::abs(peak) >= 3);
    CHECK(std::abs(peak) <= 5);
    CHECK(dist.at(4) > dist.at(0));
    CHECK(dist.at(-4) > dist.at(0));
    for (int n = dist.n_min; n <= dist.n_max; ++n)
        CHECK(std::fabs(dist.at(n) - oracle::series_j(n, 4.6) * oracle::series_j(n, 4.6)) <
              1e-12);
}

TEST_CASE("single photon mirror symmetry") {
    const auto dist = single_photon_distribution(config_for(2.0));
    CHECK(dist.at(1) == dist.at(-1));  // bitwise, from reflected Bessel row
    double total = 0.0;
    for (double p : dist.probs) total += p;
    CHECK(total >= 1.0 - 1e-12);
}

TEST_CASE("jsi at zero depth reproduces the input correlations") {
    const auto state = make_maximal_state(8, SpectralPhaseProfile::bosonic());
    const auto jsi = biphoton_jsi(state, config_for(0.0));
    for (int j = jsi.j_min; j <= jsi.j_max; ++j) {
        for (int k = jsi.k_min; k <= jsi.k_max; ++k) {
            if (j >= 1 && j <= 8 && k == -j)
                CHECK(jsi.at(j, k) == doctest::Approx(0.125).epsilon(1e-15));
            else
                CHECK(jsi.at(j, k) == 0.0);
        }
    }
}

TEST_CASE("d = 1 jsi is a separable product") {
    const auto state = make_maximal_state(1, SpectralPhaseProfile::bosonic());
    const auto cfg = config_for(2.0);
    const auto jsi = biphoton_jsi(state, cfg);
    const auto single = single_photon_distribution(cfg);
    for (int j = jsi.j_min; j <= jsi.j_max; ++j) {
        for (int k = jsi.k_min; k <= jsi.k_max; ++k) {
            const double jn = bessel_j(j - 1, 2.0);
            const double kn = bessel_j(k + 1, 2.0);
            CHECK(jsi.at(j, k) == doctest::Approx(jn * jn * kn * kn).epsilon(1e-12));
            if (j - 1 >= single.n_min && j - 1 <= single.n_max && k + 1 >= single.n_min &&
                k + 1 <= single.n_max)
                CHECK(std::fabs(jsi.at(j, k) - single.at(j - 1) * single.at(k + 1)) <
                      1e-12);
        }
    }
}

TEST_CASE("jsi normalization across regimes") {
    for (int d : {1, 2, 8}) {
        for (double delta : {0.0, 0.5, 4.6, 6.1}) {
            for (auto profile : {SpectralPhaseProfile::bosonic(),
                                 SpectralPhaseProfile::fermionic(),
                                 SpectralPhaseProfile::anyonic(),
                                 SpectralPhaseProfile::quadratic(0.1)}) {
                const auto jsi =
                    biphoton_jsi(make_maximal_state(d, profile), config_for(delta));
                CHECK(std::fabs(jsi.sum() - 1.0) < 1e-9);
                for (double v : jsi.values) CHECK(v >= 0.0);
            }
        }
    }
}

TEST_CASE("jsi matches the brute-force amplitude-tensor oracle") {
    for (auto profile :
         {SpectralPhaseProfile::bosonic(), SpectralPhaseProfile::fermionic(),
          SpectralPhaseProfile::anyonic(), SpectralPhaseProfile::quadratic(0.1)}) {
        const auto state = make_maximal_state(8, profile);
        const double delta = 4.6;
        const auto jsi = biphoton_jsi(state, config_for(delta));
        const auto brute = oracle::brute_jsi(state, delta, 22);
        for (const auto& [cell, p] : brute) {
            const auto [j, k] = cell;
            if (j < jsi.j_min || j > jsi.j_max || k < jsi.k_min || k > jsi.k_max) {
                CHECK(p < 1e-12);
                continue;
            }
            CHECK(std::fabs(jsi.at(j, k) - p) < 1e-12);
        }
    }
}

TEST_CASE("resonance mismatch is a configuration error") {
    auto state = make_maximal_state(4, SpectralPhaseProfile::bosonic());
    state.fsr_hz = 50e9;
    CHECK_THROWS_AS(biphoton_jsi(state, config_for(1.0)), std::invalid_argument);
}

TEST_CASE("fermionic antidiagonal closed form") {
    CHECK(fermionic_antidiagonal_closed_form(8, config_for(0.0), 3) ==
          doctest::Approx(0.125).epsilon(1e-15));
    CHECK(fermionic_antidiagonal_closed_form(8, config_for(0.0), 9) == 0.0);

    for (int d : {2, 4, 8}) {
        const auto state = make_maximal_state(d, SpectralPhaseProfile::fermionic());
        for (double delta : {1.0, 2.0, 4.6, 6.1, 10.0}) {
            const auto cfg = config_for(delta);
            const auto jsi = biphoton_jsi(state, cfg);
            for (int j = std::max(jsi.j_min, -jsi.k_max); j <= std::min(jsi.j_max, -jsi.k_min);
                 ++j) {
                const double closed = fermionic_antidiagonal_closed_form(d, cfg, j);
                CHECK(std::fabs(jsi.at(j, -j) - closed) < 1e-10);
                CHECK(closed >= 0.0);
            }
        }
    }
}

TEST_CASE("incoherent jsi trivial cases") {
    const auto coherent0 =
        biphoton_jsi(make_maximal_state(8, SpectralPhaseProfile::bosonic()), config_for(0.0));
    const auto mixed0 = incoherent_jsi(8, config_for(0.0));
    REQUIRE(mixed0.values.size() == coherent0.values.size());
    for (std::size_t i = 0; i < mixed0.values.size(); ++i)
        CHECK(mixed0.values[i] == doctest::Approx(coherent0.values[i]).epsilon(1e-15));

    const auto coherent1 =
        biphoton_jsi(make_maximal_state(1, SpectralPhaseProfile::bosonic()), config_for(3.0));
    const auto mixed1 = incoherent_jsi(1, config_for(3.0));
    for (std::size_t i = 0; i < mixed1.values.size(); ++i)
        CHECK(std::fabs(mixed1.values[i] - coherent1.values[i]) < 1e-14);
}

TEST_CASE("incoherent jsi equals the average of shifted single-pair walks") {
    const int d = 8;
    const double delta = 4.6;
    const auto mixed = incoherent_jsi(d, config_for(delta));
    // Oracle: the single-pair state |m, -m> is a d = 1 walk with its center
    // translated by m - 1 on the signal axis and -(m - 1) on the idler axis.
    const auto base =
        biphoton_jsi(make_maximal_state(1, SpectralPhaseProfile::bosonic()),
                     config_for(delta));
    for (int j = mixed.j_min; j <= mixed.j_max; ++j) {
        for (int k = mixed.k_min; k <= mixed.k_max; ++k) {
            double avg = 0.0;
            for (int m = 1; m <= d; ++m) {
                const int js = j - (m - 1);
                const int ks = k + (m - 1);
                if (js >= base.j_min && js <= base.j_max && ks >= base.k_min &&
                    ks <= base.k_max)
                    avg += base.at(js, ks);
            }
            avg /= d;
            CHECK(std::fabs(mixed.at(j, k) - avg) < 1e-12);
        }
    }
    CHECK(std::fabs(mixed.sum() - 1.0) < 1e-9);
}

TEST_CASE("incoherent mixture is smeared relative to the coherent walk") {
    const double delta = 4.6;
    const auto coherent =
        biphoton_jsi(make_maximal_state(8, SpectralPhaseProfile::bosonic()),
                     config_for(delta));
    const auto mixed = incoherent_jsi(8, config_for(delta));
    CHECK(mixed.max_value() < coherent.max_value());
}

TEST_CASE("symmetrized display") {
    const auto jsi =
        biphoton_jsi(make_maximal_state(8, SpectralPhaseProfile::bosonic()), config_for(0.0));
    const auto disp = symmetrized_display(jsi);
    for (int a = disp.axis_min; a <= disp.axis_max; ++a)
        for (int b = disp.axis_min; b <= disp.axis_max; ++b)
            CHECK(disp.at(a, b) == disp.at(b, a));  // bitwise
    double total = 0.0;
    for (double v : disp.values) total += v;
    CHECK(std::fabs(total - 2.0) < 1e-9);

    const auto tiny =
        biphoton_jsi(make_maximal_state(1, SpectralPhaseProfile::bosonic()), config_for(0.0));
    const auto tiny_disp = symmetrized_display(tiny);
    int nonzero = 0;
    for (double v : tiny_disp.values)
        if (v != 0.0) ++nonzero;
    CHECK(nonzero == 2);
    CHECK(tiny_disp.at(1, -1) == 1.0);
    CHECK(tiny_disp.at(-1, 1) == 1.0);
}

TEST_CASE("global phase invariance of the jsi is bitwise") {
    SpectralPhaseProfile p = SpectralPhaseProfile::anyonic();
    SpectralPhaseProfile q = p;
    q.theta0 = 1.7;
    const auto a = biphoton_jsi(make_maximal_state(8, p), config_for(4.6));
    const auto b = biphoton_jsi(make_maximal_state(8, q), config_for(4.6));
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("linear phase of a full turn is bitwise identical to no phase") {
    SpectralPhaseProfile flat;
    SpectralPhaseProfile turn;
    turn.kind = PhaseKind::Linear;
    turn.slope_a = 2.0 * pi;
    const auto a = biphoton_jsi(make_maximal_state(8, flat), config_for(4.6));
    const auto b = biphoton_jsi(make_maximal_state(8, turn), config_for(4.6));
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == b.values[i]);
}
