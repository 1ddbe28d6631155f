#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "bfcwalk/analysis.hpp"
#include "bfcwalk/state.hpp"
#include "bfcwalk/walk.hpp"

namespace bfc::io {

// All writers emit UTF-8, LF line endings, scientific notation with 12
// significant digits.

std::string format_value(double v);

// Header row of k indices, first column of j indices.
void write_jsi_csv(std::ostream& os, const JsiMatrix& jsi);
void write_symmetric_csv(std::ostream& os, const SymmetricJsi& disp);
void write_single_photon_csv(std::ostream& os, const SinglePhotonDistribution& dist);
void write_transfer_csv(std::ostream& os, const TransferDistribution& dist);
void write_sweep_csv(std::ostream& os, const SweepTable& table);
void write_counts_csv(std::ostream& os, const CountMatrix& counts);

// 8-bit binary PGM, linear scaling with the max entry mapped to 255.
void write_jsi_pgm(std::ostream& os, const JsiMatrix& jsi);
void write_symmetric_pgm(std::ostream& os, const SymmetricJsi& disp);

nlohmann::json profile_to_json(const SpectralPhaseProfile& profile);
SpectralPhaseProfile profile_from_json(const nlohmann::json& j);

// Complex amplitudes serialize as [re, im] pairs.
nlohmann::json state_to_json(const BfcState& state);
BfcState state_from_json(const nlohmann::json& j);

}  // namespace bfc::io
