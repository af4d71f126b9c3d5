// CSV and JSON encodings of the library's outputs, and the simulator's
// JSON config reader.
#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hmono/beamsim.hpp"
#include "hmono/manifold.hpp"
#include "hmono/monopole.hpp"
#include "hmono/stark.hpp"

namespace hmono::io {

inline constexpr const char* kVersion = "0.1.0";

/// Ordered "# key: value" lines written above every CSV header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// Constants echoed into every output.
Metadata constants_metadata(const UnitSystem& units);

std::string charges_csv(std::span<const ChargeRecord> records, const Metadata& meta);
std::string stark_map_csv(std::span<const StarkMapRow> rows, const Metadata& meta);
std::string trajectories_csv(std::span<const beam::Trajectory> trajectories, const Metadata& meta);
std::string detector_csv(std::span<const beam::DetectorRecord> records, const Metadata& meta);
std::string flux_csv(std::span<const beam::FluxTrace> traces, const Metadata& meta);
nlohmann::ordered_json summary_json(const beam::SimResult& result, const beam::SimConfig& config,
                                    const Metadata& meta);

/// Generators, labels and the spherical transform; matrices as row-major
/// arrays of [re, im] pairs.
nlohmann::ordered_json operators_json(const So4Generators& gen);
nlohmann::ordered_json matrix_json(const ComplexMatrix& m);

/// Parses a simulator config. Keys mirror SimConfig; "units": "si" switches
/// inputs to V/m, m, m/s, kg. Unknown keys and type errors raise InputError
/// naming the field. default_units applies when the file has no "units" key.
beam::SimConfig parse_sim_config(const nlohmann::json& j, const std::string& default_units = "cgs");
beam::SimConfig load_sim_config(const std::filesystem::path& path, const std::string& default_units = "cgs");

/// Writes text to path, throwing std::runtime_error on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hmono::io
