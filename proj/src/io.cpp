#include "hmono/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hmono::io {

using nlohmann::ordered_json;

std::string format_double(double v) {
    if (v == 0.0) return "0";  // folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Metadata constants_metadata(const UnitSystem& units) {
    return {
        {"alpha", format_double(units.alpha)},
        {"hbar_au", format_double(units.hbar)},
        {"e_au", format_double(units.e)},
        {"c_au", format_double(units.c())},
        {"atomic_field_V_per_cm", format_double(convert::kAtomicFieldVPerCm)},
        {"e_esu", format_double(cgs::kElementaryCharge)},
        {"m_H_g", format_double(cgs::kHydrogenMass)},
        {"c_cm_per_s", format_double(cgs::kSpeedOfLight)},
    };
}

namespace {

std::ostringstream begin_csv(const Metadata& meta, const char* header) {
    std::ostringstream out;
    out << "# hmono " << kVersion << "\n";
    for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
    out << header << "\n";
    return out;
}

}  // namespace

std::string charges_csv(std::span<const ChargeRecord> records, const Metadata& meta) {
    auto out = begin_csv(meta, "n,n1,n2,m,spin,g_over_e,ratio_over_alpha");
    for (const auto& r : records) {
        out << r.label.n << ',' << r.label.n1 << ',' << r.label.n2 << ',' << r.label.m << ',' << to_string(r.spin)
            << ',' << format_double(r.g) << ',' << format_double(r.ratio) << '\n';
    }
    return out.str();
}

std::string stark_map_csv(std::span<const StarkMapRow> rows, const Metadata& meta) {
    auto out = begin_csv(meta, "n,n1,n2,m,F_au,shift_hartree");
    for (const auto& r : rows) {
        out << r.n << ',' << r.label.n1 << ',' << r.label.n2 << ',' << r.label.m << ',' << format_double(r.field)
            << ',' << format_double(r.shift) << '\n';
    }
    return out.str();
}

std::string trajectories_csv(std::span<const beam::Trajectory> trajectories, const Metadata& meta) {
    auto out = begin_csv(meta, "id,species,t,x,y,z");
    for (const auto& tr : trajectories)
        for (const auto& s : tr.samples)
            out << tr.id << ',' << format_double(tr.g_over_e) << ',' << format_double(s.t) << ','
                << format_double(s.position[0]) << ',' << format_double(s.position[1]) << ','
                << format_double(s.position[2]) << '\n';
    return out.str();
}

std::string detector_csv(std::span<const beam::DetectorRecord> records, const Metadata& meta) {
    auto out = begin_csv(meta, "id,species,y,z,time_of_flight");
    for (const auto& r : records)
        out << r.id << ',' << format_double(r.g_over_e) << ',' << format_double(r.y) << ',' << format_double(r.z)
            << ',' << format_double(r.time_of_flight) << '\n';
    return out.str();
}

std::string flux_csv(std::span<const beam::FluxTrace> traces, const Metadata& meta) {
    auto out = begin_csv(meta, "id,t,flux");
    for (const auto& tr : traces)
        for (const auto& s : tr.samples) out << tr.id << ',' << format_double(s.t) << ',' << format_double(s.flux) << '\n';
    return out.str();
}

ordered_json summary_json(const beam::SimResult& result, const beam::SimConfig& config, const Metadata& meta) {
    ordered_json j;
    j["version"] = kVersion;
    for (const auto& [k, v] : meta) j["metadata"][k] = v;
    j["dt_s"] = result.dt;
    j["rng_seed"] = config.rng_seed;
    j["particles_per_species"] = config.particles_per_species;
    j["E_field_statvolt_per_cm"] = config.e_field;
    j["chamber_length_cm"] = config.chamber_length;
    j["detector_plane_cm"] = config.detector_plane;
    j["squid_loop"] = {{"radius_cm", config.squid.radius}, {"axial_position_cm", config.squid.axial_position}};
    j["species"] = ordered_json::array();
    for (const auto& s : result.summary) {
        j["species"].push_back({{"g_over_e", s.g_over_e},
                                {"launched", s.launched},
                                {"detected", s.detected},
                                {"mean_y_cm", s.mean_y},
                                {"mean_z_cm", s.mean_z},
                                {"sigma_y_cm", s.sigma_y},
                                {"sigma_z_cm", s.sigma_z},
                                {"stderr_y_cm", s.stderr_y()},
                                {"stderr_z_cm", s.stderr_z()}});
    }
    j["flux_traces"] = ordered_json::array();
    for (const auto& f : result.flux) {
        ordered_json entry{{"id", f.id}, {"crossed", f.crossed}, {"through_interior", f.through_interior}};
        if (!f.samples.empty()) entry["total_jump"] = f.samples.back().flux - f.samples.front().flux;
        j["flux_traces"].push_back(entry);
    }
    return j;
}

ordered_json matrix_json(const ComplexMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json operators_json(const So4Generators& gen) {
    ordered_json j;
    j["n"] = gen.n;
    j["units"] = "hbar";
    j["labels"] = ordered_json::array();
    for (const auto& l : gen.basis.labels) j["labels"].push_back({{"n1", l.n1}, {"n2", l.n2}, {"m", l.m}});
    static constexpr const char* names[] = {"1", "2", "3"};
    for (std::size_t a = 0; a < 3; ++a) {
        j["L" + std::string(names[a])] = matrix_json(gen.L[a]);
        j["A" + std::string(names[a])] = matrix_json(gen.A[a]);
    }
    j["spherical_labels"] = ordered_json::array();
    for (const auto& s : gen.basis.spherical) j["spherical_labels"].push_back({{"l", s.l}, {"m", s.m}});
    j["U_spherical_from_parabolic"] = matrix_json(gen.basis.spherical_from_parabolic);
    return j;
}

namespace {

double number_field(const nlohmann::json& j, const std::string& key, const std::string& prefix = "") {
    const auto& v = j.at(key);
    if (!v.is_number()) throw InputError("config field '" + prefix + key + "': expected a number");
    return v.get<double>();
}

int int_field(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw InputError("config field '" + key + "': expected an integer");
    return v.get<int>();
}

beam::Vec3 vec3_field(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 3)
        throw InputError("config field '" + key + "': expected an array of three numbers");
    beam::Vec3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!v[i].is_number()) throw InputError("config field '" + key + "': expected an array of three numbers");
        out[i] = v[i].get<double>();
    }
    return out;
}

}  // namespace

beam::SimConfig parse_sim_config(const nlohmann::json& j, const std::string& default_units) {
    if (!j.is_object()) throw InputError("config: top level must be a JSON object");
    static const std::set<std::string> known{"units",
                                             "E_field",
                                             "chamber_length",
                                             "dt",
                                             "beam_speed",
                                             "transverse_sigma",
                                             "particles_per_species",
                                             "charge_species",
                                             "detector_plane",
                                             "squid_loop",
                                             "mass",
                                             "rng_seed",
                                             "trajectory_particles",
                                             "trajectory_stride",
                                             "threads",
                                             "antithetic"};
    for (const auto& [key, _] : j.items())
        if (!known.contains(key)) throw InputError("config field '" + key + "': unknown key");

    std::string units = default_units;
    if (j.contains("units")) {
        if (!j["units"].is_string()) throw InputError("config field 'units': expected \"cgs\" or \"si\"");
        units = j["units"].get<std::string>();
    }
    if (units == "au") units = "cgs";  // atomic units do not apply to the beam; treat as native
    if (units != "cgs" && units != "si") throw InputError("config field 'units': expected \"cgs\" or \"si\"");
    const bool si = units == "si";
    const double length = si ? convert::kCmPerM : 1.0;
    const double field = si ? 1.0 / convert::kVoltPerMeterPerStatvoltPerCm : 1.0;
    const double mass = si ? convert::kGramPerKg : 1.0;

    beam::SimConfig c;
    // default species: the n = 2 charge table
    c.charge_species.clear();
    for (const auto& r : charge_table(2)) c.charge_species.push_back(r.g);

    if (j.contains("E_field")) {
        c.e_field = vec3_field(j, "E_field");
        for (auto& x : c.e_field) x *= field;
    }
    if (j.contains("chamber_length")) c.chamber_length = number_field(j, "chamber_length") * length;
    if (j.contains("dt")) c.dt = number_field(j, "dt");
    if (j.contains("beam_speed")) c.beam_speed = number_field(j, "beam_speed") * length;
    if (j.contains("transverse_sigma")) c.transverse_sigma = number_field(j, "transverse_sigma") * length;
    if (j.contains("particles_per_species")) c.particles_per_species = int_field(j, "particles_per_species");
    if (j.contains("charge_species")) {
        const auto& v = j["charge_species"];
        if (!v.is_array()) throw InputError("config field 'charge_species': expected an array of numbers");
        c.charge_species.clear();
        for (const auto& x : v) {
            if (!x.is_number()) throw InputError("config field 'charge_species': expected an array of numbers");
            c.charge_species.push_back(x.get<double>());
        }
    }
    if (j.contains("detector_plane")) c.detector_plane = number_field(j, "detector_plane") * length;
    if (j.contains("squid_loop")) {
        const auto& s = j["squid_loop"];
        if (!s.is_object()) throw InputError("config field 'squid_loop': expected an object");
        for (const auto& [key, _] : s.items())
            if (key != "radius" && key != "axial_position")
                throw InputError("config field 'squid_loop." + key + "': unknown key");
        if (s.contains("radius")) c.squid.radius = number_field(s, "radius", "squid_loop.") * length;
        if (s.contains("axial_position"))
            c.squid.axial_position = number_field(s, "axial_position", "squid_loop.") * length;
    }
    if (j.contains("mass")) c.mass = number_field(j, "mass") * mass;
    if (j.contains("rng_seed")) {
        if (!j["rng_seed"].is_number_unsigned() && !j["rng_seed"].is_number_integer())
            throw InputError("config field 'rng_seed': expected a non-negative integer");
        c.rng_seed = j["rng_seed"].get<std::uint64_t>();
    }
    if (j.contains("trajectory_particles")) c.trajectory_particles = int_field(j, "trajectory_particles");
    if (j.contains("trajectory_stride")) c.trajectory_stride = int_field(j, "trajectory_stride");
    if (j.contains("threads")) c.threads = int_field(j, "threads");
    if (j.contains("antithetic")) {
        if (!j["antithetic"].is_boolean()) throw InputError("config field 'antithetic': expected true or false");
        c.antithetic = j["antithetic"].get<bool>();
    }
    c.validate();
    return c;
}

beam::SimConfig load_sim_config(const std::filesystem::path& path, const std::string& default_units) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config file '" + path.string() + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_sim_config(j, default_units);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace hmono::io
