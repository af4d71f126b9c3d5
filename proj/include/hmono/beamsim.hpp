// Classical simulation of an n = 2 Stark-state beam crossing a uniform
// electric field, assuming each state carries the magnetic charge g the
// operator assigns to it.
//
// Modeling assumption: a magnetic charge moving through an electric field
// feels the dual Lorentz force F = g (B - (v/c) x E), here with B = 0. The
// force is purely rotational, so the integrator rotates the velocity about E
// by the exact gyration angle each step. Gaussian-CGS units throughout.
//
// Geometry: the beam travels along +x from the source plane x = 0. The field
// fills the chamber 0 <= x < chamber_length. The detector plane and the SQUID
// loop (centered on the axis, normal along x) sit at fixed axial positions.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hmono/constants.hpp"

namespace hmono::beam {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double length(const Vec3& a);

struct BeamParticle {
    Vec3 position{};  // cm
    Vec3 velocity{};  // cm/s
    double g = 0.0;   // esu
    double mass = cgs::kHydrogenMass;  // g

    /// Throws InputError unless mass > 0 and |velocity| > 0.
    void validate() const;
};

struct SquidLoop {
    double radius = 1.0;          // cm
    double axial_position = 30.0;  // cm
};

struct SimConfig {
    Vec3 e_field{0.0, 0.0, 0.1};      // statvolt/cm, uniform inside the chamber
    double chamber_length = 10.0;     // cm
    std::optional<double> dt;         // s; chosen automatically when absent
    double beam_speed = 1.0e6;        // cm/s
    double transverse_sigma = 0.01;   // cm
    int particles_per_species = 1000;
    std::vector<double> charge_species{1.0, -1.0, 0.0};  // units of e
    double detector_plane = 20.0;     // cm
    SquidLoop squid;
    double mass = cgs::kHydrogenMass;  // g
    std::uint64_t rng_seed = 12345;
    /// Launch particles in mirrored pairs: id 2k+1 reuses the transverse
    /// offsets of id 2k with opposite sign.
    bool antithetic = true;
    int trajectory_particles = 3;     // traced particles per species
    int trajectory_stride = 50;       // record every k-th step of traced particles
    int threads = 0;                  // 0: hardware concurrency

    /// Throws InputError naming the first offending field.
    void validate() const;
    /// Stops integration once every particle is well past the loop and detector.
    double stop_plane() const;
    /// Distinct species in first-occurrence order.
    std::vector<double> species() const;
};

/// Raised when dt lets the velocity turn by more than 0.1 rad per step.
class StepSizeError : public std::runtime_error {
public:
    StepSizeError(const std::string& what, double suggested_dt)
        : std::runtime_error(what), suggested_dt_(suggested_dt) {}
    double suggested_dt() const { return suggested_dt_; }

private:
    double suggested_dt_;
};

/// -(g/c) v x E, in dyn.
Vec3 dual_lorentz_force(double g, const Vec3& v, const Vec3& e_field);

/// Gyration angular frequency |g| |E| / (m c) in rad/s.
double gyro_frequency(double g, double mass, double e_field_magnitude);

/// One step: velocity rotated about E by the exact gyration angle
/// (tangent-corrected Boris rotation), position advanced by the exact arc.
BeamParticle boris_step(const BeamParticle& p, const Vec3& e_field, double dt);

/// Default step: rotation per step below 1e-3 rad and at least 2000 steps
/// across the chamber.
double default_dt(const SimConfig& config);
/// Resolved dt; throws StepSizeError if the rotation per step exceeds 0.1 rad.
double checked_dt(const SimConfig& config);

struct TrajectorySample {
    double t = 0.0;  // s
    Vec3 position{};  // cm
};

struct Trajectory {
    int id = 0;
    double g_over_e = 0.0;
    std::vector<TrajectorySample> samples;
};

struct DetectorRecord {
    int id = 0;
    double g_over_e = 0.0;
    double y = 0.0;  // cm
    double z = 0.0;  // cm
    double time_of_flight = 0.0;  // s
};

struct FluxSample {
    double t = 0.0;
    double flux = 0.0;  // gauss cm^2
};

struct FluxTrace {
    int id = 0;
    bool crossed = false;           // trajectory crossed the loop plane
    bool through_interior = false;  // ... inside the loop radius
    std::vector<FluxSample> samples;
};

struct SpeciesSummary {
    double g_over_e = 0.0;
    int launched = 0;
    int detected = 0;
    double mean_y = 0.0, mean_z = 0.0;
    double sigma_y = 0.0, sigma_z = 0.0;
    /// Standard error of mean_y.
    double stderr_y() const;
    double stderr_z() const;
};

struct SimResult {
    double dt = 0.0;
    std::vector<Trajectory> trajectories;
    std::vector<DetectorRecord> detector;  // id order
    std::vector<FluxTrace> flux;           // one per traced trajectory
    std::vector<SpeciesSummary> summary;   // species order
};

SimResult simulate_beam(const SimConfig& config);

/// Solid angle subtended by a disk of given radius from a point at axial
/// distance s from its plane and radial offset d from its axis.
double disk_solid_angle(double s, double d, double radius);

/// Flux of the monopole's field through the loop along the trajectory. The
/// branch is continuous in time and adds 4 pi g after a passage through the
/// loop interior.
FluxTrace squid_flux(const Trajectory& trajectory, const SquidLoop& loop, double g_esu);

std::vector<SpeciesSummary> summarize(std::span<const DetectorRecord> records, std::span<const double> species,
                                      int launched_per_species);

}  // namespace hmono::beam
