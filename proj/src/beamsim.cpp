#include "hmono/beamsim.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace hmono::beam {

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double length(const Vec3& a) { return std::sqrt(dot(a, a)); }

void BeamParticle::validate() const {
    if (!(mass > 0.0)) throw InputError("particle mass must be > 0");
    if (!(length(velocity) > 0.0)) throw InputError("particle speed must be > 0");
}

void SimConfig::validate() const {
    const auto fail = [](const std::string& field, const std::string& why) {
        throw InputError("config field '" + field + "': " + why);
    };
    for (double c : e_field)
        if (!std::isfinite(c)) fail("E_field", "components must be finite");
    if (!(chamber_length > 0.0)) fail("chamber_length", "must be > 0");
    if (dt && !(*dt > 0.0)) fail("dt", "must be > 0");
    if (!(beam_speed > 0.0)) fail("beam_speed", "must be > 0");
    if (!(transverse_sigma >= 0.0)) fail("transverse_sigma", "must be >= 0");
    if (particles_per_species < 1) fail("particles_per_species", "must be >= 1");
    if (charge_species.empty()) fail("charge_species", "must list at least one charge");
    if (!(detector_plane > 0.0)) fail("detector_plane", "must lie beyond the chamber entrance (> 0)");
    if (!(squid.radius > 0.0)) fail("squid_loop.radius", "must be > 0");
    if (!(squid.axial_position > 0.0)) fail("squid_loop.axial_position", "must be > 0");
    if (!(mass > 0.0)) fail("mass", "must be > 0");
    if (trajectory_particles < 0) fail("trajectory_particles", "must be >= 0");
    if (trajectory_stride < 1) fail("trajectory_stride", "must be >= 1");
    if (threads < 0) fail("threads", "must be >= 0");
}

double SimConfig::stop_plane() const {
    return std::max({detector_plane, squid.axial_position + 10.0 * squid.radius, chamber_length});
}

std::vector<double> SimConfig::species() const {
    std::vector<double> out;
    for (double g : charge_species)
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    return out;
}

Vec3 dual_lorentz_force(double g, const Vec3& v, const Vec3& e_field) {
    const Vec3 vxe = cross(v, e_field);
    const double k = -g / cgs::kSpeedOfLight;
    return {k * vxe[0], k * vxe[1], k * vxe[2]};
}

double gyro_frequency(double g, double mass, double e_field_magnitude) {
    return std::abs(g) * e_field_magnitude / (mass * cgs::kSpeedOfLight);
}

namespace {

// Boris rotation v -> v + 2 (v + v x t) x t / (1 + t^2): turns v by 2 atan|t| about -t.
Vec3 rotate(const Vec3& v, const Vec3& t) {
    const Vec3 vt = cross(v, t);
    const Vec3 vp{v[0] + vt[0], v[1] + vt[1], v[2] + vt[2]};
    const double s = 2.0 / (1.0 + dot(t, t));
    const Vec3 w = cross(vp, t);
    return {v[0] + s * w[0], v[1] + s * w[1], v[2] + s * w[2]};
}

}  // namespace

BeamParticle boris_step(const BeamParticle& p, const Vec3& e_field, double dt) {
    if (!(dt > 0.0)) throw InputError("boris_step requires dt > 0");
    BeamParticle out = p;
    const double e_mag = length(e_field);
    // dv/dt = Omega x v with Omega = g E / (m c)
    const double omega = gyro_frequency(p.g, p.mass, e_mag);
    if (omega == 0.0) {
        for (int i = 0; i < 3; ++i) out.position[i] = p.position[i] + p.velocity[i] * dt;
        return out;
    }

    const double sgn = p.g > 0.0 ? 1.0 : -1.0;
    const Vec3 axis{sgn * e_field[0] / e_mag, sgn * e_field[1] / e_mag, sgn * e_field[2] / e_mag};
    const double angle = omega * dt;
    const auto t_for = [&](double turn) {
        const double k = -std::tan(0.5 * turn);
        return Vec3{k * axis[0], k * axis[1], k * axis[2]};
    };

    out.velocity = rotate(p.velocity, t_for(angle));

    // exact arc: parallel part drifts, perpendicular part sweeps a chord
    const Vec3 half = rotate(p.velocity, t_for(0.5 * angle));
    const double par = dot(p.velocity, axis);
    const double half_angle = 0.5 * angle;
    const double sinc = std::sin(half_angle) / half_angle;
    for (int i = 0; i < 3; ++i) {
        const double v_par = par * axis[i];
        out.position[i] = p.position[i] + dt * (v_par + sinc * (half[i] - v_par));
    }
    return out;
}

double default_dt(const SimConfig& config) {
    double g_max = 0.0;
    for (double g : config.charge_species) g_max = std::max(g_max, std::abs(g));
    const double omega = gyro_frequency(g_max * cgs::kElementaryCharge, config.mass, length(config.e_field));
    double dt = config.chamber_length / (2000.0 * config.beam_speed);
    if (omega > 0.0) dt = std::min(dt, 1e-3 / omega);
    return dt;
}

double checked_dt(const SimConfig& config) {
    if (!config.dt) return default_dt(config);
    const double dt = *config.dt;
    double g_max = 0.0;
    for (double g : config.charge_species) g_max = std::max(g_max, std::abs(g));
    const double omega = gyro_frequency(g_max * cgs::kElementaryCharge, config.mass, length(config.e_field));
    // per-step deflection v dt against 0.1 of the gyroradius v / omega
    if (omega * dt > 0.1) {
        const double suggested = 1e-3 / omega;
        std::ostringstream msg;
        msg << "dt = " << dt << " s turns the velocity by " << omega * dt
            << " rad per step (limit 0.1); suggested dt = " << suggested << " s";
        throw StepSizeError(msg.str(), suggested);
    }
    return dt;
}

namespace {

struct ParticleOutcome {
    std::optional<DetectorRecord> hit;
    std::optional<Trajectory> trajectory;
};

ParticleOutcome run_particle(const SimConfig& config, int id, double g_over_e, bool traced, double dt) {
    const int stream = config.antithetic ? id - id % 2 : id;
    const double mirror = config.antithetic && id % 2 ? -1.0 : 1.0;
    std::seed_seq seq{static_cast<std::uint32_t>(config.rng_seed & 0xffffffffu),
                      static_cast<std::uint32_t>(config.rng_seed >> 32), static_cast<std::uint32_t>(stream)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> spread(0.0, 1.0);

    BeamParticle p;
    const double sy = spread(rng);
    const double sz = spread(rng);
    p.position = {0.0, mirror * config.transverse_sigma * sy, mirror * config.transverse_sigma * sz};
    p.velocity = {config.beam_speed, 0.0, 0.0};
    p.g = g_over_e * cgs::kElementaryCharge;
    p.mass = config.mass;

    const Vec3 no_field{0.0, 0.0, 0.0};
    const double stop = config.stop_plane();
    const auto max_steps = static_cast<long long>(4.0 * stop / (config.beam_speed * dt)) + 1000;

    ParticleOutcome out;
    if (traced) out.trajectory = Trajectory{id, g_over_e, {{0.0, p.position}}};

    double t = 0.0;
    long long step = 0;
    while (p.position[0] < stop && step < max_steps) {
        const bool in_field = p.position[0] >= 0.0 && p.position[0] < config.chamber_length;
        const BeamParticle next = boris_step(p, in_field ? config.e_field : no_field, dt);
        ++step;
        if (!out.hit && p.position[0] < config.detector_plane && next.position[0] >= config.detector_plane) {
            const double f = (config.detector_plane - p.position[0]) / (next.position[0] - p.position[0]);
            out.hit = DetectorRecord{id, g_over_e, p.position[1] + f * (next.position[1] - p.position[1]),
                                     p.position[2] + f * (next.position[2] - p.position[2]), t + f * dt};
        }
        p = next;
        t += dt;
        if (traced && (step % config.trajectory_stride == 0 || p.position[0] >= stop))
            out.trajectory->samples.push_back({t, p.position});
    }
    return out;
}

}  // namespace

SimResult simulate_beam(const SimConfig& config) {
    config.validate();
    SimResult result;
    result.dt = checked_dt(config);

    const auto species = config.species();
    const int per = config.particles_per_species;
    const int total = per * static_cast<int>(species.size());
    std::vector<ParticleOutcome> outcomes(static_cast<std::size_t>(total));

    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    workers = std::clamp(workers, 1u, static_cast<unsigned>(total));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int id = static_cast<int>(w); id < total; id += static_cast<int>(workers)) {
                    const auto s = static_cast<std::size_t>(id / per);
                    const bool traced = id % per < config.trajectory_particles;
                    outcomes[static_cast<std::size_t>(id)] = run_particle(config, id, species[s], traced, result.dt);
                }
            });
        }
    }

    for (auto& o : outcomes) {
        if (o.hit) result.detector.push_back(*o.hit);
        if (o.trajectory) {
            result.flux.push_back(squid_flux(*o.trajectory, config.squid, o.trajectory->g_over_e * cgs::kElementaryCharge));
            result.trajectories.push_back(std::move(*o.trajectory));
        }
    }
    result.summary = summarize(result.detector, species, per);
    return result;
}

double SpeciesSummary::stderr_y() const { return detected > 0 ? sigma_y / std::sqrt(detected) : 0.0; }
double SpeciesSummary::stderr_z() const { return detected > 0 ? sigma_z / std::sqrt(detected) : 0.0; }

std::vector<SpeciesSummary> summarize(std::span<const DetectorRecord> records, std::span<const double> species,
                                      int launched_per_species) {
    std::vector<SpeciesSummary> out;
    for (double g : species) {
        SpeciesSummary s;
        s.g_over_e = g;
        s.launched = launched_per_species;
        double sy = 0.0, sz = 0.0;
        for (const auto& r : records)
            if (r.g_over_e == g) {
                ++s.detected;
                sy += r.y;
                sz += r.z;
            }
        if (s.detected > 0) {
            s.mean_y = sy / s.detected;
            s.mean_z = sz / s.detected;
            double vy = 0.0, vz = 0.0;
            for (const auto& r : records)
                if (r.g_over_e == g) {
                    vy += (r.y - s.mean_y) * (r.y - s.mean_y);
                    vz += (r.z - s.mean_z) * (r.z - s.mean_z);
                }
            if (s.detected > 1) {
                s.sigma_y = std::sqrt(vy / (s.detected - 1));
                s.sigma_z = std::sqrt(vz / (s.detected - 1));
            }
        }
        out.push_back(s);
    }
    return out;
}

double disk_solid_angle(double s, double d, double radius) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr double pi = std::numbers::pi;
    if (!(radius > 0.0)) throw InputError("loop radius must be > 0");
    const double h = std::abs(s);
    d = std::abs(d);
    if (h == 0.0) return d < radius ? 2.0 * pi : (d == radius ? pi : 0.0);
    if (d <= 1e-15 * radius) return 2.0 * pi * (1.0 - h / std::hypot(h, radius));

    // integrate over the azimuth phi of rays leaving the foot point in the disk plane;
    // each ray contributes h / sqrt(h^2 + rho^2) at its entry and exit distances rho
    // both integrands are written without the cancellation in 1 - h / r,
    // which would otherwise stall the adaptive rule far from the loop
    if (d < radius) {
        const auto f = [&](double phi) {
            const double sn = std::sin(phi);
            const double rho = std::sqrt(radius * radius - d * d * sn * sn) - d * std::cos(phi);
            const double r = std::hypot(h, rho);
            return rho * rho / (r * (r + h));
        };
        // symmetric about phi = 0
        return 2.0 * gauss_kronrod<double, 61>::integrate(f, 0.0, pi, 10, 1e-13);
    }
    // foot outside the disk: phi in [-asin(a/d), asin(a/d)], substituted
    // sin(phi) = (a/d) sin(u) to remove the square-root endpoint behaviour
    const double ratio = radius / d;
    const auto f = [&](double u) {
        const double sn = ratio * std::sin(u);
        const double cs = std::sqrt(1.0 - sn * sn);
        const double half_chord = radius * std::cos(u);
        const double jac = ratio * std::cos(u) / cs;
        const double near = std::hypot(h, d * cs - half_chord);
        const double far = std::hypot(h, d * cs + half_chord);
        // h / near - h / far, with far^2 - near^2 = 4 d cs half_chord
        return h * 4.0 * d * cs * half_chord / (near * far * (near + far)) * jac;
    };
    return 2.0 * gauss_kronrod<double, 61>::integrate(f, 0.0, 0.5 * pi, 10, 1e-13);
}

FluxTrace squid_flux(const Trajectory& trajectory, const SquidLoop& loop, double g_esu) {
    constexpr double pi = std::numbers::pi;
    FluxTrace trace;
    trace.id = trajectory.id;
    const auto& samples = trajectory.samples;

    // first plane crossing
    std::size_t cross = samples.size();
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i - 1].position[0] < loop.axial_position && samples[i].position[0] >= loop.axial_position) {
            cross = i;
            break;
        }
    }
    if (cross == samples.size()) return trace;
    trace.crossed = true;
    {
        const auto& a = samples[cross - 1].position;
        const auto& b = samples[cross].position;
        const double f = (loop.axial_position - a[0]) / (b[0] - a[0]);
        const double y = a[1] + f * (b[1] - a[1]);
        const double z = a[2] + f * (b[2] - a[2]);
        trace.through_interior = std::hypot(y, z) < loop.radius;
    }

    trace.samples.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& p = samples[i].position;
        const double s = loop.axial_position - p[0];
        const double omega = disk_solid_angle(s, std::hypot(p[1], p[2]), loop.radius);
        double flux;
        if (i < cross) {
            flux = g_esu * omega;
        } else if (s == 0.0) {
            flux = trace.through_interior ? 2.0 * pi * g_esu : 0.0;
        } else {
            flux = trace.through_interior ? g_esu * (4.0 * pi - omega) : -g_esu * omega;
        }
        trace.samples.push_back({samples[i].t, flux});
    }
    return trace;
}

}  // namespace hmono::beam
