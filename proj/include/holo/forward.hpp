#pragma once

#include <cstdint>
#include <vector>

#include "holo/optics.hpp"

namespace holo {

// Planar opaque-disk scatterer. The processing chain never uses phase or
// Mie detail, so a disk transmittance mask reproduces the fringe geometry
// that drives detection.
struct Particle {
    double x = 0.0;        // m, lateral, within the sensor footprint
    double y = 0.0;        // m
    double z = 0.0;        // m, depth within [0, gap_depth]
    double diameter = 0.0; // m
    double opacity = 1.0;  // (0, 1], 1 = fully opaque
};

struct ParticleField {
    std::vector<Particle> particles;
    OpticalConfig config;
    double shadow_density = 0.0;     // n_x * L * d^2 aggregate for this field
    bool beyond_shadow_limit = false;

    void validate() const;
};

// Non-dimensional shadow density s_d = n_x * L * d^2. Holographic data is
// trusted while s_d stays below kShadowDensityLimit.
double shadow_density(double number_density, double path_length, double diameter);

inline constexpr double kShadowDensityLimit = 0.1;

struct DiameterDist {
    enum class Kind { Mono, Uniform };
    Kind kind = Kind::Mono;
    double mono = 0.0;
    double min = 0.0;
    double max = 0.0;

    static DiameterDist monodisperse(double d) { return {Kind::Mono, d, d, d}; }
    static DiameterDist uniform(double lo, double hi) { return {Kind::Uniform, 0.0, lo, hi}; }
};

// Uniform i.i.d. particle positions over the imaging volume, deterministic
// for a fixed seed. Sub-pixel diameters are rejected and redrawn. If the
// resulting shadow density exceeds the trusted limit the field is flagged
// (never fatal; dense fields are needed for robustness tests).
ParticleField generate_particle_field(int count, const DiameterDist& dist,
                                      const OpticalConfig& config, std::uint64_t seed);

// Synthesizes the recorded interference pattern: a unit plane wave enters at
// the far window, is masked by each particle plane in depth order, and the
// resulting field is propagated to the sensor where intensity is recorded.
// Additive zero-mean Gaussian noise of the given std is applied to the
// intensity and clamped at 0.
Hologram synthesize_hologram(const ParticleField& field, double noise_std, std::uint64_t seed);

}  // namespace holo
