#include "holo/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "holo/rng.hpp"

namespace holo {

double shadow_density(double number_density, double path_length, double diameter) {
    if (number_density < 0.0 || path_length < 0.0 || diameter < 0.0)
        throw DomainError("shadow density inputs must be non-negative");
    return number_density * path_length * diameter * diameter;
}

void ParticleField::validate() const {
    config.validate();
    const double fw = config.field_width();
    const double fh = config.field_height();
    for (const auto& p : particles) {
        if (p.x < 0.0 || p.x >= fw || p.y < 0.0 || p.y >= fh)
            throw DomainError("particle lies outside the sensor footprint");
        if (p.z < 0.0 || p.z > config.gap_depth)
            throw DomainError("particle depth lies outside the sample gap");
        if (p.diameter < config.pixel_pitch)
            throw DomainError("sub-pixel particle diameter");
        if (!(p.opacity > 0.0) || p.opacity > 1.0)
            throw DomainError("particle opacity must be in (0, 1]");
    }
}

namespace {

double field_shadow_density(const std::vector<Particle>& particles, const OpticalConfig& config) {
    // Polydisperse generalization: s_d = L * sum(d_i^2) / V = n_x L <d^2>.
    double sum_d2 = 0.0;
    for (const auto& p : particles) sum_d2 += p.diameter * p.diameter;
    return config.gap_depth * sum_d2 / config.sample_volume_m3();
}

}  // namespace

ParticleField generate_particle_field(int count, const DiameterDist& dist,
                                      const OpticalConfig& config, std::uint64_t seed) {
    config.validate();
    if (count < 0) throw DomainError("particle count must be non-negative");

    const double upper = dist.kind == DiameterDist::Kind::Mono ? dist.mono : dist.max;
    if (upper < config.pixel_pitch)
        throw DomainError("diameter distribution cannot produce a particle of at least one pixel");
    if (dist.kind == DiameterDist::Kind::Uniform && !(dist.max >= dist.min))
        throw DomainError("uniform diameter range is inverted");

    ParticleField field;
    field.config = config;
    field.particles.reserve(count);

    Rng rng = Rng::stream(seed, 0x7064660ULL);
    const double fw = config.field_width();
    const double fh = config.field_height();
    for (int i = 0; i < count; ++i) {
        Particle p;
        p.x = rng.uniform(0.0, fw);
        p.y = rng.uniform(0.0, fh);
        p.z = rng.uniform(0.0, config.gap_depth);
        do {
            p.diameter = dist.kind == DiameterDist::Kind::Mono ? dist.mono
                                                               : rng.uniform(dist.min, dist.max);
        } while (p.diameter < config.pixel_pitch);
        p.opacity = 1.0;
        field.particles.push_back(p);
    }

    field.shadow_density = field_shadow_density(field.particles, config);
    field.beyond_shadow_limit = field.shadow_density > kShadowDensityLimit;
    return field;
}

namespace {

// Multiply the field by an opaque-disk transmittance mask centered on the
// particle. Pixel centers are at (i + 0.5) * pitch.
void apply_particle_mask(ComplexField& field, const Particle& p, const OpticalConfig& config) {
    const double pitch = config.pixel_pitch;
    const double r = 0.5 * p.diameter;
    const double r2 = r * r;
    const double amplitude = 1.0 - p.opacity;

    const int x0 = std::max(0, int(std::floor((p.x - r) / pitch - 0.5)));
    const int x1 = std::min(field.width - 1, int(std::ceil((p.x + r) / pitch - 0.5)));
    const int y0 = std::max(0, int(std::floor((p.y - r) / pitch - 0.5)));
    const int y1 = std::min(field.height - 1, int(std::ceil((p.y + r) / pitch - 0.5)));

    for (int iy = y0; iy <= y1; ++iy) {
        const double dy = (iy + 0.5) * pitch - p.y;
        for (int ix = x0; ix <= x1; ++ix) {
            const double dx = (ix + 0.5) * pitch - p.x;
            if (dx * dx + dy * dy <= r2) field.at(ix, iy) *= amplitude;
        }
    }
}

}  // namespace

Hologram synthesize_hologram(const ParticleField& field, double noise_std, std::uint64_t seed) {
    field.validate();
    const OpticalConfig& config = field.config;
    const int w = config.sensor_width;
    const int h = config.sensor_height;

    // Depth order, farthest from the sensor first; index tiebreak keeps the
    // ordering deterministic for coincident planes.
    std::vector<std::size_t> order(field.particles.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& pa = field.particles[a];
        const auto& pb = field.particles[b];
        if (pa.z != pb.z) return pa.z > pb.z;
        return a < b;
    });

    ComplexField wave(w, h);
    std::fill(wave.values.begin(), wave.values.end(), Complex(1.0, 0.0));

    double z_current = config.gap_depth;
    std::size_t i = 0;
    while (i < order.size()) {
        const double z_plane = field.particles[order[i]].z;
        if (z_current - z_plane > 0.0) wave = propagate(wave, z_current - z_plane, config);
        // All particles sharing this plane are masked before moving on.
        while (i < order.size() && field.particles[order[i]].z == z_plane) {
            apply_particle_mask(wave, field.particles[order[i]], config);
            ++i;
        }
        z_current = z_plane;
    }
    if (z_current > 0.0) wave = propagate(wave, z_current, config);

    Hologram holo(w, h);
    for (std::size_t k = 0; k < holo.size(); ++k) holo.intensity[k] = std::norm(wave.values[k]);

    if (noise_std > 0.0) {
        Rng rng = Rng::stream(seed, 0x6E6F697365ULL);
        for (double& v : holo.intensity) v = std::max(0.0, v + noise_std * rng.normal());
    }
    return holo;
}

}  // namespace holo
