#include "holo/optics.hpp"

#include <cmath>
#include <string>

namespace holo {

std::vector<double> OpticalConfig::uniform_planes(int n, double gap) {
    std::vector<double> z(n);
    for (int k = 0; k < n; ++k) z[k] = (k + 0.5) * gap / n;
    return z;
}

double OpticalConfig::plane_spacing() const {
    if (z_planes.size() < 2) return gap_depth;
    return z_planes[1] - z_planes[0];
}

void OpticalConfig::validate() const {
    if (!(wavelength > 0.0)) throw ConfigError("wavelength must be positive");
    if (!(pixel_pitch > 0.0)) throw ConfigError("pixel_pitch must be positive");
    if (sensor_width < 16 || sensor_height < 16)
        throw ConfigError("sensor dimensions must be at least 16 px");
    if (sensor_width % 2 != 0 || sensor_height % 2 != 0)
        throw ConfigError("sensor dimensions must be even");
    if (!(gap_depth > 0.0)) throw ConfigError("gap_depth must be positive");
    if (z_planes.empty()) throw ConfigError("z_planes must not be empty");
    double prev = -1.0;
    for (double z : z_planes) {
        if (!(z >= 0.0) || z > gap_depth)
            throw ConfigError("z_planes must lie within [0, gap_depth]");
        if (z <= prev) throw ConfigError("z_planes must be strictly increasing");
        prev = z;
    }
}

void Hologram::validate() const {
    if (width <= 0 || height <= 0) throw ShapeError("hologram dimensions must be positive");
    if (intensity.size() != std::size_t(width) * height)
        throw ShapeError("hologram buffer does not match its dimensions");
    for (double v : intensity) {
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("hologram intensity must be finite and non-negative");
    }
}

ComplexField transfer_function(const OpticalConfig& config, double z) {
    config.validate();
    if (!(std::abs(z) <= 1.0))
        throw ConfigError("propagation distance |z| exceeds the 1 m sanity bound");

    const int w = config.sensor_width;
    const int h = config.sensor_height;
    ComplexField tf(w, h);

    const double inv_l2 = 1.0 / (config.wavelength * config.wavelength);
    const double dfx = 1.0 / (w * config.pixel_pitch);
    const double dfy = 1.0 / (h * config.pixel_pitch);
    const double two_pi_z = 2.0 * M_PI * z;

    for (int iy = 0; iy < h; ++iy) {
        const double fy = dfy * detail::signed_freq_index(iy, h);
        const double fy2 = fy * fy;
        Complex* row = tf.values.data() + std::size_t(iy) * w;
        for (int ix = 0; ix < w; ++ix) {
            const double fx = dfx * detail::signed_freq_index(ix, w);
            const double arg = inv_l2 - fx * fx - fy2;
            row[ix] = arg >= 0.0 ? std::polar(1.0, two_pi_z * std::sqrt(arg)) : Complex(0.0, 0.0);
        }
    }
    return tf;
}

ComplexField propagate(const ComplexField& field, double z, const OpticalConfig& config) {
    config.validate();
    if (field.width != config.sensor_width || field.height != config.sensor_height)
        throw ShapeError("field dimensions (" + std::to_string(field.width) + "x" +
                         std::to_string(field.height) + ") do not match the optical config");
    if (!(std::abs(z) <= 1.0))
        throw ConfigError("propagation distance |z| exceeds the 1 m sanity bound");

    const int w = field.width;
    const int h = field.height;
    auto fft = fft_cache<double>(w, h);

    ComplexField spectrum(w, h);
    fft->forward(field.values.data(), spectrum.values.data());

    const double inv_l2 = 1.0 / (config.wavelength * config.wavelength);
    const double dfx = 1.0 / (w * config.pixel_pitch);
    const double dfy = 1.0 / (h * config.pixel_pitch);
    const double two_pi_z = 2.0 * M_PI * z;
    const double norm = 1.0 / double(field.size());

    for (int iy = 0; iy < h; ++iy) {
        const double fy = dfy * detail::signed_freq_index(iy, h);
        const double fy2 = fy * fy;
        Complex* row = spectrum.values.data() + std::size_t(iy) * w;
        for (int ix = 0; ix < w; ++ix) {
            const double fx = dfx * detail::signed_freq_index(ix, w);
            const double arg = inv_l2 - fx * fx - fy2;
            if (arg >= 0.0) {
                row[ix] *= std::polar(norm, two_pi_z * std::sqrt(arg));
            } else {
                row[ix] = 0.0;
            }
        }
    }

    ComplexField out(w, h);
    fft->inverse(spectrum.values.data(), out.values.data());
    return out;
}

}  // namespace holo
