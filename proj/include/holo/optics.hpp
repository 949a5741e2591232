#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "holo/errors.hpp"
#include "holo/fft.hpp"

namespace holo {

using Complex = std::complex<double>;

// Imaging geometry of the lensless in-line microscope. z is measured from
// the sensor window toward the illumination window; the sample occupies
// [0, gap_depth]. Lateral resolution of the lensless system equals the
// pixel pitch.
struct OpticalConfig {
    double wavelength = 650e-9;    // m
    double pixel_pitch = 1.12e-6;  // m
    int sensor_width = 2048;       // px
    int sensor_height = 2048;      // px
    double gap_depth = 10e-3;      // m, window-to-window sample thickness
    std::vector<double> z_planes = uniform_planes(40, 10e-3);

    // n slab-center depths covering (0, gap): z_k = (k + 0.5) * gap / n.
    static std::vector<double> uniform_planes(int n, double gap);

    void validate() const;  // throws ConfigError

    double field_width() const { return sensor_width * pixel_pitch; }
    double field_height() const { return sensor_height * pixel_pitch; }
    double sample_volume_m3() const { return field_width() * field_height() * gap_depth; }
    double sample_volume_uL() const { return sample_volume_m3() * 1e9; }
    std::size_t pixels() const { return std::size_t(sensor_width) * sensor_height; }
    double plane_spacing() const;
};

// 2D complex optical field sampled on the sensor grid (or the matching
// frequency grid when it holds a transfer function).
struct ComplexField {
    int width = 0;
    int height = 0;
    AlignedVector<Complex> values;

    ComplexField() = default;
    ComplexField(int w, int h) : width(w), height(h), values(std::size_t(w) * h) {}

    Complex& at(int x, int y) { return values[std::size_t(y) * width + x]; }
    const Complex& at(int x, int y) const { return values[std::size_t(y) * width + x]; }
    std::size_t size() const { return values.size(); }
};

// Recorded (or synthesized) intensity frame, optionally geo-tagged with the
// vehicle pose at capture time.
struct Hologram {
    int width = 0;
    int height = 0;
    std::vector<double> intensity;
    double timestamp = 0.0;                        // s
    std::optional<std::array<double, 3>> pose;     // x, y, depth (m)

    Hologram() = default;
    Hologram(int w, int h) : width(w), height(h), intensity(std::size_t(w) * h, 0.0) {}

    double& at(int x, int y) { return intensity[std::size_t(y) * width + x]; }
    double at(int x, int y) const { return intensity[std::size_t(y) * width + x]; }
    std::size_t size() const { return intensity.size(); }

    void validate() const;  // dims positive, intensity >= 0 and finite
};

// Angular-spectrum transfer function for propagation over distance z:
// H(fx, fy) = exp(i 2 pi z sqrt(1/lambda^2 - fx^2 - fy^2)) on propagating
// frequencies, 0 on evanescent ones. Sampled on the DFT frequency grid
// (zero frequency at index 0) implied by pixel_pitch and the sensor dims.
ComplexField transfer_function(const OpticalConfig& config, double z);

// Free-space propagation: FFT, multiply by the transfer function, inverse
// FFT. Energy in the propagating band is conserved.
ComplexField propagate(const ComplexField& field, double z, const OpticalConfig& config);

namespace detail {
// Signed DFT frequency index: 0, 1, ..., n/2, -(n/2-1), ..., -1 for even n.
inline int signed_freq_index(int i, int n) { return i <= n / 2 ? i : i - n; }
}  // namespace detail

}  // namespace holo
