#pragma once

#include <complex>
#include <cstdint>
#include <memory>

#include "holo/fft.hpp"
#include "holo/optics.hpp"

namespace holo {

template <typename Real>
struct ModelWorkspace {
    AlignedVector<std::complex<Real>> plane_spectra;  // planes x spectrum_size
};

// Linearized single-scattering forward model behind the regularized
// reconstruction:
//
//   A x = Re( sum_k P_{z_k -> 0}(x_k) )
//
// where x_k is the contrast distribution of plane k and P is angular-
// spectrum propagation. The kernel satisfies H(-f) = H(f), so taking the
// real part collapses each plane operator to a real symmetric filter with
// frequency response Re H_k = cos(2 pi z_k sqrt(1/lambda^2 - f^2)) (zero on
// evanescent frequencies). Each plane operator is therefore self-adjoint,
// A^T y = { plane filters applied to y }, and the whole model runs on
// half-spectrum real transforms.
//
// Spectrum-domain convention: forward_spectrum() returns exactly the r2c
// spectrum of the forward image, so residuals can be formed and measured in
// the frequency domain without extra transforms.
template <typename Real>
class ContrastModel {
public:
    explicit ContrastModel(const OpticalConfig& config);

    int width() const { return width_; }
    int height() const { return height_; }
    int planes() const { return planes_; }
    std::size_t image_size() const { return std::size_t(width_) * height_; }
    std::size_t volume_size() const { return image_size() * planes_; }
    std::size_t spectrum_size() const { return fft_->spectrum_size(); }

    ModelWorkspace<Real> make_workspace() const;

    // Image-domain operators (tests, power iteration). Buffers must be
    // FFTW-aligned (AlignedVector).
    void forward(const Real* volume, Real* image) const;
    void adjoint(const Real* image, Real* volume) const;

    // Fast path. forward_spectrum fills `out` with r2c(A x); adjoint
    // consumes an r2c image spectrum (e.g. the residual r2c(Ay) - r2c(b)).
    void image_spectrum(const Real* image, std::complex<Real>* out) const;
    void forward_spectrum(const Real* volume, std::complex<Real>* out,
                          ModelWorkspace<Real>& ws) const;
    void adjoint_from_spectrum(const std::complex<Real>* spectrum, Real* volume,
                               ModelWorkspace<Real>& ws) const;

    // ||s||^2 weighted so it equals the image-domain squared L2 norm of the
    // signal whose r2c spectrum is s (Hermitian column weights, then 1/N).
    double spectrum_norm2(const std::complex<Real>* s) const;

    // Exact operator norm ||A||^2 = max_f sum_k cos^2; the per-frequency
    // Gram matrix is rank one, so this is closed form.
    double lipschitz_upper_bound() const;

    // ||A||^2 estimated by power iteration on A^T A from a seeded random
    // start; converges to the bound from below.
    double estimate_lipschitz(int power_iterations, std::uint64_t seed = 0x9D1C4F52ULL) const;

private:
    int width_;
    int height_;
    int planes_;
    std::shared_ptr<const Fft2<Real>> fft_;
    AlignedVector<Real> cos_tf_;  // planes x spectrum_size
};

}  // namespace holo
