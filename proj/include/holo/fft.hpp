#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace holo {

// Allocator backed by fftw_malloc so buffers keep the alignment FFTW's SIMD
// codelets expect.
template <typename T>
struct FftwAllocator {
    using value_type = T;

    FftwAllocator() = default;
    template <typename U>
    FftwAllocator(const FftwAllocator<U>&) noexcept {}

    T* allocate(std::size_t n) { return static_cast<T*>(fftw_malloc(n * sizeof(T))); }
    void deallocate(T* p, std::size_t) noexcept { fftw_free(p); }

    template <typename U>
    bool operator==(const FftwAllocator<U>&) const noexcept { return true; }
};

template <typename T>
using AlignedVector = std::vector<T, FftwAllocator<T>>;

// 2D DFTs of a fixed size, double or float. Plans are FFTW_ESTIMATE so the
// chosen algorithm (and hence rounding) is reproducible run to run. Plan
// creation is serialized internally; execution on distinct aligned buffers
// is safe from multiple threads.
//
// All transforms are unnormalized (a forward/inverse round trip scales by
// width*height).
template <typename Real>
class Fft2 {
public:
    Fft2(int width, int height);
    ~Fft2();

    Fft2(const Fft2&) = delete;
    Fft2& operator=(const Fft2&) = delete;

    void forward(const std::complex<Real>* in, std::complex<Real>* out) const;
    void inverse(const std::complex<Real>* in, std::complex<Real>* out) const;

    // Half-spectrum transforms for real data. Spectrum layout is
    // height rows by (width/2 + 1) columns, row-major.
    void forward_r2c(const Real* in, std::complex<Real>* out) const;
    // Note: FFTW's multidimensional c2r clobbers its input buffer.
    void inverse_c2r(std::complex<Real>* in, Real* out) const;

    int width() const { return width_; }
    int height() const { return height_; }
    int spectrum_cols() const { return width_ / 2 + 1; }
    std::size_t pixels() const { return std::size_t(width_) * height_; }
    std::size_t spectrum_size() const { return std::size_t(height_) * spectrum_cols(); }

private:
    struct Plans;
    int width_;
    int height_;
    std::unique_ptr<Plans> plans_;
};

// Shared per-size instances; plans are built once and reused.
template <typename Real>
std::shared_ptr<const Fft2<Real>> fft_cache(int width, int height);

}  // namespace holo
