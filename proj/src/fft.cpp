#include "holo/fft.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace holo {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

template <typename Real>
struct Api;

template <>
struct Api<double> {
    using complex = fftw_complex;
    using plan = fftw_plan;
    static constexpr auto plan_c2c = fftw_plan_dft_2d;
    static constexpr auto plan_r2c = fftw_plan_dft_r2c_2d;
    static constexpr auto plan_c2r = fftw_plan_dft_c2r_2d;
    static constexpr auto exec_c2c = fftw_execute_dft;
    static constexpr auto exec_r2c = fftw_execute_dft_r2c;
    static constexpr auto exec_c2r = fftw_execute_dft_c2r;
    static constexpr auto destroy = fftw_destroy_plan;
};

template <>
struct Api<float> {
    using complex = fftwf_complex;
    using plan = fftwf_plan;
    static constexpr auto plan_c2c = fftwf_plan_dft_2d;
    static constexpr auto plan_r2c = fftwf_plan_dft_r2c_2d;
    static constexpr auto plan_c2r = fftwf_plan_dft_c2r_2d;
    static constexpr auto exec_c2c = fftwf_execute_dft;
    static constexpr auto exec_r2c = fftwf_execute_dft_r2c;
    static constexpr auto exec_c2r = fftwf_execute_dft_c2r;
    static constexpr auto destroy = fftwf_destroy_plan;
};

template <typename Real>
typename Api<Real>::complex* cast(std::complex<Real>* p) {
    return reinterpret_cast<typename Api<Real>::complex*>(p);
}

template <typename Real>
typename Api<Real>::complex* cast(const std::complex<Real>* p) {
    return reinterpret_cast<typename Api<Real>::complex*>(const_cast<std::complex<Real>*>(p));
}

}  // namespace

template <typename Real>
struct Fft2<Real>::Plans {
    typename Api<Real>::plan fwd{};
    typename Api<Real>::plan bwd{};
    typename Api<Real>::plan r2c{};
    typename Api<Real>::plan c2r{};
};

template <typename Real>
Fft2<Real>::Fft2(int width, int height)
    : width_(width), height_(height), plans_(std::make_unique<Plans>()) {
    // FFTW takes (n0, n1) = (rows, cols); our arrays are height rows of
    // width columns.
    AlignedVector<std::complex<Real>> ca(pixels());
    AlignedVector<std::complex<Real>> cb(pixels());
    AlignedVector<Real> ra(pixels());
    AlignedVector<std::complex<Real>> sa(spectrum_size());

    std::lock_guard<std::mutex> lock(planner_mutex());
    plans_->fwd = Api<Real>::plan_c2c(height_, width_, cast<Real>(ca.data()), cast<Real>(cb.data()),
                                      FFTW_FORWARD, FFTW_ESTIMATE);
    plans_->bwd = Api<Real>::plan_c2c(height_, width_, cast<Real>(ca.data()), cast<Real>(cb.data()),
                                      FFTW_BACKWARD, FFTW_ESTIMATE);
    plans_->r2c = Api<Real>::plan_r2c(height_, width_, ra.data(), cast<Real>(sa.data()), FFTW_ESTIMATE);
    plans_->c2r = Api<Real>::plan_c2r(height_, width_, cast<Real>(sa.data()), ra.data(), FFTW_ESTIMATE);
}

template <typename Real>
Fft2<Real>::~Fft2() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    Api<Real>::destroy(plans_->fwd);
    Api<Real>::destroy(plans_->bwd);
    Api<Real>::destroy(plans_->r2c);
    Api<Real>::destroy(plans_->c2r);
}

template <typename Real>
void Fft2<Real>::forward(const std::complex<Real>* in, std::complex<Real>* out) const {
    Api<Real>::exec_c2c(plans_->fwd, cast<Real>(in), cast<Real>(out));
}

template <typename Real>
void Fft2<Real>::inverse(const std::complex<Real>* in, std::complex<Real>* out) const {
    Api<Real>::exec_c2c(plans_->bwd, cast<Real>(in), cast<Real>(out));
}

template <typename Real>
void Fft2<Real>::forward_r2c(const Real* in, std::complex<Real>* out) const {
    Api<Real>::exec_r2c(plans_->r2c, const_cast<Real*>(in), cast<Real>(out));
}

template <typename Real>
void Fft2<Real>::inverse_c2r(std::complex<Real>* in, Real* out) const {
    Api<Real>::exec_c2r(plans_->c2r, cast<Real>(in), out);
}

template <typename Real>
std::shared_ptr<const Fft2<Real>> fft_cache(int width, int height) {
    static std::mutex m;
    static std::map<std::pair<int, int>, std::weak_ptr<const Fft2<Real>>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[{width, height}];
    if (auto existing = slot.lock()) return existing;
    auto fresh = std::make_shared<const Fft2<Real>>(width, height);
    slot = fresh;
    return fresh;
}

template class Fft2<double>;
template class Fft2<float>;
template std::shared_ptr<const Fft2<double>> fft_cache<double>(int, int);
template std::shared_ptr<const Fft2<float>> fft_cache<float>(int, int);

}  // namespace holo
