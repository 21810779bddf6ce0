#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace vsaogm::detail {
namespace {

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> fftw_alloc(std::size_t n) {
    return FftwBuffer<T>(static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1))));
}

struct PlanPair {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

// Plans are created once per size under a lock (FFTW planning is not
// thread-safe) and executed on call-local buffers through the new-array
// interface, which is. FFTW_ESTIMATE keeps plans, and so results,
// deterministic from run to run.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [dim, plans] : plans_) {
            fftw_destroy_plan(plans.r2c);
            fftw_destroy_plan(plans.c2r);
        }
    }

    PlanPair get(std::size_t dim) {
        std::lock_guard lock(mutex_);
        if (auto it = plans_.find(dim); it != plans_.end()) return it->second;

        auto real = fftw_alloc<double>(dim);
        auto cplx = fftw_alloc<fftw_complex>(half_spectrum_size(dim));
        const int n = static_cast<int>(dim);
        PlanPair plans;
        plans.r2c = fftw_plan_dft_r2c_1d(n, real.get(), cplx.get(), FFTW_ESTIMATE);
        plans.c2r = fftw_plan_dft_c2r_1d(n, cplx.get(), real.get(), FFTW_ESTIMATE);
        plans_.emplace(dim, plans);
        return plans;
    }

private:
    std::mutex mutex_;
    std::map<std::size_t, PlanPair> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

}  // namespace

Spectrum forward_dft(std::span<const double> signal) {
    const std::size_t dim = signal.size();
    const std::size_t half = half_spectrum_size(dim);
    auto real = fftw_alloc<double>(dim);
    auto cplx = fftw_alloc<fftw_complex>(half);
    std::copy(signal.begin(), signal.end(), real.get());
    fftw_execute_dft_r2c(plan_cache().get(dim).r2c, real.get(), cplx.get());

    Spectrum out(half);
    for (std::size_t k = 0; k < half; ++k) out[k] = {cplx[k][0], cplx[k][1]};
    return out;
}

std::vector<double> inverse_dft(std::span<const std::complex<double>> half_spectrum,
                                std::size_t dim) {
    const std::size_t half = half_spectrum_size(dim);
    auto real = fftw_alloc<double>(dim);
    auto cplx = fftw_alloc<fftw_complex>(half);
    for (std::size_t k = 0; k < half; ++k) {
        cplx[k][0] = half_spectrum[k].real();
        cplx[k][1] = half_spectrum[k].imag();
    }
    // c2r overwrites its input; cplx is scratch.
    fftw_execute_dft_c2r(plan_cache().get(dim).c2r, cplx.get(), real.get());

    const double scale = 1.0 / static_cast<double>(dim);
    std::vector<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = real[i] * scale;
    return out;
}

}  // namespace vsaogm::detail
