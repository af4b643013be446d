#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fnls/field.hpp"

namespace fnls {
namespace detail {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// FFTW_ESTIMATE keeps plan selection deterministic run to run;
// FFTW_UNALIGNED lets one plan serve any caller buffer.
PlanPair& plans_for(const Grid& g) {
    static std::map<std::pair<int, int>, PlanPair> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(g.d, g.n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::complex<double>> scratch(g.size());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    int dims[3] = {g.n, g.n, g.n};
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair pair;
    pair.fwd = fftw_plan_dft(g.d, dims, buf, buf, FFTW_FORWARD, flags);
    pair.bwd = fftw_plan_dft(g.d, dims, buf, buf, FFTW_BACKWARD, flags);
    if (!pair.fwd || !pair.bwd) throw std::runtime_error("fftw plan creation failed");
    return cache.emplace(key, pair).first->second;
}

}  // namespace

void fft_forward(const Grid& g, std::complex<double>* data) {
    auto& plans = plans_for(g);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plans.fwd, buf, buf);
    const double scale = 1.0 / static_cast<double>(g.size());
    const std::size_t total = g.size();
    for (std::size_t i = 0; i < total; ++i) data[i] *= scale;
}

void fft_backward(const Grid& g, std::complex<double>* data) {
    auto& plans = plans_for(g);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plans.bwd, buf, buf);
}

}  // namespace detail
}  // namespace fnls
