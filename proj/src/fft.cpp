#include "gsqg/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gsqg::detail {
namespace {

std::mutex planner_mutex;

struct PlanSet {
    int n = 0;
    fftw_complex* buf_in = nullptr;
    fftw_complex* buf_out = nullptr;
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
    std::mutex exec_mutex; // buffers are shared scratch, one transform at a time

    explicit PlanSet(int n_) : n(n_) {
        const std::size_t count = static_cast<std::size_t>(n) * n;
        buf_in = fftw_alloc_complex(count);
        buf_out = fftw_alloc_complex(count);
        if (!buf_in || !buf_out) throw std::bad_alloc();
        forward = fftw_plan_dft_2d(n, n, buf_in, buf_out, FFTW_FORWARD, FFTW_MEASURE);
        backward = fftw_plan_dft_2d(n, n, buf_in, buf_out, FFTW_BACKWARD, FFTW_MEASURE);
        if (!forward || !backward) throw std::runtime_error("FFTW plan creation failed");
    }
    ~PlanSet() {
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
        fftw_free(buf_in);
        fftw_free(buf_out);
    }
    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;
};

PlanSet& plans_for(int n) {
    static std::map<int, std::unique_ptr<PlanSet>>* registry =
        new std::map<int, std::unique_ptr<PlanSet>>();
    std::lock_guard lock(planner_mutex);
    auto it = registry->find(n);
    if (it == registry->end())
        it = registry->emplace(n, std::make_unique<PlanSet>(n)).first;
    return *it->second;
}

void execute(int n, const std::complex<double>* in, std::complex<double>* out,
             bool forward) {
    PlanSet& p = plans_for(n);
    const std::size_t count = static_cast<std::size_t>(n) * n;
    std::lock_guard lock(p.exec_mutex);
    for (std::size_t i = 0; i < count; ++i) {
        p.buf_in[i][0] = in[i].real();
        p.buf_in[i][1] = in[i].imag();
    }
    fftw_execute(forward ? p.forward : p.backward);
    if (forward) {
        const double scale = 1.0 / static_cast<double>(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = std::complex<double>(p.buf_out[i][0], p.buf_out[i][1]) * scale;
    } else {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = std::complex<double>(p.buf_out[i][0], p.buf_out[i][1]);
    }
}

} // namespace

void fft_forward(int n, const std::complex<double>* in, std::complex<double>* out) {
    execute(n, in, out, true);
}

void fft_backward(int n, const std::complex<double>* in, std::complex<double>* out) {
    execute(n, in, out, false);
}

} // namespace gsqg::detail
