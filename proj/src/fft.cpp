#include "gupsim/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace gupsim::fft {

namespace {

// FFTW planning is not thread-safe; execution of independent plans is.
std::mutex plan_mutex;

std::vector<std::complex<double>> transform(const std::vector<std::complex<double>>& in,
                                            int sign) {
    const std::size_t n = in.size();
    if (n == 0) throw std::invalid_argument("fft: empty input");
    std::vector<std::complex<double>> out(n);
    auto* in_ptr = const_cast<fftw_complex*>(reinterpret_cast<const fftw_complex*>(in.data()));
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(n), in_ptr, out_ptr, sign,
                                FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    if (!plan) throw std::runtime_error("fft: fftw_plan_dft_1d failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in) {
    return transform(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in) {
    return transform(in, FFTW_BACKWARD);
}

}  // namespace gupsim::fft
