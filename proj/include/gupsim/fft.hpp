#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gupsim::fft {

// Unnormalized forward DFT: out[j] = sum_i in[i] e^{-2 pi i ij/n}.
std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in);

// Unnormalized inverse DFT: out[i] = sum_j in[j] e^{+2 pi i ij/n}.
std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in);

// Signed mode index for bin j of an n-point DFT: j for j < n/2, j - n otherwise.
inline long mode_index(std::size_t j, std::size_t n) {
    return j < n / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
}

// Angular wave number of DFT bin j on a grid with spacing dx.
inline double mode_k(std::size_t j, std::size_t n, double dx) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return two_pi * static_cast<double>(mode_index(j, n)) / (static_cast<double>(n) * dx);
}

}  // namespace gupsim::fft
