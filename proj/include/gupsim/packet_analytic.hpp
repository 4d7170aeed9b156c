#pragma once

#include <cmath>
#include <complex>

#include "gupsim/dispersion.hpp"

namespace gupsim {

// Gaussian spectral amplitude g(k) = exp(-alpha (k - k0)^2).
struct GaussianPacketSpec {
    double alpha = 1.0;  // length^2, must be > 0
    double k0 = 0.0;     // carrier wave number

    // RMS width of |g|^2 about k0.
    double sigma_k() const { return 1.0 / (2.0 * std::sqrt(alpha)); }
    // RMS position width of the t=0 intensity.
    double initial_rms_width() const { return std::sqrt(alpha); }

    void validate() const;
};

// Truncated Taylor data of omega(k) about the carrier.
struct QuadraticPropagator {
    double omega0 = 0.0;
    double v_g = 0.0;
    double beta = 0.0;

    static QuadraticPropagator from_model(double k0, const DispersionModel& m);
};

// f(x,t) = e^{i(k0 x - w0 t)} sqrt(pi/(alpha + i beta t))
//          e^{-(x - v_g t)^2 / (4 (alpha + i beta t))}.
std::complex<double> analytic_field(double x, double t, const GaussianPacketSpec& spec,
                                    const QuadraticPropagator& prop);

// |f|^2 = sqrt(pi^2/(alpha^2 + beta^2 t^2))
//         e^{-alpha (x - v_g t)^2 / (2 (alpha^2 + beta^2 t^2))}.
double analytic_intensity(double x, double t, const GaussianPacketSpec& spec,
                          const QuadraticPropagator& prop);

// (dx)_t / (dx)_0 = sqrt(1 + beta^2 t^2 / alpha^2).
double width_ratio(double t, const GaussianPacketSpec& spec, const QuadraticPropagator& prop);

// RMS width at t with beta from the full dispersion expression.
double gup_width_exact(double t, const GaussianPacketSpec& spec, const DispersionModel& m);

// The printed first-order width formula, implemented verbatim as a diagnostic:
// (dx)_0 sqrt(1 - 3 alpha' l_p^2 c k0 t^2 / alpha^2).
// Throws NegativeRadicand when the formula leaves its domain.
double gup_width_paper_first_order(double t, const GaussianPacketSpec& spec,
                                   const DispersionModel& m);

}  // namespace gupsim
