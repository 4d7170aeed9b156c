#pragma once

#include <string>

#include "gupsim/errors.hpp"

namespace gupsim {

// GUP-modified dispersion medium. Natural units by default (c = hbar = l_p = 1),
// so alpha_prime * l_p^2 * k^2 is the single control parameter.
struct DispersionModel {
    double alpha_prime = 0.0;  // dimensionless, any sign
    double l_p = 1.0;          // Planck length
    double c = 1.0;
    double hbar = 1.0;

    // alpha' l_p^2 k^2, the deformation parameter at wave number k.
    double gup_term(double k) const { return alpha_prime * l_p * l_p * k * k; }

    void validate() const;
};

struct DispersionSample {
    double k = 0.0;
    double omega = 0.0;
    double v_g = 0.0;
    double beta = 0.0;
};

// |1 + alpha' l_p^2 k^2| below this raises DispersionSingularity.
inline constexpr double kSingularityTol = 1e-12;

// lambda_bar(k) = 1/k + alpha' l_p^2 k. Throws NonPositiveWavelength if <= 0.
double gen_wavelength(double k, const DispersionModel& m);

// omega(k) = k c / (1 + alpha' l_p^2 k^2), odd in k.
double omega_exact(double k, const DispersionModel& m);

// omega(k) ~ k c (1 - alpha' l_p^2 k^2), first order in alpha'.
double omega_first_order(double k, const DispersionModel& m);

// v_g(k0) = c (1 - alpha' l_p^2 k0^2) / (1 + alpha' l_p^2 k0^2)^2.
double group_velocity_exact(double k0, const DispersionModel& m);

// v_g(k0) ~ c (1 - 3 alpha' l_p^2 k0^2).
double group_velocity_first_order(double k0, const DispersionModel& m);

// beta(k0) = (1/2) d^2 omega / dk^2 at k0.
double gvd_beta_exact(double k0, const DispersionModel& m);

// beta(k0) ~ -3 alpha' l_p^2 c k0.
double gvd_beta_first_order(double k0, const DispersionModel& m);

// d^3 omega / dk^3 at k0; used for validated-time-window estimates.
double omega_third_derivative(double k0, const DispersionModel& m);

// hbar'(k) = hbar (1 - alpha' l_p^2 k^2).
double effective_planck(double k, const DispersionModel& m);

// E'(p) = p c / (1 + alpha' (l_p p / hbar)^2).
double energy_of_momentum(double p, const DispersionModel& m);

// omega, v_g, beta bundled at one wave number.
DispersionSample sample_dispersion(double k, const DispersionModel& m);

}  // namespace gupsim
