#include "gupsim/dispersion.hpp"

#include <cmath>
#include <stdexcept>

namespace gupsim {

void DispersionModel::validate() const {
    if (!(l_p > 0.0)) throw std::invalid_argument("DispersionModel: l_p must be > 0");
    if (!(c > 0.0)) throw std::invalid_argument("DispersionModel: c must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("DispersionModel: hbar must be > 0");
    if (!std::isfinite(alpha_prime))
        throw std::invalid_argument("DispersionModel: alpha_prime must be finite");
}

namespace {

double checked_denominator(double u, const char* what) {
    const double denom = 1.0 + u;
    if (std::fabs(denom) < kSingularityTol)
        throw DispersionSingularity(std::string(what) + ": 1 + alpha' l_p^2 k^2 vanishes");
    return denom;
}

}  // namespace

double gen_wavelength(double k, const DispersionModel& m) {
    if (!(k > 0.0)) throw std::invalid_argument("gen_wavelength: k must be > 0");
    const double lam = 1.0 / k + m.alpha_prime * m.l_p * m.l_p * k;
    if (!(lam > 0.0))
        throw NonPositiveWavelength("gen_wavelength: lambda_bar <= 0 at k=" + std::to_string(k));
    return lam;
}

double omega_exact(double k, const DispersionModel& m) {
    const double denom = checked_denominator(m.gup_term(k), "omega_exact");
    return k * m.c / denom;
}

double omega_first_order(double k, const DispersionModel& m) {
    return k * m.c * (1.0 - m.gup_term(k));
}

double group_velocity_exact(double k0, const DispersionModel& m) {
    const double u = m.gup_term(k0);
    const double denom = checked_denominator(u, "group_velocity_exact");
    return m.c * (1.0 - u) / (denom * denom);
}

double group_velocity_first_order(double k0, const DispersionModel& m) {
    return m.c * (1.0 - 3.0 * m.gup_term(k0));
}

double gvd_beta_exact(double k0, const DispersionModel& m) {
    // (1/2) omega'' = a c k (a k^2 - 3) / (1 + a k^2)^3, a = alpha' l_p^2.
    const double a = m.alpha_prime * m.l_p * m.l_p;
    const double u = m.gup_term(k0);
    const double denom = checked_denominator(u, "gvd_beta_exact");
    return a * m.c * k0 * (u - 3.0) / (denom * denom * denom);
}

double gvd_beta_first_order(double k0, const DispersionModel& m) {
    return -3.0 * m.alpha_prime * m.l_p * m.l_p * m.c * k0;
}

double omega_third_derivative(double k0, const DispersionModel& m) {
    // omega''' = -6 a c (u^2 - 6u + 1) / (1 + u)^4, u = a k^2.
    const double a = m.alpha_prime * m.l_p * m.l_p;
    const double u = m.gup_term(k0);
    const double denom = checked_denominator(u, "omega_third_derivative");
    const double d2 = denom * denom;
    return -6.0 * a * m.c * (u * u - 6.0 * u + 1.0) / (d2 * d2);
}

double effective_planck(double k, const DispersionModel& m) {
    return m.hbar * (1.0 - m.gup_term(k));
}

double energy_of_momentum(double p, const DispersionModel& m) {
    const double q = m.l_p * p / m.hbar;
    const double denom = 1.0 + m.alpha_prime * q * q;
    if (std::fabs(denom) < kSingularityTol)
        throw DispersionSingularity("energy_of_momentum: denominator vanishes");
    return p * m.c / denom;
}

DispersionSample sample_dispersion(double k, const DispersionModel& m) {
    return DispersionSample{k, omega_exact(k, m), group_velocity_exact(k, m),
                            gvd_beta_exact(k, m)};
}

}  // namespace gupsim
