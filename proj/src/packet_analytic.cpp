#include "gupsim/packet_analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace gupsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void GaussianPacketSpec::validate() const {
    if (!(alpha > 0.0))
        throw std::invalid_argument("GaussianPacketSpec: alpha must be > 0");
    if (!std::isfinite(k0))
        throw std::invalid_argument("GaussianPacketSpec: k0 must be finite");
}

QuadraticPropagator QuadraticPropagator::from_model(double k0, const DispersionModel& m) {
    return QuadraticPropagator{omega_exact(k0, m), group_velocity_exact(k0, m),
                               gvd_beta_exact(k0, m)};
}

std::complex<double> analytic_field(double x, double t, const GaussianPacketSpec& spec,
                                    const QuadraticPropagator& prop) {
    spec.validate();
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> q(spec.alpha, prop.beta * t);  // alpha + i beta t
    const double xi = x - prop.v_g * t;
    const std::complex<double> carrier = std::exp(i * (spec.k0 * x - prop.omega0 * t));
    // alpha > 0 keeps q in the right half-plane; principal sqrt is continuous in t.
    return carrier * std::sqrt(kPi / q) * std::exp(-xi * xi / (4.0 * q));
}

double analytic_intensity(double x, double t, const GaussianPacketSpec& spec,
                          const QuadraticPropagator& prop) {
    spec.validate();
    const double a = spec.alpha;
    const double bt = prop.beta * t;
    const double denom = a * a + bt * bt;
    const double xi = x - prop.v_g * t;
    return std::sqrt(kPi * kPi / denom) * std::exp(-a * xi * xi / (2.0 * denom));
}

double width_ratio(double t, const GaussianPacketSpec& spec, const QuadraticPropagator& prop) {
    spec.validate();
    const double r = prop.beta * t / spec.alpha;
    return std::sqrt(1.0 + r * r);
}

double gup_width_exact(double t, const GaussianPacketSpec& spec, const DispersionModel& m) {
    QuadraticPropagator prop = QuadraticPropagator::from_model(spec.k0, m);
    return spec.initial_rms_width() * width_ratio(t, spec, prop);
}

double gup_width_paper_first_order(double t, const GaussianPacketSpec& spec,
                                   const DispersionModel& m) {
    spec.validate();
    const double term =
        3.0 * m.alpha_prime * m.l_p * m.l_p * m.c * spec.k0 * t * t / (spec.alpha * spec.alpha);
    const double radicand = 1.0 - term;
    if (radicand < 0.0)
        throw NegativeRadicand("gup_width_paper_first_order: radicand < 0 at t=" +
                               std::to_string(t));
    return spec.initial_rms_width() * std::sqrt(radicand);
}

}  // namespace gupsim
