#include "gupsim/spectral_evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gupsim/fft.hpp"

namespace gupsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_pole_guard(const KGrid& kgrid, const DispersionModel& m) {
    if (m.alpha_prime >= 0.0) return;
    const double k_pole = 1.0 / (m.l_p * std::sqrt(-m.alpha_prime));
    const double guard = kPoleGuardCells * kgrid.dk();
    for (std::size_t j = 0; j < kgrid.n; ++j) {
        if (std::fabs(std::fabs(kgrid.node(j)) - k_pole) < guard)
            throw DispersionSingularity(
                "k-grid node within the pole guard band at |k|=" + std::to_string(k_pole));
    }
}
}  // namespace

std::vector<double> KGrid::nodes() const {
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = node(j);
    return out;
}

void KGrid::validate() const {
    if (!(k_max > k_min)) throw std::invalid_argument("KGrid: k_max must exceed k_min");
    if (n < 2 || !is_power_of_two(n))
        throw std::invalid_argument("KGrid: n must be a power of two >= 2");
}

void XGrid::validate() const {
    if (!(dx > 0.0)) throw std::invalid_argument("XGrid: dx must be > 0");
    if (n < 2) throw std::invalid_argument("XGrid: n must be >= 2");
}

void FieldSnapshot::validate() const {
    if (!(dx > 0.0)) throw std::invalid_argument("FieldSnapshot: dx must be > 0");
    if (values.size() < 2) throw std::invalid_argument("FieldSnapshot: need >= 2 samples");
}

Spectrum sample_spectrum(const GaussianPacketSpec& spec, const KGrid& grid, double n_sigma) {
    spec.validate();
    grid.validate();
    const double half_window = n_sigma / std::sqrt(2.0 * spec.alpha);
    if (spec.k0 - half_window < grid.k_min || spec.k0 + half_window > grid.k_max)
        throw GridCoverage("sample_spectrum: k-grid does not cover k0 +- " +
                           std::to_string(n_sigma) + " sigma window");
    Spectrum g(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double dkj = grid.node(j) - spec.k0;
        g[j] = std::exp(-spec.alpha * dkj * dkj);
    }
    return g;
}

bool grids_conjugate(const KGrid& kgrid, const XGrid& xgrid) {
    if (kgrid.n != xgrid.n || !is_power_of_two(kgrid.n)) return false;
    const double prod = kgrid.dk() * xgrid.dx * static_cast<double>(kgrid.n);
    return std::fabs(prod - kTwoPi) < 1e-9 * kTwoPi;
}

FieldSnapshot synthesize_direct(const Spectrum& g, const KGrid& kgrid, const OmegaFn& omega,
                                double t, const XGrid& xgrid) {
    kgrid.validate();
    xgrid.validate();
    if (g.size() != kgrid.n)
        throw std::invalid_argument("synthesize: spectrum size does not match k-grid");
    const double dk = kgrid.dk();
    // Evolved spectral weights g_j e^{-i omega_j t} dk.
    std::vector<std::complex<double>> w(kgrid.n);
    for (std::size_t j = 0; j < kgrid.n; ++j) {
        const double om = omega(kgrid.node(j));
        w[j] = g[j] * std::polar(dk, -om * t);
    }
    FieldSnapshot out;
    out.x0 = xgrid.x0;
    out.dx = xgrid.dx;
    out.t = t;
    out.values.resize(xgrid.n);
    for (std::size_t i = 0; i < xgrid.n; ++i) {
        const double x = xgrid.node(i);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < kgrid.n; ++j)
            acc += w[j] * std::polar(1.0, kgrid.node(j) * x);
        out.values[i] = acc;
    }
    return out;
}

FieldSnapshot synthesize_with(const Spectrum& g, const KGrid& kgrid, const OmegaFn& omega,
                              double t, const XGrid& xgrid) {
    if (!grids_conjugate(kgrid, xgrid)) return synthesize_direct(g, kgrid, omega, t, xgrid);
    kgrid.validate();
    xgrid.validate();
    if (g.size() != kgrid.n)
        throw std::invalid_argument("synthesize: spectrum size does not match k-grid");
    const double dk = kgrid.dk();
    const double k_start = kgrid.node(0);
    // With dk*dx = 2pi/n the sum over nodes factors through a DFT:
    // f(x_i) = dk e^{i k_start x_i} sum_j [g_j e^{-i omega_j t} e^{i j dk x0}] e^{2pi i ij/n}.
    std::vector<std::complex<double>> h(kgrid.n);
    for (std::size_t j = 0; j < kgrid.n; ++j) {
        const double om = omega(kgrid.node(j));
        h[j] = g[j] * std::polar(1.0, -om * t + static_cast<double>(j) * dk * xgrid.x0);
    }
    auto s = fft::inverse(h);
    FieldSnapshot out;
    out.x0 = xgrid.x0;
    out.dx = xgrid.dx;
    out.t = t;
    out.values.resize(xgrid.n);
    for (std::size_t i = 0; i < xgrid.n; ++i)
        out.values[i] = s[i] * std::polar(dk, k_start * xgrid.node(i));
    return out;
}

FieldSnapshot synthesize(const Spectrum& g, const KGrid& kgrid, const DispersionModel& m,
                         double t, const XGrid& xgrid) {
    m.validate();
    check_pole_guard(kgrid, m);
    return synthesize_with(
        g, kgrid, [&m](double k) { return omega_exact(k, m); }, t, xgrid);
}

PacketStats compute_stats(const FieldSnapshot& f, double tail_threshold) {
    f.validate();
    const std::size_t n = f.values.size();
    std::vector<double> intensity(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        intensity[i] = std::norm(f.values[i]);
        peak = std::max(peak, intensity[i]);
    }
    if (peak <= 0.0) throw std::invalid_argument("compute_stats: zero field");
    if (intensity.front() > tail_threshold * peak || intensity.back() > tail_threshold * peak)
        throw TailLeak("compute_stats: boundary intensity above tail threshold");
    // Trapezoid moments on the uniform grid.
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        const double x = f.x0 + static_cast<double>(i) * f.dx;
        const double wi = w * intensity[i];
        m0 += wi;
        m1 += wi * x;
        m2 += wi * x * x;
    }
    m0 *= f.dx;
    m1 *= f.dx;
    m2 *= f.dx;
    PacketStats st;
    st.norm = m0;
    st.centroid = m1 / m0;
    const double var = m2 / m0 - st.centroid * st.centroid;
    st.rms_width = std::sqrt(std::max(var, 0.0));
    return st;
}

EvolutionSeries evolve_series(const GaussianPacketSpec& spec, const DispersionModel& m,
                              const std::vector<double>& times, const KGrid& kgrid,
                              const XGrid& xgrid) {
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("evolve_series: times must be strictly increasing");
    EvolutionSeries series;
    if (times.empty()) return series;
    const Spectrum g = sample_spectrum(spec, kgrid);
    series.snapshots.reserve(times.size());
    series.stats.reserve(times.size());
    for (double t : times) {
        FieldSnapshot snap = synthesize(g, kgrid, m, t, xgrid);
        series.stats.push_back(compute_stats(snap));
        series.snapshots.push_back(std::move(snap));
    }
    return series;
}

VelocityFit measure_group_velocity(const EvolutionSeries& series) {
    const std::size_t n = series.snapshots.size();
    if (n < 3)
        throw std::invalid_argument("measure_group_velocity: need at least 3 snapshots");
    double t_mean = 0.0, c_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        t_mean += series.snapshots[i].t;
        c_mean += series.stats[i].centroid;
    }
    t_mean /= static_cast<double>(n);
    c_mean /= static_cast<double>(n);
    double stt = 0.0, stc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = series.snapshots[i].t - t_mean;
        stt += dt * dt;
        stc += dt * (series.stats[i].centroid - c_mean);
    }
    if (stt == 0.0) throw DegenerateFit("measure_group_velocity: times are not distinct");
    VelocityFit fit;
    fit.v_g = stc / stt;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = c_mean + fit.v_g * (series.snapshots[i].t - t_mean);
        const double r = series.stats[i].centroid - pred;
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / static_cast<double>(n));
    return fit;
}

BroadeningReport measure_broadening(const EvolutionSeries& series,
                                    const std::vector<double>& predicted_widths) {
    if (predicted_widths.size() != series.stats.size())
        throw std::invalid_argument("measure_broadening: prediction list length mismatch");
    BroadeningReport rep;
    rep.rel_dev.reserve(series.stats.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < series.stats.size(); ++i) {
        if (!(predicted_widths[i] > 0.0))
            throw std::invalid_argument("measure_broadening: predicted width must be > 0");
        const double dev =
            std::fabs(series.stats[i].rms_width - predicted_widths[i]) / predicted_widths[i];
        rep.rel_dev.push_back(dev);
        rep.max_dev = std::max(rep.max_dev, dev);
        sum += dev;
    }
    rep.mean_dev = series.stats.empty() ? 0.0 : sum / static_cast<double>(series.stats.size());
    return rep;
}

double validated_time_window(const GaussianPacketSpec& spec, const DispersionModel& m,
                             double phase_tol) {
    spec.validate();
    const double d3 = std::fabs(omega_third_derivative(spec.k0, m));
    const double dk3 = std::pow(3.0 * spec.sigma_k(), 3.0);
    if (d3 * dk3 == 0.0) return std::numeric_limits<double>::infinity();
    return phase_tol * 6.0 / (d3 * dk3);
}

}  // namespace gupsim
